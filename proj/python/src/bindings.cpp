#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wlz/corpus.hpp"
#include "wlz/error.hpp"
#include "wlz/pipeline.hpp"
#include "wlz/tokenizer.hpp"

namespace py = pybind11;
using namespace wlz;

namespace {

std::string_view view_of(const py::bytes& b) {
  char* data = nullptr;
  Py_ssize_t size = 0;
  if (PyBytes_AsStringAndSize(b.ptr(), &data, &size) != 0) throw py::error_already_set();
  return {data, static_cast<std::size_t>(size)};
}

template <class Get, class Set>
void string_property(py::class_<CodecConfig>& cls, const char* name, Get get, Set set) {
  cls.def_property(
      name, [get](const CodecConfig& c) { return std::string(get(c)); },
      [set](CodecConfig& c, const std::string& v) { set(c, v); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word-based LZ77/LZSS text compression";

  static py::exception<Error> error(m, "Error");
  static py::exception<ConfigError> config_error(m, "ConfigError", error.ptr());
  static py::exception<CorruptError> corrupt_error(m, "CorruptError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    } catch (const DomainError& e) {
      py::set_error(config_error, e.what());
    } catch (const CorruptError& e) {
      py::set_error(corrupt_error, e.what());
    } catch (const FormatError& e) {
      py::set_error(corrupt_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<CodecConfig> cfg(m, "Config");
  cfg.def(py::init<>())
      .def_static("direct_bit", &CodecConfig::direct_bit)
      .def_property(
          "window_log2", [](const CodecConfig& c) { return c.window.window_log2; },
          [](CodecConfig& c, unsigned v) { c.window.window_log2 = v; })
      .def_property(
          "max_match", [](const CodecConfig& c) { return c.window.max_match; },
          [](CodecConfig& c, unsigned v) { c.window.max_match = v; })
      .def_property(
          "min_match", [](const CodecConfig& c) { return c.window.min_match; },
          [](CodecConfig& c, unsigned v) { c.window.min_match = v; })
      .def_property(
          "max_chain", [](const CodecConfig& c) { return c.window.max_chain; },
          [](CodecConfig& c, unsigned v) { c.window.max_chain = v; })
      .def_property(
          "table_bits", [](const CodecConfig& c) { return c.window.table_bits; },
          [](CodecConfig& c, unsigned v) { c.window.table_bits = v; })
      .def_readwrite("bblock_base_log2", &CodecConfig::bblock_base_log2)
      .def("validate", &CodecConfig::validate)
      .def("describe", &CodecConfig::describe)
      .def("__eq__", [](const CodecConfig& a, const CodecConfig& b) { return a == b; })
      .def("__repr__", [](const CodecConfig& c) { return "Config(" + c.describe() + ")"; });
  string_property(
      cfg, "variant", [](const CodecConfig& c) { return to_string(c.variant); },
      [](CodecConfig& c, const std::string& v) { c.variant = parse_variant(v); });
  string_property(
      cfg, "structure", [](const CodecConfig& c) { return to_string(c.window.structure); },
      [](CodecConfig& c, const std::string& v) { c.window.structure = parse_structure(v); });
  string_property(
      cfg, "offset_coder", [](const CodecConfig& c) { return to_string(c.offset_coder); },
      [](CodecConfig& c, const std::string& v) { c.offset_coder = parse_coder_kind(v); });
  string_property(
      cfg, "length_coder", [](const CodecConfig& c) { return to_string(c.length_coder); },
      [](CodecConfig& c, const std::string& v) { c.length_coder = parse_coder_kind(v); });
  string_property(
      cfg, "literal_coder", [](const CodecConfig& c) { return to_string(c.literal_coder); },
      [](CodecConfig& c, const std::string& v) { c.literal_coder = parse_coder_kind(v); });

  m.def("preset_best", &preset_best);

  m.def(
      "compress",
      [](const py::bytes& data, const std::optional<CodecConfig>& config) {
        const std::string_view in = view_of(data);
        std::vector<std::uint8_t> out;
        {
          py::gil_scoped_release release;
          out = compress(in, config.value_or(preset_best()));
        }
        return py::bytes(reinterpret_cast<const char*>(out.data()), out.size());
      },
      py::arg("data"), py::arg("config") = py::none());

  m.def(
      "decompress",
      [](const py::bytes& container) {
        const std::string_view in = view_of(container);
        std::string out;
        {
          py::gil_scoped_release release;
          out = decompress({reinterpret_cast<const std::uint8_t*>(in.data()), in.size()});
        }
        return py::bytes(out);
      },
      py::arg("container"));

  m.def(
      "tokenize",
      [](const py::bytes& data) {
        py::list out;
        for (std::string_view t : tokenize_views(view_of(data))) out.append(py::bytes(t.data(), t.size()));
        return out;
      },
      py::arg("data"));

  m.def("known_corpora", [] {
    std::vector<std::string> names;
    for (const auto& c : known_corpora()) names.push_back(c.name);
    return names;
  });
  m.def(
      "fetch_corpus",
      [](const std::string& name, const std::optional<std::filesystem::path>& dir) {
        return fetch_corpus(name, dir.value_or(corpus_dir())).path;
      },
      py::arg("name"), py::arg("cache_dir") = py::none());
}
