// wlz: command-line front end for the word-based LZ codec.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wlz/bench.hpp"
#include "wlz/corpus.hpp"
#include "wlz/error.hpp"
#include "wlz/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return wlz::read_file(path);
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    return;
  }
  wlz::write_file(path, data);
}

// A bench input is a file path or the name of a known corpus.
wlz::BenchInput load_bench_input(const std::string& arg) {
  if (fs::exists(arg)) return {fs::path(arg).filename().string(), wlz::read_file(arg)};
  const auto fetched = wlz::fetch_corpus(arg, wlz::corpus_dir());
  return {arg, wlz::read_file(fetched.path)};
}

struct CodecFlags {
  std::string preset;
  unsigned window_log2 = 0, max_match = 0, min_match = 0, bblock_log2 = 0, table_bits = 0, max_chain = 0;
  std::string variant, structure, offset_coder, length_coder, literal_coder;

  void add_to(CLI::App& app, bool with_window_and_match = true) {
    app.add_option("--preset", preset, "Start from a named preset")->check(CLI::IsMember({"best", "direct"}));
    if (with_window_and_match) {
      app.add_option("--window-log2", window_log2, "Window capacity exponent (symbols)");
      app.add_option("--max-match", max_match, "Longest copy in symbols");
    }
    app.add_option("--min-match", min_match, "Shortest copy in symbols");
    app.add_option("--variant", variant, "lz77 | lzss | lazy | short");
    app.add_option("--structure", structure, "BT BTA BTH HT1 HT2 HT3 HT4 PT PTA PTH");
    app.add_option("--offset-coder", offset_coder, "direct fibonacci gamma delta bblock huffman");
    app.add_option("--length-coder", length_coder, "direct fibonacci gamma delta bblock huffman");
    app.add_option("--literal-coder", literal_coder, "direct fibonacci gamma delta bblock huffman");
    app.add_option("--bblock-log2", bblock_log2, "B-Block offset base exponent");
    app.add_option("--table-bits", table_bits, "Hash table size exponent");
    app.add_option("--max-chain", max_chain, "Hash chain candidates per query");
  }

  wlz::CodecConfig build() const {
    wlz::CodecConfig c = preset == "best" ? wlz::preset_best() : wlz::CodecConfig::direct_bit();
    if (window_log2) c.window.window_log2 = window_log2;
    if (max_match) c.window.max_match = max_match;
    if (min_match) c.window.min_match = min_match;
    if (!variant.empty()) c.variant = wlz::parse_variant(variant);
    if (!structure.empty()) c.window.structure = wlz::parse_structure(structure);
    if (!offset_coder.empty()) c.offset_coder = wlz::parse_coder_kind(offset_coder);
    if (!length_coder.empty()) c.length_coder = wlz::parse_coder_kind(length_coder);
    if (!literal_coder.empty()) c.literal_coder = wlz::parse_coder_kind(literal_coder);
    if (bblock_log2) c.bblock_base_log2 = bblock_log2;
    if (table_bits) c.window.table_bits = table_bits;
    if (max_chain) c.window.max_chain = max_chain;
    c.validate();
    return c;
  }
};

void emit_report(const wlz::BenchReport& report, const std::string& csv_path) {
  const std::string csv = report.to_csv();
  if (!csv_path.empty()) wlz::write_file(csv_path, csv);
  std::cout << csv;
  if (report.best) std::cout << "# minimum: " << report.rows[*report.best].config << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word-based LZ77/LZSS text compressor"};
  app.require_subcommand(1);

  auto* comp = app.add_subcommand("compress", "Compress a file");
  std::string comp_in, comp_out;
  CodecFlags comp_flags;
  comp->add_option("input", comp_in, "Input file or -")->required();
  comp->add_option("output", comp_out, "Output file or -")->required();
  comp_flags.add_to(*comp);

  auto* decomp = app.add_subcommand("decompress", "Decompress a container");
  std::string dec_in, dec_out;
  decomp->add_option("input", dec_in, "Container file or -")->required();
  decomp->add_option("output", dec_out, "Output file or -")->required();

  auto* fetch = app.add_subcommand("fetch", "Download a benchmark corpus into the cache");
  std::string fetch_name, fetch_dir;
  fetch->add_option("name", fetch_name, "Corpus name")->required();
  fetch->add_option("--dir", fetch_dir, "Cache directory (default $WLZ_CORPUS_DIR)");

  auto* bstruct = app.add_subcommand("bench-structures", "Compression time per match structure");
  std::vector<std::string> bs_inputs;
  std::vector<unsigned> bs_windows{16, 20};
  unsigned bs_repeats = 3;
  std::string bs_csv;
  CodecFlags bs_flags;
  bstruct->add_option("inputs", bs_inputs, "Files or corpus names")->required();
  bstruct->add_option("--window-log2", bs_windows, "Window exponents")->delimiter(',')->allow_extra_args(false);
  bstruct->add_option("--max-match", bs_flags.max_match, "Longest copy in symbols");
  bstruct->add_option("--repeats", bs_repeats, "Timing runs per cell (median reported)");
  bstruct->add_option("--csv", bs_csv, "Write CSV here");
  bs_flags.add_to(*bstruct, false);

  auto* bcoders = app.add_subcommand("bench-coders", "Direct-bit vs best coders per parse variant");
  std::vector<std::string> bc_inputs;
  unsigned bc_window = 20, bc_max_match = 16;
  std::string bc_structure = "PTH", bc_csv;
  bcoders->add_option("inputs", bc_inputs, "Files or corpus names")->required();
  bcoders->add_option("--window-log2", bc_window, "Window exponent");
  bcoders->add_option("--max-match", bc_max_match, "Longest copy in symbols");
  bcoders->add_option("--structure", bc_structure, "Match structure");
  bcoders->add_option("--csv", bc_csv, "Write CSV here");

  auto* bsweep = app.add_subcommand("bench-sweep", "Output size over window size x max_match");
  std::string sw_input, sw_csv;
  std::vector<unsigned> sw_windows{8, 10, 12, 14, 16, 18, 20};
  std::vector<unsigned> sw_max{4, 8, 16, 32, 64};
  CodecFlags sw_flags;
  sw_flags.preset = "best";
  bsweep->add_option("input", sw_input, "File or corpus name")->required();
  bsweep->add_option("--window-log2", sw_windows, "Window exponents")->delimiter(',')->allow_extra_args(false);
  bsweep->add_option("--max-match", sw_max, "max_match values")->delimiter(',')->allow_extra_args(false);
  bsweep->add_option("--csv", sw_csv, "Write CSV here");
  sw_flags.add_to(*bsweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (comp->parsed()) {
      const auto config = comp_flags.build();
      const std::string input = read_input(comp_in);
      const auto packed = wlz::compress(input, config);
      write_output(comp_out, std::string(packed.begin(), packed.end()));
    } else if (decomp->parsed()) {
      const std::string data = read_input(dec_in);
      std::string text;
      try {
        text = wlz::decompress({reinterpret_cast<const std::uint8_t*>(data.data()), data.size()});
      } catch (const wlz::Error& e) {
        std::cerr << "wlz: corrupt or unreadable container: " << e.what() << '\n';
        return 2;
      }
      write_output(dec_out, text);
    } else if (fetch->parsed()) {
      const auto r = wlz::fetch_corpus(fetch_name, fetch_dir.empty() ? wlz::corpus_dir() : fs::path(fetch_dir));
      std::cout << r.path.string() << ' ' << r.bytes << (r.cache_hit ? " (cached)" : " (downloaded)") << '\n';
    } else if (bstruct->parsed()) {
      std::vector<wlz::BenchInput> inputs;
      for (const auto& a : bs_inputs) inputs.push_back(load_bench_input(a));
      emit_report(wlz::bench_structures(inputs, bs_windows, bs_flags.build(), bs_repeats), bs_csv);
    } else if (bcoders->parsed()) {
      std::vector<wlz::BenchInput> inputs;
      for (const auto& a : bc_inputs) inputs.push_back(load_bench_input(a));
      emit_report(wlz::bench_coders(inputs, bc_window, bc_max_match, wlz::parse_structure(bc_structure)), bc_csv);
    } else if (bsweep->parsed()) {
      emit_report(wlz::bench_sweep(load_bench_input(sw_input), sw_windows, sw_max, sw_flags.build()), sw_csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "wlz: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
