#include "wlz/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "wlz/error.hpp"
#include "wlz/tokenizer.hpp"

namespace wlz {

CodecConfig CodecConfig::direct_bit() {
  CodecConfig c;
  c.window = WindowConfig{20, 16, 2, Structure::PTH};
  c.variant = ParseVariant::LZSSLazy;
  return c;
}

CodecConfig preset_best() {
  CodecConfig c = CodecConfig::direct_bit();
  c.offset_coder = CoderKind::BBlock;
  c.length_coder = CoderKind::AdaptiveHuffman;
  c.literal_coder = CoderKind::AdaptiveHuffman;
  return c;
}

bool operator==(const CodecConfig& a, const CodecConfig& b) {
  const auto key = [](const CodecConfig& c) {
    return std::make_tuple(c.window.window_log2, c.window.max_match, c.window.min_match,
                           c.window.structure, c.window.effective_table_bits(), c.window.max_chain,
                           c.variant, c.offset_coder, c.length_coder, c.literal_coder,
                           c.effective_bblock_log2());
  };
  return key(a) == key(b);
}

unsigned CodecConfig::effective_bblock_log2() const {
  if (offset_coder != CoderKind::BBlock) return 0;
  if (bblock_base_log2 != 0) return bblock_base_log2;
  return window.window_log2 > 5 ? window.window_log2 - 4 : 1;
}

void CodecConfig::validate() const {
  window.validate();
  if (window.min_match > 255) throw ConfigError("min_match must be <= 255");
  if (offset_coder == CoderKind::BBlock) {
    const unsigned b = effective_bblock_log2();
    if (b < 1 || (window.window_log2 > 1 && b >= window.window_log2)) {
      throw ConfigError("bblock base must be a power of two in [2, capacity)");
    }
  } else if (bblock_base_log2 != 0) {
    throw ConfigError("bblock base given but offsets are not bblock coded");
  }
}

Header CodecConfig::header(std::uint64_t original_length) const {
  Header h;
  h.variant = variant;
  h.window_log2 = static_cast<std::uint8_t>(window.window_log2);
  h.max_match = static_cast<std::uint16_t>(window.max_match);
  h.min_match = static_cast<std::uint8_t>(window.min_match);
  h.offset_coder = offset_coder;
  h.length_coder = length_coder;
  h.literal_coder = literal_coder;
  h.bblock_base_log2 = static_cast<std::uint8_t>(effective_bblock_log2());
  h.original_length = original_length;
  return h;
}

std::string CodecConfig::describe() const {
  static constexpr const char* kVariantFlags[] = {"lz77", "lzss", "lazy", "short"};
  std::ostringstream s;
  s << "--variant " << kVariantFlags[static_cast<int>(variant)] << " --structure " << to_string(window.structure)
    << " --window-log2 " << window.window_log2 << " --max-match " << window.max_match
    << " --min-match " << window.min_match << " --offset-coder " << to_string(offset_coder)
    << " --length-coder " << to_string(length_coder) << " --literal-coder " << to_string(literal_coder);
  if (offset_coder == CoderKind::BBlock) s << " --bblock-log2 " << effective_bblock_log2();
  return s.str();
}

std::vector<std::uint8_t> compress(std::string_view input, const CodecConfig& config) {
  config.validate();
  Vocabulary vocab;
  std::vector<Symbol> symbols;
  intern_all(input, vocab, symbols);

  const auto items = parse(config.variant, symbols, config.window);
  const Header header = config.header(input.size());
  std::vector<std::uint8_t> out = write_header(header);
  BitWriter bits;
  ItemEncoder encoder(header);
  for (const ParseItem& item : items) encoder.emit(bits, item, vocab);
  const auto& body = bits.bytes();
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::string decompress(std::span<const std::uint8_t> container) {
  const auto [header, consumed] = read_header(container);
  BitReader in(container.subspan(consumed));
  ItemDecoder decoder(header);
  const auto& vocab = decoder.vocabulary();
  std::string out;
  // The header length is untrusted; cap the up-front allocation.
  out.reserve(std::min<std::uint64_t>(header.original_length, std::uint64_t{64} * container.size()));
  std::vector<Symbol> symbols;
  auto append = [&](Symbol s) {
    symbols.push_back(s);
    out += vocab[s];
  };
  auto copy = [&](const Match& m) {
    if (m.offset > symbols.size()) throw CorruptError("copy offset before start of data");
    const std::size_t from = symbols.size() - m.offset;
    for (std::uint32_t k = 0; k < m.length; ++k) append(symbols[from + k]);
  };
  while (out.size() < header.original_length) {
    const DecodedItem d = decoder.next(in);
    if (const auto* lit = std::get_if<Literal>(&d.item)) {
      append(lit->symbol);
    } else if (const auto* c = std::get_if<Copy>(&d.item)) {
      copy(c->match);
    } else {
      const auto& t = std::get<Triplet>(d.item);
      if (t.match) copy(*t.match);
      append(t.next);
    }
  }
  if (out.size() != header.original_length) throw CorruptError("items overrun the original length");
  if (in.bits_remaining() >= 8) throw CorruptError("trailing data after last item");
  return out;
}

}  // namespace wlz
