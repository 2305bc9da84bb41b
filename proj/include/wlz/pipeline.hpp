#pragma once

// bytes -> tokens -> symbols -> parse items -> container, and back.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wlz/format.hpp"
#include "wlz/integer_codes.hpp"
#include "wlz/match_finder.hpp"
#include "wlz/parser.hpp"

namespace wlz {

struct CodecConfig {
  WindowConfig window;
  ParseVariant variant = ParseVariant::LZSSLazy;
  CoderKind offset_coder = CoderKind::DirectBit;
  CoderKind length_coder = CoderKind::DirectBit;
  CoderKind literal_coder = CoderKind::DirectBit;
  unsigned bblock_base_log2 = 0;  // 0 derives window_log2 - 4 for a BBlock offset coder

  /// Direct-bit storage on every channel, LZSS-Lazy, PTH window of 2^20 symbols.
  static CodecConfig direct_bit();

  /// Offset base actually used (0 when offsets are not BBlock coded).
  unsigned effective_bblock_log2() const;
  /// Throws ConfigError.
  void validate() const;
  Header header(std::uint64_t original_length) const;
  /// Command-line flag form, e.g. "--variant lazy --structure PTH --window-log2 20 ...".
  std::string describe() const;

  friend bool operator==(const CodecConfig& a, const CodecConfig& b);
};

/// LZSS-Lazy, B-Block offsets with base capacity/16, adaptive Huffman lengths
/// and literals, max_match 16, PTH window of 2^20 symbols.
CodecConfig preset_best();

std::vector<std::uint8_t> compress(std::string_view input, const CodecConfig& config);
std::string decompress(std::span<const std::uint8_t> container);

}  // namespace wlz
