#pragma once

// Container layout:
//
//   "WLZ7" | version=1 | variant | window_log2 | max_match (u16, big endian)
//   | min_match | offset_coder | length_coder | literal_coder
//   | bblock_base_log2 | original_length (LEB128) | item bitstream
//
// Items are interleaved in one MSB-first bitstream. LZSS items start with a
// flag bit (0 literal, 1 copy); LZ77 items are offset, length, next symbol.
// A token the decoder has not seen yet is sent as an escape followed by its
// spelling: Elias gamma byte count, then the raw bytes.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlz/adaptive_huffman.hpp"
#include "wlz/bitstream.hpp"
#include "wlz/integer_codes.hpp"
#include "wlz/parser.hpp"
#include "wlz/tokenizer.hpp"

namespace wlz {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'W', 'L', 'Z', '7'};
inline constexpr std::uint8_t kFormatVersion = 1;

struct Header {
  ParseVariant variant = ParseVariant::LZSSLazy;
  std::uint8_t window_log2 = 20;
  std::uint16_t max_match = 16;
  std::uint8_t min_match = 2;
  CoderKind offset_coder = CoderKind::DirectBit;
  CoderKind length_coder = CoderKind::DirectBit;
  CoderKind literal_coder = CoderKind::DirectBit;
  std::uint8_t bblock_base_log2 = 0;  // offset channel base when offset_coder is BBlock
  std::uint64_t original_length = 0;

  /// Throws FormatError for out-of-range fields.
  void validate() const;

  friend bool operator==(const Header&, const Header&) = default;
};

std::vector<std::uint8_t> write_header(const Header& h);
/// Parses the header and returns it with the number of bytes consumed.
std::pair<Header, std::size_t> read_header(std::span<const std::uint8_t> bytes);

/// B-Block base for a channel whose values span `range`: 16 times smaller,
/// rounded to a power of two, at least 2.
unsigned derived_bblock_log2(std::uint64_t range);

/// Encoder-side channel state for one container.
class ItemEncoder {
public:
  explicit ItemEncoder(const Header& h);

  /// LZSS literal (flag 0 + payload). `symbol` must be at most the number of
  /// tokens already sent; equality means a new token, spelled from `vocab`.
  void emit_literal(BitWriter& out, Symbol symbol, const Vocabulary& vocab);
  /// LZSS copy (flag 1 + offset + length).
  void emit_copy(BitWriter& out, const Match& m);
  /// LZ77 triplet.
  void emit_triplet(BitWriter& out, const Triplet& t, const Vocabulary& vocab);
  void emit(BitWriter& out, const ParseItem& item, const Vocabulary& vocab);

  std::size_t tokens_sent() const noexcept { return sent_; }

private:
  void literal_payload(BitWriter& out, Symbol symbol, const Vocabulary& vocab);
  void integer_value(BitWriter& out, CoderKind kind, const IntegerCoder& coder,
                     AdaptiveHuffman& model, std::uint64_t value);

  Header h_;
  IntegerCoder offset_;
  IntegerCoder length_;
  AdaptiveHuffman offset_model_;
  AdaptiveHuffman length_model_;
  AdaptiveHuffman literal_model_;
  std::size_t sent_ = 0;
};

/// One decoded item together with the spelling of a token it introduced.
struct DecodedItem {
  ParseItem item;
  std::optional<std::string> new_token;
};

class ItemDecoder {
public:
  explicit ItemDecoder(const Header& h);

  DecodedItem next(BitReader& in);
  const std::vector<std::string>& vocabulary() const noexcept { return vocab_; }

private:
  Symbol literal_payload(BitReader& in, std::optional<std::string>& spelled);
  std::uint64_t integer_value(BitReader& in, CoderKind kind, const IntegerCoder& coder,
                              AdaptiveHuffman& model);
  Match read_copy(BitReader& in);

  Header h_;
  IntegerCoder offset_;
  IntegerCoder length_;
  AdaptiveHuffman offset_model_;
  AdaptiveHuffman length_model_;
  AdaptiveHuffman literal_model_;
  std::vector<std::string> vocab_;
};

struct DecodedContainer {
  Header header;
  std::vector<ParseItem> items;
  std::vector<std::string> vocabulary;
};

/// Decodes every item of a container without expanding them to bytes.
/// Stops when the items account for original_length bytes.
DecodedContainer decode_items(std::span<const std::uint8_t> container);

}  // namespace wlz
