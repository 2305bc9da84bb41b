#pragma once

// Parse strategies turning a symbol stream into literals and copies.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wlz/match_finder.hpp"

namespace wlz {

enum class ParseVariant : std::uint8_t { LZ77 = 0, LZSS = 1, LZSSLazy = 2, LZSSShort = 3 };

inline constexpr ParseVariant kAllVariants[] = {ParseVariant::LZ77, ParseVariant::LZSS,
                                                ParseVariant::LZSSLazy, ParseVariant::LZSSShort};

const char* to_string(ParseVariant v);
/// Accepts "lz77", "lzss", "lazy", "short" (and the to_string forms).
ParseVariant parse_variant(const std::string& name);

struct Literal {
  Symbol symbol;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Copy {
  Match match;
  friend bool operator==(const Copy&, const Copy&) = default;
};

/// LZ77 item: an optional match followed by the next symbol.
struct Triplet {
  std::optional<Match> match;
  Symbol next;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

using ParseItem = std::variant<Literal, Copy, Triplet>;

/// Bit prices used by the shortest-path parse.
class CostModel {
public:
  virtual ~CostModel() = default;
  virtual std::uint64_t literal_bits(std::size_t position) const = 0;
  virtual std::uint64_t copy_bits(const Match& m) const = 0;
  virtual std::uint64_t flag_bits() const { return 1; }
};

/// Fixed-width prices: copies cost window_log2 + length-field bits; a literal
/// at position i costs the direct width of the vocabulary seen before i, plus
/// a constant surcharge when the token first appears there.
class DirectBitCostModel final : public CostModel {
public:
  static constexpr std::uint64_t kNewTokenSurcharge = 48;

  DirectBitCostModel(std::span<const Symbol> symbols, const WindowConfig& cfg);
  /// Constant literal price, for synthetic streams.
  DirectBitCostModel(std::uint64_t literal_bits, std::uint64_t copy_bits);

  std::uint64_t literal_bits(std::size_t position) const override;
  std::uint64_t copy_bits(const Match&) const override { return copy_bits_; }

private:
  std::vector<std::uint32_t> literal_;
  std::uint64_t constant_literal_ = 0;
  std::uint64_t copy_bits_ = 0;
};

std::vector<ParseItem> parse_lz77(std::span<const Symbol> symbols, const WindowConfig& cfg);
std::vector<ParseItem> parse_lzss_greedy(std::span<const Symbol> symbols, const WindowConfig& cfg);
std::vector<ParseItem> parse_lzss_lazy(std::span<const Symbol> symbols, const WindowConfig& cfg);
std::vector<ParseItem> parse_lzss_shortest(std::span<const Symbol> symbols, const WindowConfig& cfg,
                                           const CostModel& cost);

/// Longest match at every position (nullopt where none reaches min_match).
std::vector<std::optional<Match>> longest_matches(std::span<const Symbol> symbols,
                                                  const WindowConfig& cfg);

/// Minimum-cost path over the match graph: a literal edge i -> i+1 and copy
/// edges i -> i+l for l in [min_match, longest[i].length], all using the
/// longest match's offset. One left-to-right relaxation pass.
std::vector<ParseItem> shortest_path_parse(std::span<const Symbol> symbols,
                                           std::span<const std::optional<Match>> longest,
                                           unsigned min_match, const CostModel& cost);

/// Dispatches on variant; LZSSShort uses DirectBitCostModel.
std::vector<ParseItem> parse(ParseVariant variant, std::span<const Symbol> symbols,
                             const WindowConfig& cfg);

/// Total price of an LZSS item sequence (literals and copies only).
std::uint64_t parse_cost(std::span<const ParseItem> items, const CostModel& cost);

/// Rebuilds the symbol stream; overlapping copies resolve front to back.
/// Throws CorruptError when an offset reaches before the start.
std::vector<Symbol> replay(std::span<const ParseItem> items);

}  // namespace wlz
