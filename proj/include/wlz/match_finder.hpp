#pragma once

// Sliding-window dictionary over a symbol stream with longest-match search.
//
// Ten interchangeable structures:
//   BT   one binary search tree of window positions keyed on their strings
//   BTA  one tree per first symbol
//   BTH  trees rooted in a 2^18 table hashed on the first two symbols
//   HTk  hash chains over k = 1..4 symbols, newest position first
//   PT / PTA / PTH  Patricia tries with the same root dispersal as BT*
//
// Offsets count backward from the current position (1 = previous symbol).
// Matches may overlap the lookahead (length > offset).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wlz/tokenizer.hpp"

namespace wlz {

enum class Structure : std::uint8_t { BT, BTA, BTH, HT1, HT2, HT3, HT4, PT, PTA, PTH };

inline constexpr Structure kAllStructures[] = {
    Structure::BT,  Structure::BTA, Structure::BTH, Structure::PT,  Structure::PTA,
    Structure::PTH, Structure::HT1, Structure::HT2, Structure::HT3, Structure::HT4,
};

const char* to_string(Structure s);
Structure parse_structure(const std::string& name);

/// Number of leading symbols a structure hashes on (0 for BT, BTA, PT, PTA).
unsigned hashed_symbols(Structure s) noexcept;
bool is_binary_tree(Structure s) noexcept;
unsigned default_table_bits(Structure s) noexcept;

struct WindowConfig {
  unsigned window_log2 = 20;
  unsigned max_match = 16;
  unsigned min_match = 2;
  Structure structure = Structure::PTH;
  unsigned table_bits = 0;  // 0 selects default_table_bits(structure)
  unsigned max_chain = 256;  // hash chain candidates examined per query

  std::uint64_t capacity() const noexcept { return std::uint64_t{1} << window_log2; }
  unsigned effective_table_bits() const noexcept {
    return table_bits != 0 ? table_bits : default_table_bits(structure);
  }
  /// Throws ConfigError on any violated constraint.
  void validate() const;
};

struct Match {
  std::uint32_t offset = 0;
  std::uint32_t length = 0;

  friend bool operator==(const Match&, const Match&) = default;
};

/// Reference scan: longest match of `lookahead` starting inside `buffer`
/// (possibly running into the lookahead), smallest offset among ties.
std::optional<Match> brute_force_longest(std::span<const Symbol> buffer,
                                         std::span<const Symbol> lookahead,
                                         unsigned min_match, unsigned max_match);

namespace detail {
class History;
class MatchStructure;
}  // namespace detail

class SlidingWindow {
public:
  /// `size_hint` bounds the initial allocation when the stream length is known.
  explicit SlidingWindow(const WindowConfig& config, std::uint64_t size_hint = 0);
  ~SlidingWindow();
  SlidingWindow(SlidingWindow&&) noexcept;
  SlidingWindow& operator=(SlidingWindow&&) noexcept;

  void insert(Symbol s);

  /// Longest match (>= min_match) for the next symbols. The lookahead is
  /// truncated to max_match. For HT and PT structures the smallest offset
  /// wins among equal lengths.
  std::optional<Match> find_longest(std::span<const Symbol> lookahead) const;

  std::uint64_t position() const noexcept { return pos_; }
  std::uint64_t occupancy() const noexcept;
  const WindowConfig& config() const noexcept { return config_; }

private:
  WindowConfig config_;
  std::uint64_t pos_ = 0;
  std::unique_ptr<detail::History> history_;
  std::unique_ptr<detail::MatchStructure> structure_;
};

}  // namespace wlz
