#pragma once

// Internal interfaces shared by the match-finder structures.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wlz/match_finder.hpp"

namespace wlz::detail {

inline constexpr std::int64_t kNil = -1;

/// Per-position storage for the live window. Positions are absolute; the
/// backing vector grows until it reaches `limit` entries and then wraps.
template <typename T>
class PositionArray {
public:
  PositionArray(std::uint64_t limit, std::uint64_t hint, T fill = T{}) : limit_(limit), fill_(fill) {
    std::uint64_t initial = std::min<std::uint64_t>(limit_, std::max<std::uint64_t>(hint, 1024));
    data_.assign(std::bit_ceil(initial), fill_);
    if (data_.size() > limit_) data_.resize(limit_);
  }

  /// Makes position p addressable. Before the first wrap no remapping is needed.
  void reserve_for(std::uint64_t p) {
    if (p < data_.size() || data_.size() >= limit_) return;
    std::uint64_t n = data_.size();
    while (n <= p && n < limit_) n *= 2;
    data_.resize(std::min(n, limit_), fill_);
  }

  T& operator[](std::uint64_t p) { return data_[p & (data_.size() - 1)]; }
  const T& operator[](std::uint64_t p) const { return data_[p & (data_.size() - 1)]; }

private:
  std::uint64_t limit_;
  T fill_;
  std::vector<T> data_;
};

/// Inserted symbols, addressable for positions inside the window.
class History {
public:
  History(std::uint64_t limit, std::uint64_t hint) : symbols_(limit, hint) {}
  void put(std::uint64_t p, Symbol s) {
    symbols_.reserve_for(p);
    symbols_[p] = s;
  }
  Symbol operator[](std::uint64_t p) const { return symbols_[p]; }

private:
  PositionArray<Symbol> symbols_;
};

/// Search context: current position, oldest live position, and the lookahead.
struct Query {
  const History& history;
  std::uint64_t pos;
  std::uint64_t start;
  std::span<const Symbol> lookahead;  // already truncated to max_match

  Symbol at(std::uint64_t p) const { return p < pos ? history[p] : lookahead[p - pos]; }

  /// Common prefix length of the string at p with the lookahead.
  unsigned match_length(std::uint64_t p, unsigned from = 0) const {
    unsigned n = from;
    const auto m = static_cast<unsigned>(lookahead.size());
    while (n < m && at(p + n) == lookahead[n]) ++n;
    return n;
  }
};

struct Candidate {
  unsigned length = 0;
  std::uint64_t position = 0;
};

class MatchStructure {
public:
  virtual ~MatchStructure() = default;
  /// Trailing positions whose key is incomplete; these are scanned directly.
  virtual unsigned lag() const = 0;
  virtual void reserve_for(std::uint64_t p) = 0;
  virtual void add(std::uint64_t p) = 0;
  virtual void remove(std::uint64_t p) = 0;
  virtual Candidate search(const Query& q) const = 0;
};

/// Deterministic multiplicative mixing of k symbol ids into `bits` bits.
inline std::uint64_t hash_symbols(const Symbol* s, unsigned k, unsigned bits) {
  std::uint64_t h = 0x243F6A8885A308D3ull;
  for (unsigned i = 0; i < k; ++i) {
    h = (h ^ (static_cast<std::uint64_t>(s[i]) + 1)) * 0x9E3779B97F4A7C15ull;
    h ^= h >> 29;
  }
  h *= 0xBF58476D1CE4E5B9ull;
  return bits == 0 ? 0 : h >> (64 - bits);
}

std::unique_ptr<MatchStructure> make_binary_tree(const WindowConfig& cfg, const History& h,
                                                 std::uint64_t limit, std::uint64_t hint);
std::unique_ptr<MatchStructure> make_hash_chain(const WindowConfig& cfg, const History& h,
                                                std::uint64_t limit, std::uint64_t hint);
std::unique_ptr<MatchStructure> make_patricia(const WindowConfig& cfg, const History& h,
                                              std::uint64_t limit, std::uint64_t hint);

}  // namespace wlz::detail
