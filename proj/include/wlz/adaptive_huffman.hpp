#pragma once

// Adaptive (FGK-style) Huffman coder over an open alphabet of 64-bit values.
//
// Nodes are kept in an array ordered by non-increasing weight with siblings
// adjacent (index 0 is the root, the escape leaf is always last). Values not
// yet seen are sent as the escape code followed by a caller-supplied payload.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wlz/bitstream.hpp"

namespace wlz {

class AdaptiveHuffman {
public:
  /// All leaf counts are halved once the root weight reaches this value, or
  /// twice the number of leaves if that is larger (halving cannot push a
  /// large alphabet below the fixed limit).
  static constexpr std::uint64_t kRescaleLimit = std::uint64_t{1} << 16;
  std::uint64_t rescale_threshold() const noexcept {
    return std::max<std::uint64_t>(kRescaleLimit, 2 * (leaf_of_.size() + 1));
  }

  AdaptiveHuffman();

  /// Writes the code for `value` and updates the model. Returns true when the
  /// escape code was written, in which case the caller writes the payload.
  bool encode(BitWriter& out, std::uint64_t value);

  /// Reads one code. A known value updates the model and is returned; the
  /// escape returns nullopt and the caller must read the payload and pass the
  /// value to add_new().
  std::optional<std::uint64_t> decode(BitReader& in);

  /// Registers a value that just arrived behind an escape. Throws
  /// CorruptError if the value is already known.
  void add_new(std::uint64_t value);

  bool contains(std::uint64_t value) const { return leaf_of_.contains(value); }
  /// Current code length of a known value, or of the escape when unknown.
  unsigned code_length(std::uint64_t value) const;
  unsigned escape_length() const { return depth(escape_); }
  std::size_t alphabet_size() const noexcept { return leaf_of_.size(); }
  std::uint64_t total_weight() const noexcept { return nodes_[0].weight; }

  /// Full tree state, for comparing encoder and decoder models.
  std::vector<std::uint64_t> serialize() const;
  /// Checks ordering, sibling adjacency, and that internal weights are sums.
  bool check_invariants() const;

  friend bool operator==(const AdaptiveHuffman& a, const AdaptiveHuffman& b) {
    return a.serialize() == b.serialize();
  }

private:
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::uint64_t weight = 0;
    std::int32_t parent = kNone;
    std::int32_t left = kNone;  // kNone for leaves
    std::int32_t right = kNone;
    std::uint64_t value = 0;
  };

  bool is_leaf(std::int32_t i) const { return nodes_[i].left == kNone; }
  unsigned depth(std::int32_t i) const;
  void write_path(BitWriter& out, std::int32_t leaf) const;
  std::int32_t spawn(std::uint64_t value);
  void increment(std::int32_t leaf);
  std::int32_t leader(std::uint64_t weight) const;
  void swap_nodes(std::int32_t a, std::int32_t b);
  void rescale();

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, std::int32_t> leaf_of_;
  std::int32_t escape_ = 0;
};

}  // namespace wlz
