#include "wlz/adaptive_huffman.hpp"

#include <algorithm>
#include <deque>

#include "wlz/error.hpp"

namespace wlz {

AdaptiveHuffman::AdaptiveHuffman() { nodes_.push_back(Node{}); }

unsigned AdaptiveHuffman::depth(std::int32_t i) const {
  unsigned d = 0;
  for (; nodes_[i].parent != kNone; i = nodes_[i].parent) ++d;
  return d;
}

unsigned AdaptiveHuffman::code_length(std::uint64_t value) const {
  auto it = leaf_of_.find(value);
  return depth(it == leaf_of_.end() ? escape_ : it->second);
}

void AdaptiveHuffman::write_path(BitWriter& out, std::int32_t leaf) const {
  std::uint64_t bits = 0;
  unsigned len = 0;
  std::vector<bool> overflow;
  for (std::int32_t i = leaf; nodes_[i].parent != kNone; i = nodes_[i].parent) {
    const bool bit = nodes_[nodes_[i].parent].right == i;
    if (len < 64) {
      bits |= std::uint64_t{bit} << len;
      ++len;
    } else {
      overflow.push_back(bit);
    }
  }
  for (auto it = overflow.rbegin(); it != overflow.rend(); ++it) out.write_bit(*it);
  out.write_bits(bits, len);
}

bool AdaptiveHuffman::encode(BitWriter& out, std::uint64_t value) {
  auto it = leaf_of_.find(value);
  if (it != leaf_of_.end()) {
    write_path(out, it->second);
    increment(it->second);
    return false;
  }
  write_path(out, escape_);
  increment(spawn(value));
  return true;
}

std::optional<std::uint64_t> AdaptiveHuffman::decode(BitReader& in) {
  std::int32_t i = 0;
  while (!is_leaf(i)) i = in.read_bit() ? nodes_[i].right : nodes_[i].left;
  if (i == escape_) return std::nullopt;
  const std::uint64_t value = nodes_[i].value;
  increment(i);
  return value;
}

void AdaptiveHuffman::add_new(std::uint64_t value) {
  if (leaf_of_.contains(value)) throw CorruptError("escaped value is already in the model");
  increment(spawn(value));
}

// The escape leaf becomes an internal node with the new leaf on the left and a
// fresh escape leaf on the right.
std::int32_t AdaptiveHuffman::spawn(std::uint64_t value) {
  const auto k = escape_;
  const auto leaf = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{0, k, kNone, kNone, value});
  nodes_.push_back(Node{0, k, kNone, kNone, 0});
  nodes_[k].left = leaf;
  nodes_[k].right = leaf + 1;
  escape_ = leaf + 1;
  leaf_of_.emplace(value, leaf);
  return leaf;
}

// Lowest index holding `weight`; the array is sorted by non-increasing weight.
std::int32_t AdaptiveHuffman::leader(std::uint64_t weight) const {
  auto it = std::partition_point(nodes_.begin(), nodes_.end(),
                                 [weight](const Node& n) { return n.weight > weight; });
  return static_cast<std::int32_t>(it - nodes_.begin());
}

// Exchanges the subtrees rooted at positions a and b. Parent links stay with
// the positions.
void AdaptiveHuffman::swap_nodes(std::int32_t a, std::int32_t b) {
  Node& na = nodes_[a];
  Node& nb = nodes_[b];
  std::swap(na.left, nb.left);
  std::swap(na.right, nb.right);
  std::swap(na.value, nb.value);
  std::swap(na.weight, nb.weight);
  for (std::int32_t i : {a, b}) {
    const Node& n = nodes_[i];
    if (n.left != kNone) {
      nodes_[n.left].parent = i;
      nodes_[n.right].parent = i;
    }
  }
  if (escape_ == a) escape_ = b;
  else if (escape_ == b) escape_ = a;
  for (std::int32_t i : {a, b}) {
    if (is_leaf(i) && i != escape_) leaf_of_[nodes_[i].value] = i;
  }
}

void AdaptiveHuffman::increment(std::int32_t q) {
  const auto last = static_cast<std::int32_t>(nodes_.size()) - 1;
  for (;;) {
    const std::uint64_t w = nodes_[q].weight;
    std::int32_t lead = leader(w);
    const std::int32_t parent = nodes_[q].parent;
    if (parent != kNone && lead == parent) {
      // q is the sibling of the escape leaf and its parent heads the block.
      // Every other node of this weight is a leaf.
      if (parent == last - 2) {
        ++nodes_[q].weight;
        ++nodes_[parent].weight;
        if (nodes_[parent].parent == kNone) break;
        q = nodes_[parent].parent;
        continue;
      }
      swap_nodes(parent, last - 2);
      lead = leader(w);
    }
    if (lead != q) {
      swap_nodes(q, lead);
      q = lead;
    }
    ++nodes_[q].weight;
    if (nodes_[q].parent == kNone) break;
    q = nodes_[q].parent;
  }
  if (nodes_[0].weight >= rescale_threshold()) rescale();
}

// Halves every leaf count and rebuilds an optimal tree. Two-queue Huffman
// construction; the removal order, reversed, is a valid node ordering.
void AdaptiveHuffman::rescale() {
  struct Item {
    std::uint64_t weight;
    std::int32_t left = kNone;  // indices into `built`
    std::int32_t right = kNone;
    std::uint64_t value = 0;
    bool escape = false;
  };
  std::vector<Item> leaves;
  for (std::int32_t i = static_cast<std::int32_t>(nodes_.size()) - 1; i >= 0; --i) {
    if (!is_leaf(i)) continue;
    if (i == escape_) leaves.push_back({0, kNone, kNone, 0, true});
    else leaves.push_back({(nodes_[i].weight + 1) / 2, kNone, kNone, nodes_[i].value, false});
  }
  std::stable_sort(leaves.begin(), leaves.end(),
                   [](const Item& a, const Item& b) { return a.weight < b.weight; });

  std::vector<Item> built;  // removal order; root appended last
  std::deque<Item> merged;
  std::size_t next_leaf = 0;
  auto pop = [&]() -> std::int32_t {
    const bool take_leaf = next_leaf < leaves.size() &&
                           (merged.empty() || leaves[next_leaf].weight <= merged.front().weight);
    if (take_leaf) {
      built.push_back(leaves[next_leaf++]);
    } else {
      built.push_back(merged.front());
      merged.pop_front();
    }
    return static_cast<std::int32_t>(built.size()) - 1;
  };
  while (leaves.size() - next_leaf + merged.size() > 1) {
    const auto a = pop();
    const auto b = pop();
    merged.push_back(Item{built[a].weight + built[b].weight, b, a});
  }
  if (!merged.empty()) built.push_back(merged.front());
  else built.push_back(leaves[next_leaf]);

  const auto m = static_cast<std::int32_t>(built.size());
  auto index_of = [m](std::int32_t order) { return m - 1 - order; };
  nodes_.assign(m, Node{});
  leaf_of_.clear();
  for (std::int32_t order = 0; order < m; ++order) {
    const Item& it = built[order];
    const std::int32_t i = index_of(order);
    Node& n = nodes_[i];
    n.weight = it.weight;
    n.value = it.value;
    if (it.left != kNone) {
      n.left = index_of(it.left);
      n.right = index_of(it.right);
      nodes_[n.left].parent = i;
      nodes_[n.right].parent = i;
    } else if (it.escape) {
      escape_ = i;
    } else {
      leaf_of_.emplace(it.value, i);
    }
  }
  nodes_[0].parent = kNone;
}

std::vector<std::uint64_t> AdaptiveHuffman::serialize() const {
  std::vector<std::uint64_t> out;
  out.reserve(nodes_.size() * 4 + 1);
  out.push_back(static_cast<std::uint64_t>(escape_));
  for (const Node& n : nodes_) {
    out.push_back(n.weight);
    out.push_back(static_cast<std::uint64_t>(static_cast<std::int64_t>(n.parent)));
    out.push_back(static_cast<std::uint64_t>(static_cast<std::int64_t>(n.left)));
    out.push_back(n.left == kNone ? n.value : static_cast<std::uint64_t>(n.right));
  }
  return out;
}

bool AdaptiveHuffman::check_invariants() const {
  const auto n = static_cast<std::int32_t>(nodes_.size());
  if (escape_ != n - 1 || !is_leaf(escape_) || nodes_[escape_].weight != 0) return false;
  if (nodes_[0].parent != kNone) return false;
  for (std::int32_t i = 0; i < n; ++i) {
    const Node& node = nodes_[i];
    if (i > 0 && nodes_[i - 1].weight < node.weight) return false;
    if (i > 0 && (node.parent == kNone || node.parent >= i)) return false;
    if (!is_leaf(i)) {
      if (node.right != node.left + 1) return false;
      if (nodes_[node.left].parent != i || nodes_[node.right].parent != i) return false;
      if (node.weight != nodes_[node.left].weight + nodes_[node.right].weight) return false;
    } else if (i != escape_) {
      auto it = leaf_of_.find(node.value);
      if (it == leaf_of_.end() || it->second != i || node.weight == 0) return false;
    }
  }
  // Siblings occupy (1,2), (3,4), ...: with adjacency above this is implied by
  // every non-root node having exactly one sibling slot.
  for (std::int32_t i = 1; i < n; i += 2) {
    if (i + 1 >= n || nodes_[i].parent != nodes_[i + 1].parent) return false;
  }
  return true;
}

}  // namespace wlz
