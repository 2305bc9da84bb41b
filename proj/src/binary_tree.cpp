// Binary search trees of window positions ordered by their max_match-symbol
// strings. Symbols are compared through a fixed bijective mix so that
// ascending id runs (fresh words) do not degenerate the tree into a list.
// Links store position + 1; zero is null.

#include <unordered_map>

#include "match_structures.hpp"

namespace wlz::detail {
namespace {

inline std::uint32_t order_key(Symbol s) { return s * 0x9E3779B1u; }

class BinaryTree final : public MatchStructure {
public:
  BinaryTree(const WindowConfig& cfg, const History& h, std::uint64_t limit, std::uint64_t hint)
      : history_(h),
        kind_(cfg.structure),
        key_len_(cfg.max_match),
        bits_(cfg.effective_table_bits()),
        left_(limit, hint),
        right_(limit, hint),
        parent_(limit, hint),
        in_tree_(limit, hint) {
    if (kind_ == Structure::BTH) table_.assign(std::size_t{1} << bits_, 0);
  }

  unsigned lag() const override { return key_len_ - 1; }

  void reserve_for(std::uint64_t p) override {
    left_.reserve_for(p);
    right_.reserve_for(p);
    parent_.reserve_for(p);
    in_tree_.reserve_for(p);
  }

  void add(std::uint64_t p) override {
    const std::uint32_t node = link(p);
    left_[p] = right_[p] = parent_[p] = 0;
    in_tree_[p] = 1;
    std::uint32_t& root = root_slot(p);
    if (root == 0) {
      root = node;
      return;
    }
    std::uint32_t x = root;
    for (;;) {
      const std::uint64_t xp = x - 1;
      const int c = compare_keys(p, xp);
      if (c == 0) {
        // Same string: the newer position takes over the node.
        left_[p] = left_[xp];
        right_[p] = right_[xp];
        parent_[p] = parent_[xp];
        if (left_[p] != 0) parent_[left_[p] - 1] = node;
        if (right_[p] != 0) parent_[right_[p] - 1] = node;
        replace_child(parent_[xp], x, node, root);
        in_tree_[xp] = 0;
        return;
      }
      std::uint32_t& next = c < 0 ? left_[xp] : right_[xp];
      if (next == 0) {
        next = node;
        parent_[p] = x;
        return;
      }
      x = next;
    }
  }

  void remove(std::uint64_t p) override {
    if (!in_tree_[p]) return;
    in_tree_[p] = 0;
    std::uint32_t& root = root_slot(p);
    const std::uint32_t node = link(p);
    const std::uint32_t l = left_[p];
    const std::uint32_t r = right_[p];
    if (l == 0) {
      transplant(node, r, root);
    } else if (r == 0) {
      transplant(node, l, root);
    } else {
      std::uint32_t s = r;
      while (left_[s - 1] != 0) s = left_[s - 1];
      const std::uint64_t sp = s - 1;
      if (parent_[sp] != node) {
        transplant(s, right_[sp], root);
        right_[sp] = r;
        parent_[r - 1] = s;
      }
      transplant(node, s, root);
      left_[sp] = l;
      parent_[l - 1] = s;
    }
    if (root == 0) release_slot(p);
  }

  Candidate search(const Query& q) const override {
    Candidate best;
    const auto m = static_cast<unsigned>(q.lookahead.size());
    std::uint32_t x = find_root(q.lookahead);
    while (x != 0) {
      const std::uint64_t xp = x - 1;
      const unsigned len = q.match_length(xp);
      if (len > best.length || (len == best.length && len > 0 && xp > best.position)) best = {len, xp};
      if (len == m) break;
      const bool less = order_key(q.lookahead[len]) < order_key(history_[xp + len]);
      x = less ? left_[xp] : right_[xp];
    }
    return best;
  }

private:
  static std::uint32_t link(std::uint64_t p) { return static_cast<std::uint32_t>(p + 1); }

  int compare_keys(std::uint64_t a, std::uint64_t b) const {
    for (unsigned i = 0; i < key_len_; ++i) {
      const Symbol sa = history_[a + i];
      const Symbol sb = history_[b + i];
      if (sa != sb) return order_key(sa) < order_key(sb) ? -1 : 1;
    }
    return 0;
  }

  void replace_child(std::uint32_t parent, std::uint32_t old_child, std::uint32_t new_child,
                     std::uint32_t& root) {
    if (parent == 0) {
      root = new_child;
    } else if (left_[parent - 1] == old_child) {
      left_[parent - 1] = new_child;
    } else {
      right_[parent - 1] = new_child;
    }
  }

  void transplant(std::uint32_t u, std::uint32_t v, std::uint32_t& root) {
    replace_child(parent_[u - 1], u, v, root);
    if (v != 0) parent_[v - 1] = parent_[u - 1];
  }

  std::uint32_t& root_slot(std::uint64_t p) {
    switch (kind_) {
      case Structure::BTA: return roots_[history_[p]];
      case Structure::BTH: {
        const Symbol key[2] = {history_[p], history_[p + 1]};
        return table_[hash_symbols(key, 2, bits_)];
      }
      default: return single_root_;
    }
  }

  void release_slot(std::uint64_t p) {
    if (kind_ == Structure::BTA) roots_.erase(history_[p]);
  }

  std::uint32_t find_root(std::span<const Symbol> la) const {
    switch (kind_) {
      case Structure::BTA: {
        auto it = roots_.find(la[0]);
        return it == roots_.end() ? 0 : it->second;
      }
      case Structure::BTH: return la.size() < 2 ? 0 : table_[hash_symbols(la.data(), 2, bits_)];
      default: return single_root_;
    }
  }

  const History& history_;
  Structure kind_;
  unsigned key_len_;
  unsigned bits_;
  PositionArray<std::uint32_t> left_;
  PositionArray<std::uint32_t> right_;
  PositionArray<std::uint32_t> parent_;
  PositionArray<std::uint8_t> in_tree_;
  std::uint32_t single_root_ = 0;
  std::unordered_map<Symbol, std::uint32_t> roots_;
  std::vector<std::uint32_t> table_;
};

}  // namespace

std::unique_ptr<MatchStructure> make_binary_tree(const WindowConfig& cfg, const History& h,
                                                 std::uint64_t limit, std::uint64_t hint) {
  return std::make_unique<BinaryTree>(cfg, h, limit, hint);
}

}  // namespace wlz::detail
