// Patricia tries over the max_match-symbol string of every window position.
// Each node records the newest position in its subtree, so a search ending at
// a node reports the closest occurrence of the longest match. All keys have
// the same length; identical keys share one leaf that tracks the newest
// position.

#include <unordered_map>

#include "match_structures.hpp"

namespace wlz::detail {
namespace {

constexpr std::int32_t kNoNode = -1;

class Patricia final : public MatchStructure {
public:
  Patricia(const WindowConfig& cfg, const History& h, std::uint64_t limit, std::uint64_t hint)
      : history_(h),
        kind_(cfg.structure),
        key_len_(cfg.max_match),
        bits_(cfg.effective_table_bits()),
        leaf_of_(limit, hint, kNoNode) {
    if (kind_ == Structure::PTH) table_.assign(std::size_t{1} << bits_, kNoNode);
  }

  unsigned lag() const override { return key_len_ - 1; }
  void reserve_for(std::uint64_t p) override { leaf_of_.reserve_for(p); }

  void add(std::uint64_t p) override {
    std::int32_t& root = root_slot(p);
    if (root == kNoNode) {
      root = new_node(key_len_, p, kNoNode, 0);
      leaf_of_[p] = root;
      return;
    }
    std::int32_t v = root;
    unsigned verified = 0;
    for (;;) {
      Node& node = nodes_[v];
      const std::uint64_t rep = node.recent;
      const unsigned depth = node.depth;
      unsigned j = verified;
      while (j < depth && history_[p + j] == history_[rep + j]) ++j;
      if (j < depth) {
        split(v, j, p, root);
        return;
      }
      node.recent = p;
      if (depth == key_len_) {
        leaf_of_[p] = v;
        return;
      }
      const Symbol edge = history_[p + depth];
      auto it = children_.find(child_key(v, edge));
      if (it == children_.end()) {
        const std::int32_t leaf = new_node(key_len_, p, v, edge);
        attach(v, leaf, edge);
        leaf_of_[p] = leaf;
        return;
      }
      verified = depth;
      v = it->second;
    }
  }

  void remove(std::uint64_t p) override {
    const std::int32_t leaf = leaf_of_[p];
    if (leaf == kNoNode || !nodes_[leaf].alive || nodes_[leaf].depth != key_len_ ||
        nodes_[leaf].recent != p) {
      return;
    }
    leaf_of_[p] = kNoNode;
    const std::int32_t parent = nodes_[leaf].parent;
    if (parent == kNoNode) {
      root_slot(p) = kNoNode;
      release_slot(p);
      free_node(leaf);
      return;
    }
    detach(parent, leaf);
    free_node(leaf);
    if (nodes_[parent].child_count == 1) {
      const std::int32_t only = nodes_[parent].first_child;
      detach(parent, only);
      const std::int32_t grand = nodes_[parent].parent;
      const Symbol edge = nodes_[parent].edge;
      if (grand == kNoNode) {
        root_slot(p) = only;
        nodes_[only].parent = kNoNode;
      } else {
        detach(grand, parent);
        attach(grand, only, edge);
      }
      free_node(parent);
    }
  }

  Candidate search(const Query& q) const override {
    const auto m = static_cast<unsigned>(q.lookahead.size());
    std::int32_t v = find_root(q.lookahead);
    if (v == kNoNode) return {};
    unsigned verified = 0;
    for (;;) {
      const Node& node = nodes_[v];
      const unsigned limit = std::min<unsigned>(node.depth, m);
      const unsigned j = q.match_length(node.recent, verified) ;
      if (j < limit || limit == m) return {std::min(j, limit), node.recent};
      auto it = children_.find(child_key(v, q.lookahead[node.depth]));
      if (it == children_.end()) return {node.depth, node.recent};
      verified = node.depth;
      v = it->second;
    }
  }

private:
  struct Node {
    unsigned depth = 0;  // symbols shared by every key below; key_len_ for leaves
    std::uint64_t recent = 0;
    std::int32_t parent = kNoNode;
    Symbol edge = 0;  // symbol at the parent's depth leading here
    std::int32_t first_child = kNoNode;
    std::int32_t next_sibling = kNoNode;
    std::int32_t prev_sibling = kNoNode;
    std::uint32_t child_count = 0;
    bool alive = true;
  };

  static std::uint64_t child_key(std::int32_t node, Symbol edge) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(node)) << 32) | edge;
  }

  std::int32_t new_node(unsigned depth, std::uint64_t recent, std::int32_t parent, Symbol edge) {
    std::int32_t id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
      nodes_[id] = Node{};
    } else {
      id = static_cast<std::int32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    Node& n = nodes_[id];
    n.depth = depth;
    n.recent = recent;
    n.parent = parent;
    n.edge = edge;
    return id;
  }

  void free_node(std::int32_t id) {
    nodes_[id].alive = false;
    free_.push_back(id);
  }

  void attach(std::int32_t parent, std::int32_t child, Symbol edge) {
    Node& c = nodes_[child];
    Node& p = nodes_[parent];
    c.parent = parent;
    c.edge = edge;
    c.prev_sibling = kNoNode;
    c.next_sibling = p.first_child;
    if (p.first_child != kNoNode) nodes_[p.first_child].prev_sibling = child;
    p.first_child = child;
    ++p.child_count;
    children_[child_key(parent, edge)] = child;
  }

  void detach(std::int32_t parent, std::int32_t child) {
    Node& c = nodes_[child];
    Node& p = nodes_[parent];
    if (c.prev_sibling != kNoNode) nodes_[c.prev_sibling].next_sibling = c.next_sibling;
    else p.first_child = c.next_sibling;
    if (c.next_sibling != kNoNode) nodes_[c.next_sibling].prev_sibling = c.prev_sibling;
    c.prev_sibling = c.next_sibling = kNoNode;
    --p.child_count;
    children_.erase(child_key(parent, c.edge));
  }

  // Key p diverges from node v at symbol `at` < depth(v): a new internal node
  // takes v's place and holds v and the new leaf.
  void split(std::int32_t v, unsigned at, std::uint64_t p, std::int32_t& root) {
    const std::int32_t parent = nodes_[v].parent;
    const Symbol edge = nodes_[v].edge;
    const std::uint64_t rep = nodes_[v].recent;
    const std::int32_t w = new_node(at, p, kNoNode, 0);
    if (parent == kNoNode) {
      root = w;
      nodes_[v].parent = kNoNode;
    } else {
      detach(parent, v);
      attach(parent, w, edge);
    }
    attach(w, v, history_[rep + at]);
    const std::int32_t leaf = new_node(key_len_, p, kNoNode, 0);
    attach(w, leaf, history_[p + at]);
    leaf_of_[p] = leaf;
  }

  std::int32_t& root_slot(std::uint64_t p) {
    switch (kind_) {
      case Structure::PTA: return roots_.try_emplace(history_[p], kNoNode).first->second;
      case Structure::PTH: {
        const Symbol key[2] = {history_[p], history_[p + 1]};
        return table_[hash_symbols(key, 2, bits_)];
      }
      default: return single_root_;
    }
  }

  void release_slot(std::uint64_t p) {
    if (kind_ == Structure::PTA) roots_.erase(history_[p]);
  }

  std::int32_t find_root(std::span<const Symbol> la) const {
    switch (kind_) {
      case Structure::PTA: {
        auto it = roots_.find(la[0]);
        return it == roots_.end() ? kNoNode : it->second;
      }
      case Structure::PTH: return la.size() < 2 ? kNoNode : table_[hash_symbols(la.data(), 2, bits_)];
      default: return single_root_;
    }
  }

  const History& history_;
  Structure kind_;
  unsigned key_len_;
  unsigned bits_;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> free_;
  std::unordered_map<std::uint64_t, std::int32_t> children_;
  PositionArray<std::int32_t> leaf_of_;
  std::int32_t single_root_ = kNoNode;
  std::unordered_map<Symbol, std::int32_t> roots_;
  std::vector<std::int32_t> table_;
};

}  // namespace

std::unique_ptr<MatchStructure> make_patricia(const WindowConfig& cfg, const History& h,
                                              std::uint64_t limit, std::uint64_t hint) {
  return std::make_unique<Patricia>(cfg, h, limit, hint);
}

}  // namespace wlz::detail
