// Hash chains over the first k symbols of each position, newest first.
// Evicted positions are not unlinked; traversal stops at the first position
// older than the window and cuts the chain there. Links store position + 1
// so that zero marks the end of a chain.

#include <array>
#include <cstdlib>
#include <new>

#include "match_structures.hpp"

namespace wlz::detail {
namespace {

class HashChain final : public MatchStructure {
public:
  HashChain(const WindowConfig& cfg, const History& h, std::uint64_t limit, std::uint64_t hint)
      : history_(h),
        k_(hashed_symbols(cfg.structure)),
        bits_(cfg.effective_table_bits()),
        max_chain_(cfg.max_chain),
        head_(static_cast<std::uint32_t*>(std::calloc(std::size_t{1} << bits_, sizeof(std::uint32_t)))),
        prev_(limit, hint, 0) {
    if (!head_) throw std::bad_alloc();
  }

  unsigned lag() const override { return k_ - 1; }
  void reserve_for(std::uint64_t p) override { prev_.reserve_for(p); }

  void add(std::uint64_t p) override {
    std::array<Symbol, 4> key{};
    for (unsigned i = 0; i < k_; ++i) key[i] = history_[p + i];
    auto& head = head_[hash_symbols(key.data(), k_, bits_)];
    prev_[p] = head;
    head = static_cast<std::uint32_t>(p + 1);
  }

  void remove(std::uint64_t) override {}

  Candidate search(const Query& q) const override {
    Candidate best;
    const auto m = static_cast<unsigned>(q.lookahead.size());
    if (m < k_) return best;
    std::uint32_t link = head_[hash_symbols(q.lookahead.data(), k_, bits_)];
    std::uint64_t last = 0;
    for (unsigned n = 0; n < max_chain_ && link != 0; ++n) {
      const std::uint64_t p = link - 1;
      if (p < q.start) {
        if (last != 0) prev_[last - 1] = 0;
        break;
      }
      const unsigned len = q.match_length(p);
      if (len > best.length) {
        best = {len, p};
        if (len == m) break;
      }
      last = p + 1;
      link = prev_[p];
    }
    return best;
  }

private:
  const History& history_;
  unsigned k_;
  unsigned bits_;
  unsigned max_chain_;
  // calloc leaves untouched pages unmapped, so large sparse tables stay cheap.
  struct Free {
    void operator()(std::uint32_t* p) const { std::free(p); }
  };
  std::unique_ptr<std::uint32_t[], Free> head_;
  mutable PositionArray<std::uint32_t> prev_;
};

}  // namespace

std::unique_ptr<MatchStructure> make_hash_chain(const WindowConfig& cfg, const History& h,
                                                std::uint64_t limit, std::uint64_t hint) {
  return std::make_unique<HashChain>(cfg, h, limit, hint);
}

}  // namespace wlz::detail
