#include "wlz/match_finder.hpp"

#include <algorithm>
#include <cctype>

#include "match_structures.hpp"
#include "wlz/error.hpp"

namespace wlz {

const char* to_string(Structure s) {
  switch (s) {
    case Structure::BT: return "BT";
    case Structure::BTA: return "BTA";
    case Structure::BTH: return "BTH";
    case Structure::HT1: return "HT1";
    case Structure::HT2: return "HT2";
    case Structure::HT3: return "HT3";
    case Structure::HT4: return "HT4";
    case Structure::PT: return "PT";
    case Structure::PTA: return "PTA";
    case Structure::PTH: return "PTH";
  }
  return "?";
}

Structure parse_structure(const std::string& name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (Structure s : kAllStructures) {
    if (upper == to_string(s)) return s;
  }
  throw ConfigError("unknown structure '" + name + "' (BT, BTA, BTH, HT1-HT4, PT, PTA, PTH)");
}

unsigned hashed_symbols(Structure s) noexcept {
  switch (s) {
    case Structure::BTH:
    case Structure::PTH: return 2;
    case Structure::HT1: return 1;
    case Structure::HT2: return 2;
    case Structure::HT3: return 3;
    case Structure::HT4: return 4;
    default: return 0;
  }
}

bool is_binary_tree(Structure s) noexcept {
  return s == Structure::BT || s == Structure::BTA || s == Structure::BTH;
}

unsigned default_table_bits(Structure s) noexcept {
  switch (s) {
    case Structure::BTH:
    case Structure::PTH: return 18;
    case Structure::HT1: return 16;
    case Structure::HT2: return 18;
    case Structure::HT3: return 21;
    case Structure::HT4: return 24;
    default: return 0;
  }
}

void WindowConfig::validate() const {
  if (window_log2 < 1 || window_log2 > 30) throw ConfigError("window_log2 must be in [1, 30]");
  if (min_match < 1) throw ConfigError("min_match must be >= 1");
  if (min_match > max_match) throw ConfigError("min_match must not exceed max_match");
  if (max_match > 65535) throw ConfigError("max_match must be <= 65535");
  if (capacity() < max_match) throw ConfigError("window capacity must be >= max_match");
  if (min_match < hashed_symbols(structure)) {
    throw ConfigError(std::string(to_string(structure)) + " hashes " +
                      std::to_string(hashed_symbols(structure)) + " symbols; min_match must be at least that");
  }
  if (table_bits > 30) throw ConfigError("table_bits must be <= 30");
  if (max_chain < 1) throw ConfigError("max_chain must be >= 1");
}

std::optional<Match> brute_force_longest(std::span<const Symbol> buffer,
                                         std::span<const Symbol> lookahead,
                                         unsigned min_match, unsigned max_match) {
  const std::size_t m = std::min<std::size_t>(lookahead.size(), max_match);
  const std::size_t n = buffer.size();
  auto at = [&](std::size_t i) { return i < n ? buffer[i] : lookahead[i - n]; };
  std::size_t best_len = 0;
  std::size_t best_off = 0;
  for (std::size_t off = 1; off <= n; ++off) {
    const std::size_t start = n - off;
    std::size_t len = 0;
    while (len < m && at(start + len) == lookahead[len]) ++len;
    if (len > best_len) {
      best_len = len;
      best_off = off;
    }
  }
  if (best_len == 0 || best_len < min_match) return std::nullopt;
  return Match{static_cast<std::uint32_t>(best_off), static_cast<std::uint32_t>(best_len)};
}

SlidingWindow::SlidingWindow(const WindowConfig& config, std::uint64_t size_hint) : config_(config) {
  config_.validate();
  const std::uint64_t limit = config_.capacity() * 2;
  const std::uint64_t hint = size_hint == 0 ? limit : std::min(limit, size_hint + 1);
  history_ = std::make_unique<detail::History>(limit, hint);
  if (is_binary_tree(config_.structure)) {
    structure_ = detail::make_binary_tree(config_, *history_, limit, hint);
  } else if (config_.structure == Structure::PT || config_.structure == Structure::PTA ||
             config_.structure == Structure::PTH) {
    structure_ = detail::make_patricia(config_, *history_, limit, hint);
  } else {
    structure_ = detail::make_hash_chain(config_, *history_, limit, hint);
  }
}

SlidingWindow::~SlidingWindow() = default;
SlidingWindow::SlidingWindow(SlidingWindow&&) noexcept = default;
SlidingWindow& SlidingWindow::operator=(SlidingWindow&&) noexcept = default;

std::uint64_t SlidingWindow::occupancy() const noexcept {
  return std::min(pos_, config_.capacity());
}

void SlidingWindow::insert(Symbol s) {
  const std::uint64_t p = pos_;
  history_->put(p, s);
  structure_->reserve_for(p);
  pos_ = p + 1;
  if (pos_ > config_.capacity()) structure_->remove(pos_ - 1 - config_.capacity());
  const unsigned lag = structure_->lag();
  if (pos_ > lag) structure_->add(pos_ - 1 - lag);
}

std::optional<Match> SlidingWindow::find_longest(std::span<const Symbol> lookahead) const {
  if (lookahead.size() > config_.max_match) lookahead = lookahead.first(config_.max_match);
  const std::uint64_t occ = occupancy();
  if (lookahead.empty() || occ == 0) return std::nullopt;

  const detail::Query q{*history_, pos_, pos_ - occ, lookahead};
  const auto m = static_cast<unsigned>(lookahead.size());
  detail::Candidate best;

  const std::uint64_t pending = std::min<std::uint64_t>(structure_->lag(), occ);
  for (std::uint64_t d = 1; d <= pending && best.length < m; ++d) {
    const unsigned len = q.match_length(pos_ - d);
    if (len > best.length) best = {len, pos_ - d};
  }
  if (best.length < m) {
    const detail::Candidate c = structure_->search(q);
    if (c.length > best.length) best = c;
  }
  if (best.length == 0 || best.length < config_.min_match) return std::nullopt;
  return Match{static_cast<std::uint32_t>(pos_ - best.position), best.length};
}

}  // namespace wlz
