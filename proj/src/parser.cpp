#include "wlz/parser.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <unordered_set>

#include "wlz/error.hpp"
#include "wlz/integer_codes.hpp"

namespace wlz {

const char* to_string(ParseVariant v) {
  switch (v) {
    case ParseVariant::LZ77: return "LZ77";
    case ParseVariant::LZSS: return "LZSS";
    case ParseVariant::LZSSLazy: return "LZSS-Lazy";
    case ParseVariant::LZSSShort: return "LZSS-Short";
  }
  return "?";
}

ParseVariant parse_variant(const std::string& name) {
  std::string n;
  for (char c : name) n += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (n == "lz77") return ParseVariant::LZ77;
  if (n == "lzss") return ParseVariant::LZSS;
  if (n == "lazy" || n == "lzss-lazy") return ParseVariant::LZSSLazy;
  if (n == "short" || n == "lzss-short") return ParseVariant::LZSSShort;
  throw ConfigError("unknown variant '" + name + "' (lz77, lzss, lazy, short)");
}

DirectBitCostModel::DirectBitCostModel(std::span<const Symbol> symbols, const WindowConfig& cfg)
    : copy_bits_(cfg.window_log2 + width_for_count(cfg.max_match - cfg.min_match + 1)) {
  literal_.resize(symbols.size());
  std::unordered_set<Symbol> seen;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto vocab = seen.size();
    const bool fresh = seen.insert(symbols[i]).second;
    literal_[i] = static_cast<std::uint32_t>(std::bit_width(vocab) + (fresh ? kNewTokenSurcharge : 0));
  }
}

DirectBitCostModel::DirectBitCostModel(std::uint64_t literal_bits, std::uint64_t copy_bits)
    : constant_literal_(literal_bits), copy_bits_(copy_bits) {}

std::uint64_t DirectBitCostModel::literal_bits(std::size_t position) const {
  return literal_.empty() ? constant_literal_ : literal_[position];
}

namespace {

std::span<const Symbol> lookahead_at(std::span<const Symbol> symbols, std::size_t i, std::size_t limit) {
  return symbols.subspan(i, std::min(limit, symbols.size() - i));
}

}  // namespace

std::vector<ParseItem> parse_lz77(std::span<const Symbol> symbols, const WindowConfig& cfg) {
  std::vector<ParseItem> items;
  SlidingWindow window(cfg, symbols.size());
  const std::size_t n = symbols.size();
  std::size_t i = 0;
  while (i < n) {
    // Keep one symbol back so the triplet always has a next symbol.
    const auto la = symbols.subspan(i, std::min<std::size_t>(cfg.max_match, n - 1 - i));
    const auto match = la.empty() ? std::nullopt : window.find_longest(la);
    const std::size_t len = match ? match->length : 0;
    items.push_back(Triplet{match, symbols[i + len]});
    for (std::size_t k = 0; k <= len; ++k) window.insert(symbols[i + k]);
    i += len + 1;
  }
  return items;
}

std::vector<ParseItem> parse_lzss_greedy(std::span<const Symbol> symbols, const WindowConfig& cfg) {
  std::vector<ParseItem> items;
  SlidingWindow window(cfg, symbols.size());
  std::size_t i = 0;
  while (i < symbols.size()) {
    const auto match = window.find_longest(lookahead_at(symbols, i, cfg.max_match));
    if (!match) {
      items.push_back(Literal{symbols[i]});
      window.insert(symbols[i++]);
      continue;
    }
    items.push_back(Copy{*match});
    for (std::size_t k = 0; k < match->length; ++k) window.insert(symbols[i++]);
  }
  return items;
}

std::vector<ParseItem> parse_lzss_lazy(std::span<const Symbol> symbols, const WindowConfig& cfg) {
  std::vector<ParseItem> items;
  SlidingWindow window(cfg, symbols.size());
  const std::size_t n = symbols.size();
  std::size_t i = 0;
  std::optional<Match> current;
  bool have_current = false;
  while (i < n) {
    if (!have_current) current = window.find_longest(lookahead_at(symbols, i, cfg.max_match));
    have_current = false;
    if (!current) {
      items.push_back(Literal{symbols[i]});
      window.insert(symbols[i++]);
      continue;
    }
    window.insert(symbols[i]);
    if (i + 1 < n) {
      auto next = window.find_longest(lookahead_at(symbols, i + 1, cfg.max_match));
      if (next && next->length > current->length) {
        items.push_back(Literal{symbols[i]});
        ++i;
        current = next;
        have_current = true;
        continue;
      }
    }
    items.push_back(Copy{*current});
    for (std::size_t k = 1; k < current->length; ++k) window.insert(symbols[i + k]);
    i += current->length;
  }
  return items;
}

std::vector<std::optional<Match>> longest_matches(std::span<const Symbol> symbols,
                                                  const WindowConfig& cfg) {
  std::vector<std::optional<Match>> out(symbols.size());
  SlidingWindow window(cfg, symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out[i] = window.find_longest(lookahead_at(symbols, i, cfg.max_match));
    window.insert(symbols[i]);
  }
  return out;
}

std::vector<ParseItem> shortest_path_parse(std::span<const Symbol> symbols,
                                           std::span<const std::optional<Match>> longest,
                                           unsigned min_match, const CostModel& cost) {
  const std::size_t n = symbols.size();
  constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(n + 1, kInf);
  // Length of the edge that reaches each node; 1 with offset 0 means literal.
  std::vector<Match> via(n + 1);
  best[0] = 0;
  const std::uint64_t flag = cost.flag_bits();
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] == kInf) continue;
    const std::uint64_t lit = best[i] + flag + cost.literal_bits(i);
    if (lit < best[i + 1]) {
      best[i + 1] = lit;
      via[i + 1] = Match{0, 1};
    }
    const auto& m = longest[i];
    if (!m) continue;
    for (unsigned l = min_match; l <= m->length && i + l <= n; ++l) {
      const Match edge{m->offset, l};
      const std::uint64_t c = best[i] + flag + cost.copy_bits(edge);
      if (c < best[i + l]) {
        best[i + l] = c;
        via[i + l] = edge;
      }
    }
  }
  std::vector<ParseItem> items;
  for (std::size_t j = n; j > 0;) {
    const Match e = via[j];
    if (e.offset == 0) {
      items.push_back(Literal{symbols[j - 1]});
      j -= 1;
    } else {
      items.push_back(Copy{e});
      j -= e.length;
    }
  }
  std::reverse(items.begin(), items.end());
  return items;
}

std::vector<ParseItem> parse_lzss_shortest(std::span<const Symbol> symbols, const WindowConfig& cfg,
                                           const CostModel& cost) {
  const auto longest = longest_matches(symbols, cfg);
  return shortest_path_parse(symbols, longest, cfg.min_match, cost);
}

std::vector<ParseItem> parse(ParseVariant variant, std::span<const Symbol> symbols,
                             const WindowConfig& cfg) {
  switch (variant) {
    case ParseVariant::LZ77: return parse_lz77(symbols, cfg);
    case ParseVariant::LZSS: return parse_lzss_greedy(symbols, cfg);
    case ParseVariant::LZSSLazy: return parse_lzss_lazy(symbols, cfg);
    case ParseVariant::LZSSShort: return parse_lzss_shortest(symbols, cfg, DirectBitCostModel(symbols, cfg));
  }
  throw ConfigError("unknown parse variant");
}

std::uint64_t parse_cost(std::span<const ParseItem> items, const CostModel& cost) {
  std::uint64_t total = 0;
  std::size_t pos = 0;
  for (const ParseItem& item : items) {
    total += cost.flag_bits();
    if (std::holds_alternative<Literal>(item)) {
      total += cost.literal_bits(pos++);
    } else if (const auto* copy = std::get_if<Copy>(&item)) {
      total += cost.copy_bits(copy->match);
      pos += copy->match.length;
    } else {
      throw ConfigError("parse_cost prices LZSS items only");
    }
  }
  return total;
}

namespace {

void copy_back(std::vector<Symbol>& out, const Match& m) {
  if (m.offset == 0 || m.offset > out.size()) {
    throw CorruptError("copy offset " + std::to_string(m.offset) + " exceeds " +
                       std::to_string(out.size()) + " reconstructed symbols");
  }
  std::size_t from = out.size() - m.offset;
  for (std::uint32_t k = 0; k < m.length; ++k) {
    const Symbol s = out[from + k];
    out.push_back(s);
  }
}

}  // namespace

std::vector<Symbol> replay(std::span<const ParseItem> items) {
  std::vector<Symbol> out;
  for (const ParseItem& item : items) {
    if (const auto* lit = std::get_if<Literal>(&item)) {
      out.push_back(lit->symbol);
    } else if (const auto* copy = std::get_if<Copy>(&item)) {
      copy_back(out, copy->match);
    } else {
      const auto& t = std::get<Triplet>(item);
      if (t.match) copy_back(out, *t.match);
      out.push_back(t.next);
    }
  }
  return out;
}

}  // namespace wlz
