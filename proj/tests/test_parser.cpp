#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <random>

#include "wlz/error.hpp"
#include "wlz/parser.hpp"

using namespace wlz;

namespace {

WindowConfig small_window(Structure s = Structure::PTH, unsigned min_match = 2) {
  WindowConfig c;
  c.window_log2 = 6;
  c.max_match = 8;
  c.min_match = min_match;
  c.structure = s;
  return c;
}

ParseItem lit(Symbol s) { return Literal{s}; }
ParseItem copy(std::uint32_t offset, std::uint32_t length) { return Copy{Match{offset, length}}; }
ParseItem trip(Symbol next) { return Triplet{std::nullopt, next}; }
ParseItem trip(std::uint32_t offset, std::uint32_t length, Symbol next) { return Triplet{Match{offset, length}, next}; }

std::vector<Symbol> random_stream(std::mt19937_64& rng, std::size_t n, Symbol alphabet) {
  std::vector<Symbol> s(n);
  for (Symbol& x : s) x = static_cast<Symbol>(rng() % alphabet);
  return s;
}

// Minimum cost over every valid LZSS parse: at each position a literal or any
// copy of length [min_match, max_match] at any offset inside the window.
std::uint64_t brute_force_min_cost(const std::vector<Symbol>& s, const WindowConfig& c, const CostModel& cost) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::function<void(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t acc) {
    if (acc >= best) return;
    if (i == s.size()) {
      best = acc;
      return;
    }
    go(i + 1, acc + cost.flag_bits() + cost.literal_bits(i));
    const std::size_t oldest = i > c.capacity() ? i - c.capacity() : 0;
    for (std::size_t from = oldest; from < i; ++from) {
      std::size_t len = 0;
      while (i + len < s.size() && len < c.max_match && s[from + len] == s[i + len]) {
        ++len;
        if (len >= c.min_match) {
          go(i + len, acc + cost.flag_bits() + cost.copy_bits(Match{static_cast<std::uint32_t>(i - from),
                                                                      static_cast<std::uint32_t>(len)}));
        }
      }
    }
  };
  go(0, 0);
  return best;
}

}  // namespace

TEST(ParseLz77, Examples) {
  const auto c = small_window();
  EXPECT_TRUE(parse_lz77({}, c).empty());
  EXPECT_EQ(parse_lz77(std::vector<Symbol>{7}, c), std::vector<ParseItem>{trip(7)});
  EXPECT_EQ(parse_lz77(std::vector<Symbol>{1, 2, 1, 2, 3}, c),
            (std::vector<ParseItem>{trip(1), trip(2), trip(2, 2, 3)}));
}

TEST(ParseLz77, MatchShortenedToLeaveNextSymbol) {
  const auto items = parse_lz77(std::vector<Symbol>{4, 4, 4, 4}, small_window());
  EXPECT_EQ(items, (std::vector<ParseItem>{trip(4), trip(1, 2, 4)}));
}

TEST(ParseLzssGreedy, Examples) {
  const auto c = small_window();
  EXPECT_TRUE(parse_lzss_greedy({}, c).empty());
  EXPECT_EQ(parse_lzss_greedy(std::vector<Symbol>{1, 1, 1, 1}, c), (std::vector<ParseItem>{lit(1), copy(1, 3)}));
  EXPECT_EQ(parse_lzss_greedy(std::vector<Symbol>{1, 2, 3}, c),
            (std::vector<ParseItem>{lit(1), lit(2), lit(3)}));
}

TEST(ParseLzssLazy, DefersToLongerMatch) {
  const std::vector<Symbol> s{1, 2, 9, 2, 3, 4, 8, 1, 2, 3, 4};
  const auto c = small_window();
  std::vector<ParseItem> expected;
  for (std::size_t i = 0; i < 8; ++i) expected.push_back(lit(s[i]));
  expected.push_back(copy(5, 3));
  EXPECT_EQ(parse_lzss_lazy(s, c), expected);
  // Greedy takes the shorter match first.
  const auto greedy = parse_lzss_greedy(s, c);
  EXPECT_EQ(greedy[7], copy(7, 2));
}

TEST(ParseLzssLazy, KeepsMatchOnTie) {
  // Matches of length 2 at both p and p + 1: no deferral.
  const std::vector<Symbol> s{1, 2, 3, 7, 1, 2, 3};
  EXPECT_EQ(parse_lzss_lazy(s, small_window()), parse_lzss_greedy(s, small_window()));
}

TEST(ParseLzssLazy, NoMatchesEqualsGreedy) {
  std::vector<Symbol> s(50);
  for (Symbol i = 0; i < 50; ++i) s[i] = i;
  EXPECT_EQ(parse_lzss_lazy(s, small_window()), parse_lzss_greedy(s, small_window()));
}

TEST(ShortestPath, TakesFourThenEight) {
  std::vector<Symbol> s(12, 0);
  std::vector<std::optional<Match>> longest(12);
  for (std::uint32_t i = 0; i < 5; ++i) longest[i] = Match{1, 4 + i};
  const DirectBitCostModel cost(10, 12);
  EXPECT_EQ(shortest_path_parse(s, longest, 2, cost), (std::vector<ParseItem>{copy(1, 4), copy(1, 8)}));
}

TEST(ShortestPath, TakesTwoThenFive) {
  std::vector<Symbol> s(7, 0);
  std::vector<std::optional<Match>> longest(7);
  longest[0] = Match{1, 3};
  longest[2] = Match{1, 5};
  const DirectBitCostModel cost(10, 12);
  EXPECT_EQ(shortest_path_parse(s, longest, 2, cost), (std::vector<ParseItem>{copy(1, 2), copy(1, 5)}));
}

TEST(ShortestPath, ExhaustiveBinaryStreamsMatchBruteForce) {
  const auto c = small_window(Structure::PTH);
  for (auto [lit_bits, copy_bits] : {std::pair{1, 1}, std::pair{3, 5}, std::pair{8, 11}, std::pair{2, 9}}) {
    const DirectBitCostModel cost(lit_bits, copy_bits);
    for (unsigned n = 0; n <= 12; ++n) {
      for (unsigned bits = 0; bits < (1u << n); ++bits) {
        std::vector<Symbol> s(n);
        for (unsigned i = 0; i < n; ++i) s[i] = (bits >> i) & 1;
        const auto items = parse_lzss_shortest(s, c, cost);
        ASSERT_EQ(replay(items), s);
        ASSERT_EQ(parse_cost(items, cost), brute_force_min_cost(s, c, cost)) << "n=" << n << " bits=" << bits;
      }
    }
  }
}

TEST(ShortestPath, VocabularyCostModelMatchesBruteForce) {
  std::mt19937_64 rng(21);
  const auto c = small_window(Structure::BT);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_stream(rng, 1 + rng() % 12, 3);
    const DirectBitCostModel cost(s, c);
    const auto items = parse_lzss_shortest(s, c, cost);
    ASSERT_EQ(replay(items), s);
    ASSERT_EQ(parse_cost(items, cost), brute_force_min_cost(s, c, cost));
  }
}

TEST(ShortestPath, NeverWorseThanGreedyOrLazy) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10000; ++trial) {
    WindowConfig c = small_window(trial % 2 ? Structure::PTH : Structure::BT);
    c.window_log2 = 4 + static_cast<unsigned>(rng() % 4);
    c.max_match = 2 + static_cast<unsigned>(rng() % 14);
    const auto s = random_stream(rng, rng() % 201, 1 + static_cast<Symbol>(rng() % 4));
    const DirectBitCostModel cost(s, c);
    const auto shortest = parse_cost(parse_lzss_shortest(s, c, cost), cost);
    ASSERT_LE(shortest, parse_cost(parse_lzss_greedy(s, c), cost));
    ASSERT_LE(shortest, parse_cost(parse_lzss_lazy(s, c), cost));
  }
}

TEST(ShortestPath, CostModelPrices) {
  const std::vector<Symbol> s{0, 1, 0, 2, 1};
  WindowConfig c = small_window();
  c.window_log2 = 10;
  c.max_match = 16;
  const DirectBitCostModel cost(s, c);
  EXPECT_EQ(cost.copy_bits(Match{1, 2}), 10u + 4u);
  EXPECT_EQ(cost.literal_bits(0), 0u + DirectBitCostModel::kNewTokenSurcharge);
  EXPECT_EQ(cost.literal_bits(1), 1u + DirectBitCostModel::kNewTokenSurcharge);
  EXPECT_EQ(cost.literal_bits(2), 2u);
  EXPECT_EQ(cost.literal_bits(3), 2u + DirectBitCostModel::kNewTokenSurcharge);
  EXPECT_EQ(cost.literal_bits(4), 2u);
}

TEST(Replay, Examples) {
  EXPECT_EQ(replay(std::vector<ParseItem>{lit(1), copy(1, 3)}), (std::vector<Symbol>{1, 1, 1, 1}));
  EXPECT_TRUE(replay({}).empty());
  EXPECT_EQ(replay(std::vector<ParseItem>{trip(5), trip(1, 3, 6)}), (std::vector<Symbol>{5, 5, 5, 5, 6}));
}

TEST(Replay, OffsetBeforeStartIsCorrupt) {
  EXPECT_THROW(replay(std::vector<ParseItem>{lit(1), copy(2, 2)}), CorruptError);
  EXPECT_THROW(replay(std::vector<ParseItem>{trip(1, 1, 1)}), CorruptError);
}

TEST(Replay, AllVariantsAllStructuresRandom) {
  std::mt19937_64 rng(23);
  for (Structure st : kAllStructures) {
    for (int trial = 0; trial < 250; ++trial) {
      WindowConfig c;
      c.structure = st;
      c.window_log2 = 3 + static_cast<unsigned>(rng() % 6);
      c.max_match = std::min<unsigned>(1u << c.window_log2, 2 + static_cast<unsigned>(rng() % 20));
      c.min_match = std::max(hashed_symbols(st), 1 + static_cast<unsigned>(rng() % 3));
      if (c.min_match > c.max_match) continue;
      const auto s = random_stream(rng, rng() % 400, 1 + static_cast<Symbol>(rng() % 6));
      for (ParseVariant v : kAllVariants) {
        const auto items = parse(v, s, c);
        ASSERT_EQ(replay(items), s) << to_string(st) << ' ' << to_string(v);
        for (const auto& item : items) {
          if (const auto* cp = std::get_if<Copy>(&item)) {
            ASSERT_GE(cp->match.length, c.min_match);
            ASSERT_LE(cp->match.length, c.max_match);
            ASSERT_LE(cp->match.offset, c.capacity());
          }
          ASSERT_EQ(std::holds_alternative<Triplet>(item), v == ParseVariant::LZ77);
        }
      }
    }
  }
}

TEST(Replay, LazyRoundTripsTenThousandStreams) {
  std::mt19937_64 rng(24);
  const auto c = small_window();
  for (int trial = 0; trial < 10000; ++trial) {
    const auto s = random_stream(rng, rng() % 100, 1 + static_cast<Symbol>(rng() % 5));
    ASSERT_EQ(replay(parse_lzss_lazy(s, c)), s);
  }
}

TEST(LongestMatches, PrefixProperty) {
  std::mt19937_64 rng(25);
  const auto c = small_window();
  const auto s = random_stream(rng, 300, 3);
  const auto longest = longest_matches(s, c);
  ASSERT_EQ(longest.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!longest[i]) continue;
    const auto [d, len] = *longest[i];
    for (std::uint32_t k = 0; k < len; ++k) ASSERT_EQ(s[i - d + k], s[i + k]);
  }
}

TEST(ParseVariant, Names) {
  EXPECT_EQ(parse_variant("lz77"), ParseVariant::LZ77);
  EXPECT_EQ(parse_variant("LZSS"), ParseVariant::LZSS);
  EXPECT_EQ(parse_variant("lazy"), ParseVariant::LZSSLazy);
  EXPECT_EQ(parse_variant("short"), ParseVariant::LZSSShort);
  for (ParseVariant v : kAllVariants) EXPECT_EQ(parse_variant(to_string(v)), v);
  EXPECT_THROW(parse_variant("lzw"), ConfigError);
}
