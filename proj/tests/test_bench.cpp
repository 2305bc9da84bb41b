#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "support/text_corpus.hpp"
#include "wlz/bench.hpp"
#include "wlz/format.hpp"
#include "wlz/tokenizer.hpp"

using namespace wlz;

namespace {

const BenchInput& corpus_slice() {
  static const BenchInput input{"corpus-slice", testdata::reference_text(400000).text.substr(0, 400000)};
  return input;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, sep);) out.push_back(cell);
  return out;
}

const BenchRow& row_for(const BenchReport& r, const std::string& needle) {
  const auto it = std::find_if(r.rows.begin(), r.rows.end(),
                               [&](const BenchRow& row) { return row.config.find(needle) != std::string::npos; });
  if (it == r.rows.end()) throw std::runtime_error("no row with " + needle);
  return *it;
}

}  // namespace

TEST(BenchReport, CsvSchemaAndRatios) {
  BenchReport r;
  r.rows.push_back({"--variant lazy", "a.txt", 3000, 1000, 1.5});
  r.rows.push_back({"--variant lzss", "empty", 0, 15, 0.25});
  const std::string csv = r.to_csv();
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "config,input,original_bytes,compressed_bytes,ratio_pct,time_ms");
  std::getline(ss, line);
  EXPECT_EQ(line, "--variant lazy,a.txt,3000,1000,33.33,1.500");
  std::getline(ss, line);
  EXPECT_EQ(line, "--variant lzss,empty,0,15,0.00,0.250");
}

TEST(BenchStructures, AllTenRowsPerWindow) {
  const BenchInput input{"small", testdata::synthetic_text(20000, 1)};
  const auto r = bench_structures({input}, {12, 16}, CodecConfig::direct_bit(), 1);
  ASSERT_EQ(r.rows.size(), 20u);
  std::set<std::string> names;
  for (const auto& row : r.rows) {
    for (Structure s : kAllStructures) {
      if (row.config.find(std::string("--structure ") + to_string(s) + " ") != std::string::npos) names.insert(to_string(s));
    }
  }
  EXPECT_EQ(names.size(), 10u);
}

// Table sizes only pay off at scale: a megabyte of text with a 2^20 window.
TEST(BenchStructures, HashAndTrieOrderingOnCorpusText) {
  const BenchInput input{"corpus-1mb", testdata::reference_text(1 << 20).text.substr(0, 1 << 20)};
  const auto r = bench_structures({input}, {20}, CodecConfig::direct_bit(), 3);
  const double ht1 = row_for(r, "--structure HT1 ").time_ms;
  const double ht4 = row_for(r, "--structure HT4 ").time_ms;
  const double pt = row_for(r, "--structure PT ").time_ms;
  const double pth = row_for(r, "--structure PTH ").time_ms;
  EXPECT_LT(ht4, ht1);
  EXPECT_LT(pth, pt);
}

TEST(BenchCoders, OrderingOnCorpusText) {
  const auto r = bench_coders({corpus_slice()});
  ASSERT_EQ(r.rows.size(), 8u);
  // Rows alternate direct-bit and best for LZ77, LZSS, Lazy, Short.
  for (std::size_t v = 0; v + 1 < 4; ++v) {
    EXPECT_GE(r.rows[2 * v].compressed_bytes, r.rows[2 * (v + 1)].compressed_bytes) << r.rows[2 * v].config;
  }
  for (std::size_t v = 0; v < 4; ++v) {
    EXPECT_LT(r.rows[2 * v + 1].compressed_bytes, r.rows[2 * v].compressed_bytes) << r.rows[2 * v].config;
    EXPECT_NE(r.rows[2 * v].config.find("--window-log2 20 --max-match 16"), std::string::npos);
  }
}

TEST(BenchCoders, EmptyInputGivesHeaderSizedRows) {
  const auto r = bench_coders({BenchInput{"empty", ""}});
  ASSERT_EQ(r.rows.size(), 8u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.compressed_bytes, write_header(Header{}).size());
    EXPECT_EQ(row.original_bytes, 0u);
  }
}

TEST(BenchSweep, GridAndMinimum) {
  const BenchInput input{"small", testdata::synthetic_text(30000, 2)};
  const auto r = bench_sweep(input, {8, 12, 16});
  ASSERT_EQ(r.rows.size(), 15u);
  ASSERT_TRUE(r.best);
  for (const auto& row : r.rows) EXPECT_GE(row.compressed_bytes, r.rows[*r.best].compressed_bytes);
  std::set<std::string> lengths;
  for (const auto& row : r.rows) lengths.insert(split(row.config, ' ')[7]);
  EXPECT_EQ(lengths, (std::set<std::string>{"4", "8", "16", "32", "64"}));
}

TEST(BenchSweep, SkipsWindowsSmallerThanMaxMatch) {
  const BenchInput input{"tiny", "a b a b a b"};
  const auto r = bench_sweep(input, {4}, {4, 8, 16, 32});
  EXPECT_EQ(r.rows.size(), 3u);
}

// Order-level observations; reported, not asserted, since they depend on the text.
TEST(BenchSweep, SoftObservationsOnCorpusText) {
  const auto& input = corpus_slice();
  Vocabulary vocab;
  std::vector<Symbol> symbols;
  intern_all(input.data, vocab, symbols);
  const std::vector<unsigned> windows{12, 14, 16, 17, 18};

  const auto best = bench_sweep(input, windows);
  const auto& min_best = best.rows[*best.best];
  const unsigned min_window = std::stoi(split(min_best.config, ' ')[5]);
  std::printf("best encoding: minimum at window 2^%u for %zu symbols (%s)\n", min_window, symbols.size(),
              (std::uint64_t{1} << min_window) >= symbols.size() ? "window >= input" : "window < input");

  const auto direct = bench_sweep(input, windows, {4, 8, 16, 32, 64}, CodecConfig::direct_bit());
  std::uint64_t best16 = UINT64_MAX;
  for (const auto& row : direct.rows) {
    if (row.config.find("--max-match 16 ") != std::string::npos) best16 = std::min(best16, row.compressed_bytes);
  }
  const double gap = 100.0 * (static_cast<double>(best16) / static_cast<double>(direct.rows[*direct.best].compressed_bytes) - 1);
  std::printf("direct bit: max_match 16 is %.2f%% above the grid minimum\n", gap);
  RecordProperty("best_min_window_log2", static_cast<int>(min_window));
  RecordProperty("direct_mm16_gap_pct", std::to_string(gap));
}
