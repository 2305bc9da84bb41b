#pragma once

// Benchmark drivers producing CSV rows:
// config,input,original_bytes,compressed_bytes,ratio_pct,time_ms

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlz/pipeline.hpp"

namespace wlz {

struct BenchRow {
  std::string config;  // flags reproducing the row with `wlz compress`
  std::string input;
  std::uint64_t original_bytes = 0;
  std::uint64_t compressed_bytes = 0;
  double time_ms = 0;

  /// compressed / original * 100; 0 for an empty input.
  double ratio_pct() const;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::optional<std::size_t> best;  // index of the smallest output, sweeps only

  std::string to_csv() const;
};

struct BenchInput {
  std::string name;
  std::string data;
};

/// Compression time of every structure at each window size. Timings are the
/// median of `repeats` runs. The coder setup comes from `base`; min_match is
/// raised to the structure's hash width where needed.
BenchReport bench_structures(const std::vector<BenchInput>& inputs, const std::vector<unsigned>& window_log2s,
                             const CodecConfig& base = CodecConfig::direct_bit(), unsigned repeats = 3);

/// Four parse variants, each with direct-bit and best coders.
BenchReport bench_coders(const std::vector<BenchInput>& inputs, unsigned window_log2 = 20, unsigned max_match = 16,
                         Structure structure = Structure::PTH);

/// Output size over window sizes x max_match values; marks the smallest cell.
BenchReport bench_sweep(const BenchInput& input, const std::vector<unsigned>& window_log2s,
                        const std::vector<unsigned>& max_matches = {4, 8, 16, 32, 64},
                        const CodecConfig& base = preset_best());

/// Runs `config` on `input`, verifying the round trip.
BenchRow measure(const BenchInput& input, const CodecConfig& config, unsigned repeats = 1);

}  // namespace wlz
