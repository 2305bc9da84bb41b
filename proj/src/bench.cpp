#include "wlz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "wlz/error.hpp"

namespace wlz {

double BenchRow::ratio_pct() const {
  return original_bytes == 0 ? 0.0 : 100.0 * static_cast<double>(compressed_bytes) / static_cast<double>(original_bytes);
}

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "config,input,original_bytes,compressed_bytes,ratio_pct,time_ms\n";
  char num[64];
  for (const BenchRow& r : rows) {
    out << r.config << ',' << r.input << ',' << r.original_bytes << ',' << r.compressed_bytes << ',';
    std::snprintf(num, sizeof num, "%.2f,%.3f", r.ratio_pct(), r.time_ms);
    out << num << '\n';
  }
  return out.str();
}

BenchRow measure(const BenchInput& input, const CodecConfig& config, unsigned repeats) {
  std::vector<double> times;
  std::vector<std::uint8_t> packed;
  for (unsigned i = 0; i < std::max(1u, repeats); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    packed = compress(input.data, config);
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  if (decompress(packed) != input.data) throw Error("round trip mismatch for " + input.name + " with " + config.describe());
  std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
  return {config.describe(), input.name, input.data.size(), packed.size(), times[times.size() / 2]};
}

BenchReport bench_structures(const std::vector<BenchInput>& inputs, const std::vector<unsigned>& window_log2s,
                             const CodecConfig& base, unsigned repeats) {
  BenchReport report;
  for (const BenchInput& in : inputs) {
    for (unsigned w : window_log2s) {
      for (Structure s : kAllStructures) {
        CodecConfig cfg = base;
        cfg.window.window_log2 = w;
        cfg.window.structure = s;
        cfg.window.min_match = std::max(cfg.window.min_match, hashed_symbols(s));
        cfg.window.max_match = std::max(cfg.window.max_match, cfg.window.min_match);
        report.rows.push_back(measure(in, cfg, repeats));
      }
    }
  }
  return report;
}

BenchReport bench_coders(const std::vector<BenchInput>& inputs, unsigned window_log2, unsigned max_match,
                         Structure structure) {
  BenchReport report;
  for (const BenchInput& in : inputs) {
    for (ParseVariant v : kAllVariants) {
      for (CodecConfig cfg : {CodecConfig::direct_bit(), preset_best()}) {
        cfg.variant = v;
        cfg.window.window_log2 = window_log2;
        cfg.window.max_match = max_match;
        cfg.window.structure = structure;
        cfg.bblock_base_log2 = 0;
        report.rows.push_back(measure(in, cfg));
      }
    }
  }
  return report;
}

BenchReport bench_sweep(const BenchInput& input, const std::vector<unsigned>& window_log2s,
                        const std::vector<unsigned>& max_matches, const CodecConfig& base) {
  BenchReport report;
  for (unsigned w : window_log2s) {
    for (unsigned m : max_matches) {
      CodecConfig cfg = base;
      cfg.window.window_log2 = w;
      cfg.window.max_match = m;
      cfg.bblock_base_log2 = 0;
      // A window smaller than max_match cannot be configured.
      if (cfg.window.capacity() < m) continue;
      report.rows.push_back(measure(input, cfg));
      const std::size_t i = report.rows.size() - 1;
      if (!report.best || report.rows[i].compressed_bytes < report.rows[*report.best].compressed_bytes) report.best = i;
    }
  }
  return report;
}

}  // namespace wlz
