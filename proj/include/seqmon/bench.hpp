// ============================================================================
// seqmon/bench.hpp — Timing harness for the benchmark properties
// ============================================================================
//
// Measures monitoring throughput on pre-generated in-memory traces so that
// timing ratios compare engine work, not I/O.  The dense runs interpret
// step k of a discrete trace as the unit period (k-1, k) and batch rows
// into chunks, which is where stuttering inputs pay off.
// ============================================================================

#ifndef SEQMON_BENCH_HPP
#define SEQMON_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "seqmon/dense_engine.hpp"
#include "seqmon/discrete_engine.hpp"
#include "seqmon/generators.hpp"
#include "seqmon/oracle/discrete_oracle.hpp"

namespace seqmon {

struct BenchResult {
  std::string property;
  std::string mode;
  std::int64_t length = 0;
  double elapsed_ms = 0;
  double steps_per_sec = 0;
  std::size_t peak_intervals = 0;
  std::int64_t outputs_true = 0;     // discrete: true steps; dense: emitted periods
  double head_window_ms = 0;         // first 10% of the steps
  double tail_window_ms = 0;         // last 10% of the steps

  std::string csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%lld,%.3f,%.0f,%zu,%lld", property.c_str(),
                  mode.c_str(), static_cast<long long>(length), elapsed_ms, steps_per_sec,
                  peak_intervals, static_cast<long long>(outputs_true));
    return buf;
  }
  static const char* csv_header() {
    return "property,mode,length,elapsed_ms,steps_per_sec,peak_intervals,outputs_true";
  }
};

inline DiscreteTrace bench_trace(const BenchProperty& p, std::int64_t length, std::uint64_t seed,
                                 const QprDensities& densities = {}) {
  DiscreteTrace w;
  w.propositions = bench_columns(p);
  w.values.assign(w.propositions.size(), {});
  for (auto& column : w.values) column.reserve(static_cast<std::size_t>(length));
  bench_rows(p, length, seed, densities, [&](std::int64_t, const std::vector<char>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) w.values[i].push_back(row[i]);
  });
  return w;
}

inline BenchResult bench_discrete(const BenchProperty& p, const DiscreteTrace& w) {
  BenchResult result;
  result.property = p.name();
  result.mode = "discrete";
  result.length = w.length();
  DiscreteNetwork net = compile_discrete(bench_formula(p));

  const std::size_t cols = w.propositions.size();
  std::vector<char> row(cols);
  const std::int64_t n = w.length();
  const std::int64_t window = n / 10;
  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  clock::time_point head_done = started, tail_started = started;
  for (std::int64_t k = 1; k <= n; ++k) {
    for (std::size_t c = 0; c < cols; ++c)
      row[c] = w.values[c][static_cast<std::size_t>(k - 1)];
    if (net.step(std::span<const char>(row))) ++result.outputs_true;
    std::size_t intervals = net.timed_interval_count();
    if (intervals > result.peak_intervals) result.peak_intervals = intervals;
    if (k == window) head_done = clock::now();
    if (k == n - window) tail_started = clock::now();
  }
  auto finished = clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(finished - started).count();
  result.steps_per_sec = result.elapsed_ms > 0 ? 1000.0 * double(n) / result.elapsed_ms : 0;
  result.head_window_ms = std::chrono::duration<double, std::milli>(head_done - started).count();
  result.tail_window_ms =
      std::chrono::duration<double, std::milli>(finished - tail_started).count();
  return result;
}

/// Digest of a dense output stream for cross-run comparison after merging
/// abutting periods across chunk boundaries.
struct DenseOutputDigest {
  std::size_t periods = 0;
  std::uint64_t boundary_hash = 0;
  bool pending = false;
  Period last{};

  void feed(const PeriodSet& chunk_output) {
    for (const Period& p : chunk_output.periods()) {
      if (pending && !last.unbounded && last.end == p.begin) {
        last.end = p.end;
        last.unbounded = p.unbounded;
        continue;
      }
      if (pending) commit();
      last = p;
      pending = true;
    }
  }
  void commit() {
    auto mix = [&](std::int64_t v) {
      boundary_hash = (boundary_hash ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
    };
    mix(last.begin.num());
    mix(last.begin.den());
    mix(last.unbounded ? -1 : last.end.num());
    mix(last.unbounded ? -1 : last.end.den());
    ++periods;
    pending = false;
  }
  void finish() {
    if (pending) commit();
  }
  friend bool operator==(const DenseOutputDigest&, const DenseOutputDigest&) = default;
};

inline BenchResult bench_dense(const BenchProperty& p, const DiscreteTrace& w,
                               std::int64_t chunk_rows, DenseOutputDigest* digest = nullptr) {
  BenchResult result;
  result.property = p.name();
  result.mode = "dense";
  result.length = w.length();
  DenseNetwork net = compile_dense(bench_formula(p, TimeModel::Dense));

  const std::size_t cols = w.propositions.size();
  const std::int64_t n = w.length();
  std::vector<PeriodSet> props(cols);
  DenseOutputDigest local_digest;
  DenseOutputDigest& out = digest != nullptr ? *digest : local_digest;

  using clock = std::chrono::steady_clock;
  auto started = clock::now();
  std::int64_t begin = 0;
  while (begin < n) {
    std::int64_t end = std::min(n, begin + chunk_rows);
    for (std::size_t c = 0; c < cols; ++c) {
      props[c].clear();
      const auto& column = w.values[c];
      std::int64_t run_start = -1;
      for (std::int64_t k = begin; k < end; ++k) {
        bool v = column[static_cast<std::size_t>(k)] != 0;
        if (v && run_start < 0) run_start = k;
        if (!v && run_start >= 0) {
          props[c].add(period(Rational(run_start), Rational(k)));
          run_start = -1;
        }
      }
      if (run_start >= 0) props[c].add(period(Rational(run_start), Rational(end)));
    }
    PeriodSet chunk_out = net.feed(Rational(begin), Rational(end), props);
    out.feed(chunk_out);
    std::size_t intervals = net.timed_period_count();
    if (intervals > result.peak_intervals) result.peak_intervals = intervals;
    begin = end;
  }
  out.finish();
  auto finished = clock::now();
  result.elapsed_ms = std::chrono::duration<double, std::milli>(finished - started).count();
  result.steps_per_sec = result.elapsed_ms > 0 ? 1000.0 * double(n) / result.elapsed_ms : 0;
  result.outputs_true = static_cast<std::int64_t>(out.periods);
  return result;
}

}  // namespace seqmon

#endif  // SEQMON_BENCH_HPP
