// ============================================================================
// seqmon/diffcheck.hpp — Differential testing of the engines against the
// brute-force semantics
// ============================================================================
//
// The engines are incremental and stateful; the oracles are direct and
// stateless.  Agreement on random instances is the headline correctness
// argument, so the drivers here are shared by the test suites and the
// `check` command.  On a mismatch the discrete driver shrinks the trace to
// a minimal reproducing prefix and greedily clears input bits.
// ============================================================================

#ifndef SEQMON_DIFFCHECK_HPP
#define SEQMON_DIFFCHECK_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seqmon/dense_engine.hpp"
#include "seqmon/discrete_engine.hpp"
#include "seqmon/generators.hpp"
#include "seqmon/oracle/discrete_oracle.hpp"
#include "seqmon/oracle/pointfree_oracle.hpp"

namespace seqmon {

// ── Discrete ────────────────────────────────────────────────────────────────

/// First step at which engine and oracle disagree, or nullopt.
inline std::optional<std::int64_t> discrete_mismatch_step(const Formula& f, const DiscreteTrace& w,
                                                          bool strong = false) {
  DiscreteNetwork net = compile_discrete(f);
  if (strong) net.set_strong_historically(true);
  std::vector<char> row(net.propositions().size());
  for (std::int64_t t = 1; t <= w.length(); ++t) {
    for (std::size_t p = 0; p < net.propositions().size(); ++p)
      row[p] = w.value(net.propositions()[p], t) ? 1 : 0;
    bool engine = net.step(std::span<const char>(row));
    if (engine != eval_pointy_discrete(f, w, t, strong)) return t;
  }
  return std::nullopt;
}

/// Shrinks a mismatching trace: truncate to the first failing step, then
/// clear input bits that do not affect the failure.
inline DiscreteTrace minimize_discrete_counterexample(const Formula& f, DiscreteTrace w) {
  auto step = discrete_mismatch_step(f, w);
  if (!step) return w;
  for (auto& column : w.values) column.resize(static_cast<std::size_t>(*step));
  for (auto& column : w.values)
    for (auto& bit : column) {
      if (bit == 0) continue;
      bit = 0;
      if (!discrete_mismatch_step(f, w)) bit = 1;  // this bit matters, restore it
    }
  return w;
}

struct CheckReport {
  int trials = 0;
  int mismatches = 0;
  std::string first_counterexample;  // human-readable; empty when clean
};

/// `trials` random (formula, trace) instances compared step by step.
template <typename EngineHook = std::nullptr_t>
inline CheckReport check_discrete_random(Rng& rng, int trials,
                                         const RandomFormulaOptions& opt = {},
                                         std::int64_t max_len = 30,
                                         EngineHook corrupt = nullptr) {
  CheckReport report;
  for (int i = 0; i < trials; ++i) {
    ++report.trials;
    Formula f = random_formula(rng, opt);
    DiscreteTrace w = random_discrete_trace(rng, opt.propositions, rng.range(1, max_len));
    std::optional<std::int64_t> bad;
    if constexpr (std::is_same_v<EngineHook, std::nullptr_t>) {
      bad = discrete_mismatch_step(f, w);
    } else {
      // test fixture: compare a deliberately corrupted output stream
      DiscreteNetwork net = compile_discrete(f);
      std::vector<char> row(net.propositions().size());
      for (std::int64_t t = 1; t <= w.length() && !bad; ++t) {
        for (std::size_t p = 0; p < net.propositions().size(); ++p)
          row[p] = w.value(net.propositions()[p], t) ? 1 : 0;
        bool engine = corrupt(net.step(std::span<const char>(row)), t);
        if (engine != eval_pointy_discrete(f, w, t)) bad = t;
      }
    }
    if (bad) {
      ++report.mismatches;
      if (report.first_counterexample.empty()) {
        DiscreteTrace shrunk = minimize_discrete_counterexample(f, w);
        std::ostringstream os;
        os << "formula: " << f.to_string() << "\nmismatch at step " << *bad
           << " (trace shrunk to " << shrunk.length() << " steps)\n";
        for (std::size_t p = 0; p < shrunk.propositions.size(); ++p) {
          os << shrunk.propositions[p] << ":";
          for (char v : shrunk.values[p]) os << " " << int(v);
          os << "\n";
        }
        report.first_counterexample = os.str();
      }
    }
  }
  return report;
}

// ── Dense ───────────────────────────────────────────────────────────────────

/// Feeds h to a dense network in chunks split at `cuts` (interior span
/// points, ascending) and returns the concatenated, merged output.
inline PeriodSet run_dense_chunked(const Formula& f, const HomStructure& h,
                                   const std::vector<Rational>& cuts) {
  DenseNetwork net = compile_dense(f, h.span_begin);
  PeriodSet result;
  std::vector<PeriodSet> props(h.valuations.size());
  Rational begin = h.span_begin;
  for (std::size_t c = 0; c <= cuts.size(); ++c) {
    const Rational& end = c < cuts.size() ? cuts[c] : h.span_end;
    props.clear();
    for (const std::string& name : net.propositions()) {
      const PeriodSet* v = h.find(name);
      props.push_back(v != nullptr ? v->clip(begin, end) : PeriodSet{});
    }
    PeriodSet chunk_out = net.feed(begin, end, props);
    for (const Period& p : chunk_out.periods()) result.add(p);
    begin = end;
  }
  return result;
}

inline std::vector<Rational> random_cuts(Rng& rng, const HomStructure& h, int max_chunks) {
  // cut at grid ticks strictly inside the span
  std::int64_t den = h.span_end.den();
  std::int64_t lo = h.span_begin.scaled_integer(den * 2);
  std::int64_t hi = h.span_end.scaled_integer(den * 2);
  std::vector<std::int64_t> ticks;
  int cuts = static_cast<int>(rng.range(0, max_chunks - 1));
  for (int i = 0; i < cuts; ++i) {
    std::int64_t t = rng.range(lo + 1, hi - 1);
    ticks.push_back(t);
  }
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
  std::vector<Rational> out;
  for (std::int64_t t : ticks) out.emplace_back(t, den * 2);
  return out;
}

/// Dense differential: engine output over random chunkings must equal the
/// oracle's maximal periods, for every segmentation.
inline CheckReport check_dense_random(Rng& rng, int trials, const RandomFormulaOptions& fopt,
                                      const RandomBehaviorOptions& bopt, int segmentations = 3) {
  CheckReport report;
  RandomFormulaOptions opt = fopt;
  opt.model = TimeModel::Dense;
  for (int i = 0; i < trials; ++i) {
    ++report.trials;
    Formula f = random_formula(rng, opt);
    HomStructure h = random_hom_structure(rng, opt.propositions, bopt);
    PeriodSet expected = eval_pointfree(f, h);
    bool bad = false;
    for (int s = 0; s < segmentations && !bad; ++s) {
      std::vector<Rational> cuts =
          s == 0 ? std::vector<Rational>{} : random_cuts(rng, h, 8);
      PeriodSet got = run_dense_chunked(f, h, cuts);
      if (got != expected) bad = true;
      if (bad && report.first_counterexample.empty()) {
        std::ostringstream os;
        os << "formula: " << f.to_string() << "\nspan: (" << h.span_begin.to_string() << ","
           << h.span_end.to_string() << ")\n";
        for (const auto& [name, periods] : h.valuations)
          os << name << " = " << periods.to_string() << "\n";
        os << "oracle: " << expected.to_string() << "\nengine: " << got.to_string() << "\n";
        report.first_counterexample = os.str();
      }
    }
    if (bad) ++report.mismatches;
  }
  return report;
}

}  // namespace seqmon

#endif  // SEQMON_DIFFCHECK_HPP
