// ============================================================================
// seqmon/generators.hpp — Benchmark traces and random instances
// ============================================================================
//
// Three benchmark properties with their trace shapes:
//
//   qpr(a,b)    historically ((r && !q && once q) -> (p since[a:b] q))
//               over independent Bernoulli inputs (defaults 0.5/0.1/0.1)
//   pandq(a,b)  p since[a:b] q over constantly-true inputs
//   delay(b)    p since[b:b] q over p constantly true and q pulsing every
//               other step — the adversarial shape that forces the timed
//               state to hold ~b/2 disjoint singleton windows
//
// Generation is seeded and bit-reproducible across platforms: raw
// mt19937_64 output is mapped to values directly, without distribution
// adapters.  The random-formula and random-behavior helpers back the
// differential test suites and the `check` command.
// ============================================================================

#ifndef SEQMON_GENERATORS_HPP
#define SEQMON_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/formula.hpp"
#include "seqmon/oracle/discrete_oracle.hpp"
#include "seqmon/oracle/pointfree_oracle.hpp"
#include "seqmon/parser.hpp"

namespace seqmon {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// True with probability ppm / 1'000'000.
  bool chance_ppm(std::uint32_t ppm) { return next() % 1'000'000 < ppm; }

 private:
  std::mt19937_64 eng_;
};

// ── Benchmark properties ───────────────────────────────────────────────────

struct BenchProperty {
  enum class Kind { Qpr, PandQ, Delay };
  Kind kind;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::string name() const {
    switch (kind) {
      case Kind::Qpr: return "qpr(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::PandQ: return "pandq(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case Kind::Delay: return "delay(" + std::to_string(b) + ")";
    }
    return {};
  }
};

/// Parses "qpr(3,6)", "pandq(1,600)", or "delay(600)".
inline BenchProperty parse_bench_property(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close != text.size() - 1 || close <= open)
    throw std::invalid_argument("bench property: expected name(args): '" + text + "'");
  std::string name = text.substr(0, open);
  std::string args = text.substr(open + 1, close - open - 1);
  auto comma = args.find(',');
  auto to_int = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bench property: bad integer '" + s + "'");
    return static_cast<std::int64_t>(std::stoll(s));
  };
  BenchProperty p{};
  if (name == "delay") {
    if (comma != std::string::npos) throw std::invalid_argument("delay takes one argument");
    p.kind = BenchProperty::Kind::Delay;
    p.b = to_int(args);
    p.a = p.b;
  } else if (name == "qpr" || name == "pandq") {
    if (comma == std::string::npos) throw std::invalid_argument(name + " takes two arguments");
    p.kind = name == "qpr" ? BenchProperty::Kind::Qpr : BenchProperty::Kind::PandQ;
    p.a = to_int(args.substr(0, comma));
    p.b = to_int(args.substr(comma + 1));
    if (p.a > p.b) throw std::invalid_argument("bench property: a > b");
  } else {
    throw std::invalid_argument("bench property: unknown name '" + name + "'");
  }
  return p;
}

inline Formula bench_formula(const BenchProperty& p, TimeModel model = TimeModel::Discrete) {
  std::int64_t lo = p.a;
  // the punctual delay window has empty interior on the dense timeline;
  // the narrowest proper window there is one time unit wide
  if (p.kind == BenchProperty::Kind::Delay && model == TimeModel::Dense) lo = p.b - 1;
  auto window = std::to_string(lo) + ":" + std::to_string(p.b);
  switch (p.kind) {
    case BenchProperty::Kind::Qpr:
      return parse("historically ((r && !q && once q) -> (p since[" + window + "] q))", model);
    case BenchProperty::Kind::PandQ:
    case BenchProperty::Kind::Delay:
      return parse("p since[" + window + "] q", model);
  }
  throw std::logic_error("bench_formula: unreachable");
}

struct QprDensities {
  std::uint32_t p_ppm = 500'000;
  std::uint32_t q_ppm = 100'000;
  std::uint32_t r_ppm = 100'000;
};

inline std::vector<std::string> bench_columns(const BenchProperty& p) {
  if (p.kind == BenchProperty::Kind::Qpr) return {"p", "q", "r"};
  return {"p", "q"};
}

/// Streams the property's trace row by row; `sink` sees the row for steps
/// k = 1..length in order.  Deterministic for a given seed.
inline void bench_rows(const BenchProperty& p, std::int64_t length, std::uint64_t seed,
                       const QprDensities& densities,
                       const std::function<void(std::int64_t, const std::vector<char>&)>& sink) {
  Rng rng(seed);
  std::vector<char> row(bench_columns(p).size());
  for (std::int64_t k = 1; k <= length; ++k) {
    switch (p.kind) {
      case BenchProperty::Kind::Qpr:
        row[0] = rng.chance_ppm(densities.p_ppm) ? 1 : 0;
        row[1] = rng.chance_ppm(densities.q_ppm) ? 1 : 0;
        row[2] = rng.chance_ppm(densities.r_ppm) ? 1 : 0;
        break;
      case BenchProperty::Kind::PandQ:
        row[0] = 1;
        row[1] = 1;
        break;
      case BenchProperty::Kind::Delay:
        row[0] = 1;
        row[1] = (k % 2 == 1) ? 1 : 0;
        break;
    }
    sink(k, row);
  }
}

// ── Random instances for differential testing ──────────────────────────────

struct RandomFormulaOptions {
  TimeModel model = TimeModel::Discrete;
  int max_depth = 4;
  std::int64_t max_bound = 8;
  std::vector<std::string> propositions = {"p", "q", "r"};
  bool since_only = false;  // restrict to not/and/since (the compass fragment)
};

inline Formula random_formula(Rng& rng, const RandomFormulaOptions& opt, int depth = 0) {
  const bool dense = opt.model == TimeModel::Dense;
  auto leaf = [&] {
    std::int64_t pick = rng.range(0, opt.since_only ? 3 : 5);
    if (!opt.since_only && pick == 4) return Formula::top();
    if (!opt.since_only && pick == 5) return Formula::bottom();
    return Formula::prop(
        opt.propositions[static_cast<std::size_t>(rng.next() % opt.propositions.size())]);
  };
  if (depth >= opt.max_depth || rng.chance_ppm(200'000)) return leaf();

  auto make_bound = [&]() -> std::optional<Bound> {
    if (rng.chance_ppm(250'000)) return std::nullopt;  // untimed
    std::int64_t lo = rng.range(0, opt.max_bound - 1);
    if (!opt.since_only && rng.chance_ppm(150'000)) return bound_unbounded(Rational(lo));
    std::int64_t hi = rng.range(dense ? lo + 1 : lo, opt.max_bound);
    return bound(Rational(lo), Rational(hi));
  };

  std::int64_t pick = rng.range(0, opt.since_only ? 3 : 9);
  switch (pick) {
    case 0: return Formula::negation(random_formula(rng, opt, depth + 1));
    case 1:
      return Formula::conjunction(random_formula(rng, opt, depth + 1),
                                  random_formula(rng, opt, depth + 1));
    case 2:
    case 3:
      return Formula::since(random_formula(rng, opt, depth + 1),
                            random_formula(rng, opt, depth + 1), make_bound());
    case 4:
      return Formula::disjunction(random_formula(rng, opt, depth + 1),
                                  random_formula(rng, opt, depth + 1));
    case 5:
      return Formula::implication(random_formula(rng, opt, depth + 1),
                                  random_formula(rng, opt, depth + 1));
    case 6: return Formula::once(random_formula(rng, opt, depth + 1), make_bound());
    case 7: return Formula::historically(random_formula(rng, opt, depth + 1), make_bound());
    case 8:
      if (!dense) return Formula::previously(random_formula(rng, opt, depth + 1));
      return Formula::once(random_formula(rng, opt, depth + 1), make_bound());
    default: return leaf();
  }
}

inline DiscreteTrace random_discrete_trace(Rng& rng, const std::vector<std::string>& props,
                                           std::int64_t length) {
  DiscreteTrace w;
  w.propositions = props;
  w.values.resize(props.size());
  for (auto& column : w.values) {
    column.resize(static_cast<std::size_t>(length));
    for (auto& v : column) v = rng.chance_ppm(500'000) ? 1 : 0;
  }
  return w;
}

struct RandomBehaviorOptions {
  std::int64_t max_end = 50;       // span is (0, end) with integer end
  std::int64_t max_segment = 6;    // longest constant run
  std::int64_t denominator = 1;    // endpoints are multiples of 1/denominator
};

/// Random piecewise behavior per proposition over a common span.
inline HomStructure random_hom_structure(Rng& rng, const std::vector<std::string>& props,
                                         const RandomBehaviorOptions& opt) {
  HomStructure h;
  h.span_begin = Rational(0);
  std::int64_t end_ticks = rng.range(2, opt.max_end) * opt.denominator;
  h.span_end = Rational(end_ticks, opt.denominator);
  for (const std::string& prop : props) {
    PeriodSet periods;
    bool value = rng.chance_ppm(500'000);
    std::int64_t t = 0;
    while (t < end_ticks) {
      std::int64_t step = rng.range(1, opt.max_segment * opt.denominator);
      std::int64_t next = std::min(end_ticks, t + step);
      if (value) periods.add(period(Rational(t, opt.denominator), Rational(next, opt.denominator)));
      value = !value;
      t = next;
    }
    h.valuations.emplace_back(prop, std::move(periods));
  }
  return h;
}

}  // namespace seqmon

#endif  // SEQMON_GENERATORS_HPP
