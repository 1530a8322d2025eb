// ============================================================================
// seqmon/oracle/discrete_oracle.hpp — Brute-force pointy discrete semantics
// ============================================================================
//
// Direct recursive evaluation of the satisfaction relation, for differential
// testing.  Deliberately stateless and memo-free so it cannot share bugs
// with the incremental network: the timed since is evaluated by quantifier
// enumeration,
//
//   phi1 since[a:b] phi2 at t  <=>  exists t' in [1,t]: t-t' in [a,b],
//       phi2 at t', and phi1 at every t'' in (t',t],
//
// and the other operators likewise.  Exponential in principle; meant for
// desk-scale traces only.
// ============================================================================

#ifndef SEQMON_ORACLE_DISCRETE_ORACLE_HPP
#define SEQMON_ORACLE_DISCRETE_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/formula.hpp"

namespace seqmon {

struct DiscreteTrace {
  std::vector<std::string> propositions;
  std::vector<std::vector<char>> values;  // values[p][t-1], t = 1..length

  std::int64_t length() const {
    return values.empty() ? 0 : static_cast<std::int64_t>(values[0].size());
  }

  bool value(const std::string& prop, std::int64_t t) const {
    for (std::size_t i = 0; i < propositions.size(); ++i)
      if (propositions[i] == prop) return values[i][static_cast<std::size_t>(t - 1)] != 0;
    throw std::invalid_argument("DiscreteTrace: unknown proposition '" + prop + "'");
  }
};

namespace detail {

struct DiscreteBound {
  std::int64_t lo = 0;
  std::int64_t hi = -1;  // -1 encodes +inf
  bool unbounded() const { return hi < 0; }
  bool admits(std::int64_t d) const { return d >= lo && (unbounded() || d <= hi); }
};

inline DiscreteBound discrete_bound(const std::optional<Bound>& b) {
  if (!b) return {0, -1};
  if (!b->lower.is_integer() || (!b->upper_infinite && !b->upper.is_integer()))
    throw std::invalid_argument("discrete oracle: non-integer bound");
  return {b->lower.num(), b->upper_infinite ? -1 : b->upper.num()};
}

}  // namespace detail

/// Truth of f at step t (1-based) of the trace, by direct recursion.
/// Under strong historically semantics the operand is taken to be false
/// before step 1, so a historically window reaching past the start fails.
inline bool eval_pointy_discrete(const Formula& f, const DiscreteTrace& w, std::int64_t t,
                                 bool strong_historically = false) {
  if (t < 1 || t > w.length()) throw std::out_of_range("eval_pointy_discrete: step out of range");
  auto eval = [&](auto&& self, const Formula& g, std::int64_t at) -> bool {
    switch (g.kind()) {
      case FormulaKind::True: return true;
      case FormulaKind::False: return false;
      case FormulaKind::Prop: return w.value(g.prop_name(), at);
      case FormulaKind::Not: return !self(self, g.child(0), at);
      case FormulaKind::And: return self(self, g.child(0), at) && self(self, g.child(1), at);
      case FormulaKind::Or: return self(self, g.child(0), at) || self(self, g.child(1), at);
      case FormulaKind::Implies:
        return !self(self, g.child(0), at) || self(self, g.child(1), at);
      case FormulaKind::Pre: return at > 1 && self(self, g.child(0), at - 1);
      case FormulaKind::Since: {
        auto b = detail::discrete_bound(g.time_bound());
        for (std::int64_t tp = at; tp >= 1; --tp) {
          if (!b.admits(at - tp)) {
            if (at - tp > b.lo) break;  // past the window, nothing older qualifies
            continue;
          }
          if (self(self, g.child(1), tp)) {
            bool cont = true;
            for (std::int64_t u = tp + 1; u <= at && cont; ++u) cont = self(self, g.child(0), u);
            if (cont) return true;
          }
        }
        return false;
      }
      case FormulaKind::Once: {
        auto b = detail::discrete_bound(g.time_bound());
        for (std::int64_t tp = 1; tp <= at; ++tp)
          if (b.admits(at - tp) && self(self, g.child(0), tp)) return true;
        return false;
      }
      case FormulaKind::Historically: {
        auto b = detail::discrete_bound(g.time_bound());
        if (strong_historically && (b.unbounded() || at - b.hi < 1)) return false;
        for (std::int64_t tp = 1; tp <= at; ++tp)
          if (b.admits(at - tp) && !self(self, g.child(0), tp)) return false;
        return true;
      }
    }
    return false;
  };
  return eval(eval, f, t);
}

/// Outputs of f at every step 1..N.
inline std::vector<char> eval_pointy_discrete_all(const Formula& f, const DiscreteTrace& w,
                                                  bool strong_historically = false) {
  std::vector<char> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (std::int64_t t = 1; t <= w.length(); ++t)
    out.push_back(eval_pointy_discrete(f, w, t, strong_historically) ? 1 : 0);
  return out;
}

}  // namespace seqmon

#endif  // SEQMON_ORACLE_DISCRETE_ORACLE_HPP
