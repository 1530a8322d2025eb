// ============================================================================
// seqmon/oracle/mcl.hpp — Metric compass logic over time periods
// ============================================================================
//
// A second, structurally unrelated dense-time oracle.  Compass formulas are
// evaluated on periods (t,t') by quantifier enumeration over a refined
// grid; the six modalities move between periods sharing endpoints:
//
//   <B>(a,b)  some proper prefix (t,t''), with a < t'-t'' < b
//   <B.>(a,b) some extension (t,t''), t'' > t', with a < t''-t' < b
//   <E>(a,b)  some proper suffix (t'',t'), with a < t''-t < b
//   <E.>(a,b) some left extension (t'',t'), t'' < t, with a < t-t'' < b
//   <A>(a,b)  some period (t',t'') met at the right end, a < t''-t' < b
//   <A.>(a,b) some period (t'',t) meeting the left end, a < t-t'' < b
//
// Universal duals are complement-existential-complement.  Enumeration is
// clipped to the span extended by the sum of finite bounds; homogeneous
// propositions cannot reach past that.
//
// check_mcl_equivalences validates the compass characterizations of the
// point-free operators over homogeneous arguments:
//
//   not f            = [B][E] ~f  = [E][B] ~f
//   f and g          = f n g
//   f since(a,b) g   = [B]<A><A.>(a,b)(f n <A.> g)
//
// Both negation forms quantify exactly the strict sub-periods, so they
// share one closed form (interior disjointness from V(f)); the since
// pattern anchors the timing constraint on the span of the carrying
// f-period, whose right end is the evaluation point and whose left end a
// g-period meets — the placement the point-free satisfaction relation and
// the network runs realize.  The check is per operator on abstract periods
// whose endpoints range over grid points and open grid cells; a uniform
// finite grid cannot decide the nested strict-interior quantifiers
// directly (the innermost pairs always go vacuous), so the schemas are
// evaluated by exact interval reasoning on those positions instead.
// ============================================================================

#ifndef SEQMON_ORACLE_MCL_HPP
#define SEQMON_ORACLE_MCL_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqmon/formula.hpp"
#include "seqmon/oracle/pointfree_oracle.hpp"
#include "seqmon/period_set.hpp"
#include "seqmon/rational.hpp"

namespace seqmon {

enum class CompassRelation { B, BInv, E, EInv, A, AInv };

class MclFormula {
 public:
  enum class Kind { Prop, Complement, Intersect, Union, Modal };

  static MclFormula prop(std::string name) {
    return make(Kind::Prop, std::move(name), CompassRelation::B, std::nullopt, nullptr, nullptr);
  }
  static MclFormula complement(MclFormula a) {
    return make(Kind::Complement, {}, CompassRelation::B, std::nullopt, a.node_, nullptr);
  }
  static MclFormula intersect(MclFormula a, MclFormula b) {
    return make(Kind::Intersect, {}, CompassRelation::B, std::nullopt, a.node_, b.node_);
  }
  static MclFormula unite(MclFormula a, MclFormula b) {
    return make(Kind::Union, {}, CompassRelation::B, std::nullopt, a.node_, b.node_);
  }
  /// Existential modality; omitted bound means (0, inf).
  static MclFormula modal(CompassRelation rel, MclFormula a,
                          std::optional<Bound> bnd = std::nullopt) {
    return make(Kind::Modal, {}, rel, std::move(bnd), a.node_, nullptr);
  }
  /// Universal modality [X] f = ~<X>~f.
  static MclFormula box(CompassRelation rel, MclFormula a,
                        std::optional<Bound> bnd = std::nullopt) {
    return complement(modal(rel, complement(std::move(a)), std::move(bnd)));
  }

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  CompassRelation relation() const { return node_->rel; }
  const std::optional<Bound>& time_bound() const { return node_->bnd; }
  MclFormula child(std::size_t i) const { return MclFormula(i == 0 ? node_->left : node_->right); }

  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    CompassRelation rel;
    std::optional<Bound> bnd;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit MclFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static MclFormula make(Kind kind, std::string name, CompassRelation rel,
                         std::optional<Bound> bnd, std::shared_ptr<const Node> left,
                         std::shared_ptr<const Node> right) {
    return MclFormula(std::make_shared<const Node>(
        Node{kind, std::move(name), rel, std::move(bnd), std::move(left), std::move(right)}));
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

// Satisfaction tables over a clipped integer grid: one bit per period
// (u, v) with lo <= u < v <= hi.
class MclEvaluator {
 public:
  MclEvaluator(const HomStructure& h, std::int64_t scale, std::int64_t margin)
      : scale_(scale),
        lo_(h.span_begin.scaled_integer(scale) - margin),
        hi_(h.span_end.scaled_integer(scale) + margin),
        width_(hi_ - lo_ + 1),
        h_(h) {
    if (width_ > 4000)
      throw std::invalid_argument("mcl oracle: grid too fine for enumeration");
  }

  bool sat(const MclFormula& f, std::int64_t u, std::int64_t v) {
    if (u < lo_ || v > hi_ || u >= v) throw std::out_of_range("mcl oracle: period outside grid");
    return table(f)[index(u, v)] != 0;
  }

 private:
  std::size_t index(std::int64_t u, std::int64_t v) const {
    return static_cast<std::size_t>((u - lo_) * width_ + (v - lo_));
  }

  const std::vector<char>& table(const MclFormula& f) {
    auto it = memo_.find(f.id());
    if (it != memo_.end()) return it->second;
    std::vector<char> t(static_cast<std::size_t>(width_) * static_cast<std::size_t>(width_), 0);
    switch (f.kind()) {
      case MclFormula::Kind::Prop: fill_prop(f, t); break;
      case MclFormula::Kind::Complement: {
        const auto& c = table(f.child(0));
        for (std::int64_t u = lo_; u <= hi_; ++u)
          for (std::int64_t v = u + 1; v <= hi_; ++v) t[index(u, v)] = c[index(u, v)] ? 0 : 1;
        break;
      }
      case MclFormula::Kind::Intersect:
      case MclFormula::Kind::Union: {
        const auto& a = table(f.child(0));
        const auto& b = table(f.child(1));
        const bool conj = f.kind() == MclFormula::Kind::Intersect;
        for (std::size_t i = 0; i < t.size(); ++i)
          t[i] = conj ? (a[i] != 0 && b[i] != 0) : (a[i] != 0 || b[i] != 0);
        break;
      }
      case MclFormula::Kind::Modal: fill_modal(f, t); break;
    }
    return memo_.emplace(f.id(), std::move(t)).first->second;
  }

  void fill_prop(const MclFormula& f, std::vector<char>& t) {
    const PeriodSet* periods = h_.find(f.name());
    if (periods == nullptr)
      throw std::invalid_argument("mcl oracle: no valuation for '" + f.name() + "'");
    for (const Period& p : periods->periods()) {
      if (p.unbounded) throw std::invalid_argument("mcl oracle: unbounded proposition period");
      std::int64_t s = std::max(p.begin.scaled_integer(scale_), lo_);
      std::int64_t e = std::min(p.end.scaled_integer(scale_), hi_);
      for (std::int64_t u = s; u < e; ++u)
        for (std::int64_t v = u + 1; v <= e; ++v) t[index(u, v)] = 1;
    }
  }

  void fill_modal(const MclFormula& f, std::vector<char>& t) {
    const auto& c = table(f.child(0));
    std::int64_t a = 0, b = -1;  // strict scaled bounds; -1 = inf
    if (f.time_bound()) {
      a = f.time_bound()->lower.scaled_integer(scale_);
      b = f.time_bound()->upper_infinite ? -1 : f.time_bound()->upper.scaled_integer(scale_);
    }
    const bool bounded = b >= 0;
    auto csat = [&](std::int64_t u, std::int64_t v) {
      return u >= lo_ && v <= hi_ && u < v && c[index(u, v)] != 0;
    };
    switch (f.relation()) {
      case CompassRelation::B:  // prefix (u,w), a < v-w < b
        if (!bounded && a == 0) {
          for (std::int64_t u = lo_; u <= hi_; ++u) {
            bool acc = false;
            for (std::int64_t v = u + 1; v <= hi_; ++v) {
              t[index(u, v)] = acc ? 1 : 0;
              acc = acc || csat(u, v);  // becomes a witness for larger v
            }
          }
        } else {
          for (std::int64_t u = lo_; u <= hi_; ++u)
            for (std::int64_t v = u + 1; v <= hi_; ++v) {
              bool truth = false;
              std::int64_t wlo = bounded ? std::max(u + 1, v - b + 1) : u + 1;
              std::int64_t whi = v - a - 1;
              for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(u, w);
              t[index(u, v)] = truth ? 1 : 0;
            }
        }
        break;
      case CompassRelation::E:  // suffix (w,v), a < w-u < b
        if (!bounded && a == 0) {
          for (std::int64_t v = hi_; v > lo_; --v) {
            bool acc = false;
            for (std::int64_t u = v - 1; u >= lo_; --u) {
              t[index(u, v)] = acc ? 1 : 0;
              acc = acc || csat(u, v);
            }
          }
        } else {
          for (std::int64_t u = lo_; u <= hi_; ++u)
            for (std::int64_t v = u + 1; v <= hi_; ++v) {
              bool truth = false;
              std::int64_t wlo = u + a + 1;
              std::int64_t whi = bounded ? std::min(v - 1, u + b - 1) : v - 1;
              for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(w, v);
              t[index(u, v)] = truth ? 1 : 0;
            }
        }
        break;
      case CompassRelation::BInv:  // extension (u,w), w > v, a < w-v < b
        for (std::int64_t u = lo_; u <= hi_; ++u) {
          if (!bounded && a == 0) {
            bool acc = false;
            for (std::int64_t v = hi_; v > u; --v) {
              t[index(u, v)] = acc ? 1 : 0;
              acc = acc || csat(u, v);
            }
          } else {
            for (std::int64_t v = u + 1; v <= hi_; ++v) {
              bool truth = false;
              std::int64_t wlo = v + a + 1;
              std::int64_t whi = bounded ? std::min(hi_, v + b - 1) : hi_;
              for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(u, w);
              t[index(u, v)] = truth ? 1 : 0;
            }
          }
        }
        break;
      case CompassRelation::EInv:  // left extension (w,v), w < u, a < u-w < b
        for (std::int64_t v = hi_; v > lo_; --v) {
          if (!bounded && a == 0) {
            bool acc = false;
            for (std::int64_t u = lo_; u < v; ++u) {
              t[index(u, v)] = acc ? 1 : 0;
              acc = acc || csat(u, v);
            }
          } else {
            for (std::int64_t u = lo_ + 1; u < v; ++u) {
              bool truth = false;
              std::int64_t wlo = bounded ? std::max(lo_, u - b + 1) : lo_;
              std::int64_t whi = u - a - 1;
              for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(w, v);
              t[index(u, v)] = truth ? 1 : 0;
            }
          }
        }
        break;
      case CompassRelation::A: {  // met period (v,w); depends on v only
        std::vector<char> any(static_cast<std::size_t>(width_), 0);
        for (std::int64_t v = lo_; v <= hi_; ++v) {
          bool truth = false;
          std::int64_t wlo = v + a + 1;
          std::int64_t whi = bounded ? std::min(hi_, v + b - 1) : hi_;
          for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(v, w);
          any[static_cast<std::size_t>(v - lo_)] = truth ? 1 : 0;
        }
        for (std::int64_t u = lo_; u <= hi_; ++u)
          for (std::int64_t v = u + 1; v <= hi_; ++v)
            t[index(u, v)] = any[static_cast<std::size_t>(v - lo_)];
        break;
      }
      case CompassRelation::AInv: {  // meeting period (w,u); depends on u only
        std::vector<char> any(static_cast<std::size_t>(width_), 0);
        for (std::int64_t u = lo_; u <= hi_; ++u) {
          bool truth = false;
          std::int64_t whi = u - a - 1;
          std::int64_t wlo = bounded ? std::max(lo_, u - b + 1) : lo_;
          for (std::int64_t w = wlo; w <= whi && !truth; ++w) truth = csat(w, u);
          any[static_cast<std::size_t>(u - lo_)] = truth ? 1 : 0;
        }
        for (std::int64_t u = lo_; u <= hi_; ++u)
          for (std::int64_t v = u + 1; v <= hi_; ++v)
            t[index(u, v)] = any[static_cast<std::size_t>(u - lo_)];
        break;
      }
    }
  }

  std::int64_t scale_;
  std::int64_t lo_;
  std::int64_t hi_;
  std::int64_t width_;
  const HomStructure& h_;
  std::unordered_map<const void*, std::vector<char>> memo_;
};

inline std::int64_t sum_finite_bounds(const Formula& f, std::int64_t scale) {
  std::int64_t total = 0;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (const auto& b = g.time_bound())
      if (!b->upper_infinite) total += b->upper.scaled_integer(scale);
    for (std::size_t i = 0; i < g.arity(); ++i) self(self, g.child(i));
  };
  walk(walk, f);
  return total;
}

inline std::int64_t common_denominator(const HomStructure& h) {
  std::int64_t d = lcm64(h.span_begin.den(), h.span_end.den());
  for (const auto& [name, periods] : h.valuations)
    for (const Period& p : periods.periods()) {
      d = lcm64(d, p.begin.den());
      if (!p.unbounded) d = lcm64(d, p.end.den());
    }
  return d;
}

}  // namespace detail

/// Truth of an MCL formula on one period with endpoints on the structure's
/// grid.  Quantifiers are enumerated over the grid refined by `refine` and
/// clipped to the span extended by `margin_units` time units.
inline bool eval_mcl(const MclFormula& m, const HomStructure& h, const Rational& begin,
                     const Rational& end, int refine = 2, std::int64_t margin_units = 16) {
  std::int64_t d = detail::common_denominator(h);
  d = lcm64(d, lcm64(begin.den(), end.den()));
  auto collect = [&](auto&& self, const MclFormula& g) -> void {
    if (const auto& b = g.time_bound()) {
      d = lcm64(d, b->lower.den());
      if (!b->upper_infinite) d = lcm64(d, b->upper.den());
    }
    if (g.kind() != MclFormula::Kind::Prop) {
      self(self, g.child(0));
      if (g.kind() == MclFormula::Kind::Intersect || g.kind() == MclFormula::Kind::Union)
        self(self, g.child(1));
    }
  };
  collect(collect, m);
  d *= refine;
  detail::MclEvaluator eval(h, d, margin_units * d);
  return eval.sat(m, begin.scaled_integer(d), end.scaled_integer(d));
}

namespace detail {

// Abstract periods for the schema check: each endpoint is a grid point or
// an open unit cell of the instance grid.  Truth of the relevant period
// predicates is constant per such pair, so checking all pairs decides the
// equivalence over all real periods.
struct PositionGrid {
  std::int64_t grid0 = 0;
  std::int64_t cells = 0;

  // (u,v) contained in the closure of some member period, for u in
  // position i and v in position j (positions as in PointyTable).
  bool covered(const std::vector<std::pair<std::int64_t, std::int64_t>>& periods, std::int64_t i,
               std::int64_t j) const {
    std::int64_t ulo = (i % 2 == 1) ? (i - 1) / 2 : i / 2;
    std::int64_t vhi = (j % 2 == 1) ? (j + 1) / 2 : j / 2;
    for (const auto& [s, e] : periods)
      if (s <= ulo && vhi <= e) return true;
    return false;
  }

  // Some member period overlaps the open interior (u,v).
  bool overlaps(const std::vector<std::pair<std::int64_t, std::int64_t>>& periods, std::int64_t i,
                std::int64_t j) const {
    // e > u for all u in position i; s < v for all v in position j
    std::int64_t umin = (i % 2 == 1) ? (i - 1) / 2 : i / 2;  // e > umin suffices
    std::int64_t vmax = (j % 2 == 1) ? (j + 1) / 2 : j / 2;  // s < vmax, s <= vmax-1
    for (const auto& [s, e] : periods)
      if (e > umin && s < vmax) return true;
    return false;
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> scale(const PeriodSet& ps,
                                                           std::int64_t d) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (const Period& p : ps.periods()) {
      if (p.unbounded) throw std::invalid_argument("mcl schema: unbounded period");
      out.emplace_back(p.begin.scaled_integer(d) - grid0, p.end.scaled_integer(d) - grid0);
    }
    return out;
  }
};

}  // namespace detail

/// Verifies the compass characterizations operator by operator: for every
/// compound subformula, its point-free valuation must agree with the
/// compass pattern applied to the subformulas' valuations taken as
/// primitive homogeneous propositions, on every period of the instance
/// grid (endpoints ranging over grid points and open grid cells):
///
///   not g      no sub-period of the interior satisfies g, i.e. the
///              interior is disjoint from V(g) — the common value of both
///              [B][E] and [E][B] applied to the complement
///   g1 and g2  V(g1) intersect V(g2)
///   g1 since(a,b) g2   each interior point t'' is reached by a V(g1)
///              period whose left end r' meets a V(g2) period, with
///              a < t'' - r' < b
inline bool check_mcl_equivalences(const Formula& f, const HomStructure& h, int = 0) {
  std::int64_t d = detail::common_denominator(h);
  auto collect = [&](auto&& self, const Formula& g) -> void {
    if (const auto& b = g.time_bound()) {
      d = lcm64(d, b->lower.den());
      if (!b->upper_infinite) d = lcm64(d, b->upper.den());
    }
    for (std::size_t i = 0; i < g.arity(); ++i) self(self, g.child(i));
  };
  collect(collect, f);

  detail::PositionGrid grid;
  grid.grid0 = h.span_begin.scaled_integer(d);
  grid.cells = h.span_end.scaled_integer(d) - grid.grid0;
  const std::int64_t positions = 2 * grid.cells + 1;

  auto valid_pair = [&](std::int64_t i, std::int64_t j) { return i < j || (i == j && i % 2 == 1); };

  auto check_node = [&](auto&& self, const Formula& g) -> bool {
    for (std::size_t c = 0; c < g.arity(); ++c)
      if (!self(self, g.child(c))) return false;
    if (g.kind() == FormulaKind::Prop) return true;

    auto expected = grid.scale(eval_pointfree(g, h), d);
    switch (g.kind()) {
      case FormulaKind::Not: {
        auto arg = grid.scale(eval_pointfree(g.child(0), h), d);
        for (std::int64_t i = 1; i < positions; ++i)
          for (std::int64_t j = i; j < positions; ++j) {
            if (!valid_pair(i, j)) continue;
            if (grid.covered(expected, i, j) != !grid.overlaps(arg, i, j)) return false;
          }
        return true;
      }
      case FormulaKind::And: {
        auto a = grid.scale(eval_pointfree(g.child(0), h), d);
        auto b = grid.scale(eval_pointfree(g.child(1), h), d);
        for (std::int64_t i = 1; i < positions; ++i)
          for (std::int64_t j = i; j < positions; ++j) {
            if (!valid_pair(i, j)) continue;
            bool want = grid.covered(a, i, j) && grid.covered(b, i, j);
            if (grid.covered(expected, i, j) != want) return false;
          }
        return true;
      }
      case FormulaKind::Since: {
        auto carrier = grid.scale(eval_pointfree(g.child(0), h), d);
        auto witness = grid.scale(eval_pointfree(g.child(1), h), d);
        // left operand: open-interval containment in one carrier period;
        // interior grid points never block it
        std::vector<char> f1(static_cast<std::size_t>(positions), 0);
        for (std::int64_t g2 = 0; g2 <= grid.cells; ++g2)
          f1[static_cast<std::size_t>(2 * g2)] = 1;
        for (const auto& [s, e] : carrier)
          for (std::int64_t g2 = s; g2 < e; ++g2) f1[static_cast<std::size_t>(2 * g2 + 1)] = 1;
        // right operand: met-by a witness period, true exactly on (s, e]
        std::vector<char> f2(static_cast<std::size_t>(positions), 0);
        for (const auto& [s, e] : witness) detail::mark_left_open_closure(f2, s, e);

        std::int64_t A = 0, B = -1;
        if (const auto& bnd = g.time_bound()) {
          A = bnd->lower.scaled_integer(d);
          B = bnd->upper_infinite ? -1 : bnd->upper.scaled_integer(d);
        }
        std::vector<char> reach =
            detail::eval_since_positions(&f1, f2, A, B, grid.cells, /*closed_upper=*/false);
        // prefix conjunction of `reach` over the positions interior to (u,v)
        std::vector<std::int64_t> blocked(static_cast<std::size_t>(positions) + 1, 0);
        for (std::int64_t p = 1; p < positions; ++p)
          blocked[static_cast<std::size_t>(p) + 1] =
              blocked[static_cast<std::size_t>(p)] + (reach[static_cast<std::size_t>(p)] ? 0 : 1);
        for (std::int64_t i = 1; i < positions; ++i)
          for (std::int64_t j = i; j < positions; ++j) {
            if (!valid_pair(i, j)) continue;
            std::int64_t lo = (i % 2 == 1) ? i : i + 1;
            std::int64_t hi = (j % 2 == 1) ? j : j - 1;
            bool want = blocked[static_cast<std::size_t>(hi) + 1] ==
                        blocked[static_cast<std::size_t>(lo)];
            if (grid.covered(expected, i, j) != want) return false;
          }
        return true;
      }
      default:
        throw std::invalid_argument(
            "check_mcl_equivalences: formula outside the not/and/since fragment");
    }
  };
  return check_node(check_node, f);
}

}  // namespace seqmon

#endif  // SEQMON_ORACLE_MCL_HPP
