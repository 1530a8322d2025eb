// ============================================================================
// seqmon/oracle/pointfree_oracle.hpp — Brute-force point-free dense semantics
// ============================================================================
//
// Ground truth for the dense engine.  A homogeneous structure assigns each
// proposition its maximal true periods; the valuation set of a formula is
// the set of periods on which it holds, again represented by its maximal
// periods.
//
// Evaluation is by exact grid discretization.  All endpoints and bounds are
// scaled to integers by their common denominator; every semantic boundary
// point is then an integer of that grid, so each open unit cell (g, g+1)
// carries a constant truth value and one sample per cell decides it.  The
// evaluator works on a position array holding one slot per grid point and
// one per open cell, evaluating the left-continuous pointy realization of
// the structure:
//
//   - a proposition period (s, e) realizes as the half-open point set (s, e]
//   - since measures witness distances in the half-open window (a, b]:
//     flattening an open-bound period semantics onto end points closes the
//     upper bound in the left limit but cannot close the lower one
//
// Maximal periods are read back from runs of true cells; interior grid
// points are required to agree with their neighboring cells, which is the
// left-continuity property the flattening check verifies.
// ============================================================================

#ifndef SEQMON_ORACLE_POINTFREE_ORACLE_HPP
#define SEQMON_ORACLE_POINTFREE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqmon/dag.hpp"
#include "seqmon/formula.hpp"
#include "seqmon/period_set.hpp"
#include "seqmon/rational.hpp"

namespace seqmon {

struct HomStructure {
  Rational span_begin;
  Rational span_end;
  std::vector<std::pair<std::string, PeriodSet>> valuations;

  const PeriodSet* find(const std::string& name) const {
    for (const auto& [prop, periods] : valuations)
      if (prop == name) return &periods;
    return nullptr;
  }
};

namespace detail {

// Truth per grid position for every subformula.  Position 2i is the grid
// point g0+i, position 2i+1 the open cell (g0+i, g0+i+1).  Position 0 (the
// span's left end) is outside the pointy domain and always false.
struct PointyTable {
  std::int64_t scale = 1;
  std::int64_t grid0 = 0;
  std::int64_t cells = 0;  // number of unit cells in the span
  SubformulaDag dag;
  std::vector<std::vector<char>> truth;  // per dag node, size 2*cells+1

  const std::vector<char>& root_truth() const {
    return truth[static_cast<std::size_t>(dag.root)];
  }
};

inline void collect_denominators(const Formula& f, std::vector<std::int64_t>& dens) {
  if (const auto& b = f.time_bound()) {
    dens.push_back(b->lower.den());
    if (!b->upper_infinite) dens.push_back(b->upper.den());
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_denominators(f.child(i), dens);
}

// Marks the (s, e] realization of a period on a position row; s and e are
// local grid indices.
inline void mark_left_open_closure(std::vector<char>& row, std::int64_t s, std::int64_t e) {
  for (std::int64_t g = s; g < e; ++g) row[static_cast<std::size_t>(2 * g + 1)] = 1;
  for (std::int64_t g = s + 1; g <= e; ++g) row[static_cast<std::size_t>(2 * g)] = 1;
}

inline std::int64_t common_scale(const Formula& f, const HomStructure& h, int refine) {
  std::vector<std::int64_t> dens{h.span_begin.den(), h.span_end.den()};
  for (const auto& [name, periods] : h.valuations)
    for (const Period& p : periods.periods()) {
      dens.push_back(p.begin.den());
      if (!p.unbounded) dens.push_back(p.end.den());
    }
  collect_denominators(f, dens);
  std::int64_t d = 1;
  for (std::int64_t x : dens) d = lcm64(d, x);
  return d * refine;
}

// Truth of "f1 since f2" with witness distances in (A, B] (the reading the
// left-continuous realization induces) or in the open (A, B) when
// closed_upper is false (the period-level reading), per position, by
// backward witness scan.  B < 0 encodes an infinite upper bound.  A null f1
// behaves as constantly true (once).
inline std::vector<char> eval_since_positions(const std::vector<char>* f1,
                                              const std::vector<char>& f2, std::int64_t A,
                                              std::int64_t B, std::int64_t cells,
                                              bool closed_upper = true) {
  const std::int64_t positions = 2 * cells + 1;
  std::vector<char> out(static_cast<std::size_t>(positions), 0);
  auto left = [&](std::int64_t p) { return f1 == nullptr || (*f1)[static_cast<std::size_t>(p)] != 0; };
  const bool b_inf = B < 0;

  for (std::int64_t x = 1; x < positions; ++x) {
    bool truth = false;
    const bool x_is_cell = (x % 2) == 1;
    const std::int64_t gx = x_is_cell ? (x - 1) / 2 : x / 2;  // cell's left grid index
    // Witness inside the same cell: distances range over (0, tau - g).
    if (x_is_cell && A == 0 && (b_inf || B >= 1) && left(x) && f2[static_cast<std::size_t>(x)]) {
      out[static_cast<std::size_t>(x)] = 1;
      continue;
    }
    // The range (t', tau) always covers the part of x's own cell below tau,
    // so a cell evaluation time needs f1 on that cell for any witness.
    bool cont = !x_is_cell || left(x);
    for (std::int64_t j = x - 1; j >= 1 && cont; --j) {
      const bool j_is_cell = (j % 2) == 1;
      const std::int64_t gj = j_is_cell ? (j - 1) / 2 : j / 2;
      bool feasible;   // some witness time in j realizes a distance in [A,B]
                       // for every evaluation time in x
      bool too_old;    // every distance j (and anything older) realizes is > B
      if (!x_is_cell && !j_is_cell) {
        const std::int64_t d = gx - gj;
        feasible = d > A && (b_inf || (closed_upper ? d <= B : d < B));
        too_old = !b_inf && (closed_upper ? d > B : d >= B);
      } else if (!x_is_cell) {  // point x, cell witness: d in (gx-gj-1, gx-gj)
        feasible = A <= gx - gj - 1 && (b_inf || B >= gx - gj);
        too_old = !b_inf && gx - gj - 1 >= B;
      } else if (!j_is_cell) {  // cell x, point witness: d in (gx-gj, gx-gj+1)
        feasible = A <= gx - gj && (b_inf || B >= gx - gj + 1);
        too_old = !b_inf && gx - gj >= B;
      } else {  // cell x, earlier cell witness: d in (gx-gj-1, gx-gj+1)
        feasible = A <= gx - gj && (b_inf || B >= gx - gj);
        too_old = !b_inf && gx - gj - 1 >= B;
      }
      if (feasible && f2[static_cast<std::size_t>(j)] && (!j_is_cell || left(j))) {
        truth = true;
        break;
      }
      if (too_old) break;
      cont = left(j);
    }
    out[static_cast<std::size_t>(x)] = truth ? 1 : 0;
  }
  return out;
}

inline PointyTable eval_pointy_dense(const Formula& f, const HomStructure& h, int refine) {
  if (!(h.span_begin < h.span_end))
    throw std::invalid_argument("pointfree oracle: empty span");
  PointyTable table;
  table.scale = common_scale(f, h, refine);
  table.grid0 = h.span_begin.scaled_integer(table.scale);
  table.cells = h.span_end.scaled_integer(table.scale) - table.grid0;
  if (table.cells > 2'000'000)
    throw std::invalid_argument("pointfree oracle: grid too fine for desk-scale evaluation");
  table.dag = build_dag(f);
  const std::int64_t positions = 2 * table.cells + 1;
  table.truth.resize(table.dag.nodes.size());

  for (std::size_t i = 0; i < table.dag.nodes.size(); ++i) {
    const DagNode& dn = table.dag.nodes[i];
    std::vector<char> row(static_cast<std::size_t>(positions), 0);
    std::int64_t A = 0, B = -1;
    if (dn.bnd) {
      A = dn.bnd->lower.scaled_integer(table.scale);
      B = dn.bnd->upper_infinite ? -1 : dn.bnd->upper.scaled_integer(table.scale);
    }
    switch (dn.kind) {
      case FormulaKind::True:
        std::fill(row.begin() + 1, row.end(), 1);
        break;
      case FormulaKind::False:
        break;
      case FormulaKind::Prop: {
        const PeriodSet* periods = h.find(dn.prop_name);
        if (periods == nullptr)
          throw std::invalid_argument("pointfree oracle: no valuation for '" + dn.prop_name + "'");
        for (const Period& p : periods->periods()) {
          if (p.unbounded)
            throw std::invalid_argument("pointfree oracle: unbounded proposition period");
          std::int64_t s = p.begin.scaled_integer(table.scale) - table.grid0;
          std::int64_t e = p.end.scaled_integer(table.scale) - table.grid0;
          if (s < 0 || e > table.cells)
            throw std::invalid_argument("pointfree oracle: proposition outside span");
          mark_left_open_closure(row, s, e);  // (s, e]: cells, interior points, right end
        }
        break;
      }
      case FormulaKind::Not: {
        const auto& c = table.truth[static_cast<std::size_t>(dn.child[0])];
        for (std::int64_t p = 1; p < positions; ++p)
          row[static_cast<std::size_t>(p)] = c[static_cast<std::size_t>(p)] ? 0 : 1;
        break;
      }
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies: {
        const auto& a = table.truth[static_cast<std::size_t>(dn.child[0])];
        const auto& b = table.truth[static_cast<std::size_t>(dn.child[1])];
        for (std::int64_t p = 1; p < positions; ++p) {
          bool va = a[static_cast<std::size_t>(p)] != 0;
          bool vb = b[static_cast<std::size_t>(p)] != 0;
          bool v = dn.kind == FormulaKind::And   ? (va && vb)
                   : dn.kind == FormulaKind::Or ? (va || vb)
                                                : (!va || vb);
          row[static_cast<std::size_t>(p)] = v ? 1 : 0;
        }
        break;
      }
      case FormulaKind::Pre:
        throw std::invalid_argument("pointfree oracle: 'pre' has no dense semantics");
      case FormulaKind::Since:
        row = eval_since_positions(&table.truth[static_cast<std::size_t>(dn.child[0])],
                                   table.truth[static_cast<std::size_t>(dn.child[1])], A, B,
                                   table.cells);
        break;
      case FormulaKind::Once:
        row = eval_since_positions(nullptr, table.truth[static_cast<std::size_t>(dn.child[0])], A,
                                   B, table.cells);
        break;
      case FormulaKind::Historically: {
        const auto& c = table.truth[static_cast<std::size_t>(dn.child[0])];
        std::vector<char> neg(static_cast<std::size_t>(positions), 0);
        for (std::int64_t p = 1; p < positions; ++p)
          neg[static_cast<std::size_t>(p)] = c[static_cast<std::size_t>(p)] ? 0 : 1;
        row = eval_since_positions(nullptr, neg, A, B, table.cells);
        for (std::int64_t p = 1; p < positions; ++p)
          row[static_cast<std::size_t>(p)] = row[static_cast<std::size_t>(p)] ? 0 : 1;
        break;
      }
    }
    table.truth[i] = std::move(row);
  }
  return table;
}

// Maximal periods from runs of true cells.  Interior grid points inside a
// run must be true as well; a false point between two true cells would be
// an abutting pair of maximal periods, which the canonical representation
// cannot express and the semantics never produces.
inline PeriodSet read_maximal_periods(const std::vector<char>& positions, std::int64_t grid0,
                                      std::int64_t scale, std::int64_t cells) {
  PeriodSet out;
  std::int64_t k = 0;
  while (k < cells) {
    if (positions[static_cast<std::size_t>(2 * k + 1)] == 0) {
      ++k;
      continue;
    }
    std::int64_t j = k;
    while (j + 1 < cells && positions[static_cast<std::size_t>(2 * (j + 1))] != 0 &&
           positions[static_cast<std::size_t>(2 * (j + 1) + 1)] != 0)
      ++j;
    if (j + 1 < cells && positions[static_cast<std::size_t>(2 * (j + 1) + 1)] != 0 &&
        positions[static_cast<std::size_t>(2 * (j + 1))] == 0)
      throw std::logic_error("pointfree oracle: left-continuity violation (abutting maximal periods)");
    out.add(period(Rational(grid0 + k, scale), Rational(grid0 + j + 1, scale)));
    k = j + 1;
  }
  return out;
}

}  // namespace detail

/// The valuation set of f in h, as maximal periods.  `refine` multiplies
/// the discretization scale; the result is independent of it.
inline PeriodSet eval_pointfree(const Formula& f, const HomStructure& h, int refine = 1) {
  auto table = detail::eval_pointy_dense(f, h, refine);
  return detail::read_maximal_periods(table.root_truth(), table.grid0, table.scale, table.cells);
}

/// Verifies the flattening bridge on the grid: a point satisfies f under
/// the left-continuous pointy semantics iff some period ending there
/// satisfies f point-free.  Checked at every grid point and cell.
inline bool check_flattening(const Formula& f, const HomStructure& h, int refine = 1) {
  auto table = detail::eval_pointy_dense(f, h, refine);
  PeriodSet v = detail::read_maximal_periods(table.root_truth(), table.grid0, table.scale,
                                             table.cells);
  const std::int64_t positions = 2 * table.cells + 1;
  std::vector<char> flat(static_cast<std::size_t>(positions), 0);
  for (const Period& p : v.periods()) {
    std::int64_t s = p.begin.scaled_integer(table.scale) - table.grid0;
    std::int64_t e = p.end.scaled_integer(table.scale) - table.grid0;
    for (std::int64_t g = s; g < e; ++g) flat[static_cast<std::size_t>(2 * g + 1)] = 1;
    for (std::int64_t g = s + 1; g <= e; ++g) flat[static_cast<std::size_t>(2 * g)] = 1;
  }
  const auto& root = table.root_truth();
  for (std::int64_t p = 1; p < positions; ++p)
    if ((root[static_cast<std::size_t>(p)] != 0) != (flat[static_cast<std::size_t>(p)] != 0))
      return false;
  return true;
}

/// Left continuity of the realized pointy semantics: every interior grid
/// point carries the value of the cell just below it.
inline bool check_left_continuity(const Formula& f, const HomStructure& h, int refine = 1) {
  auto table = detail::eval_pointy_dense(f, h, refine);
  const auto& root = table.root_truth();
  for (std::int64_t g = 1; g < table.cells; ++g)
    if ((root[static_cast<std::size_t>(2 * g)] != 0) !=
        (root[static_cast<std::size_t>(2 * g - 1)] != 0))
      return false;
  return true;
}

}  // namespace seqmon

#endif  // SEQMON_ORACLE_POINTFREE_ORACLE_HPP
