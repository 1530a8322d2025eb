// ============================================================================
// seqmon/rewrite.hpp — Definitional rewrites
// ============================================================================

#ifndef SEQMON_REWRITE_HPP
#define SEQMON_REWRITE_HPP

#include <stdexcept>

#include "seqmon/formula.hpp"

namespace seqmon {

/// Rewrites once/historically into their since definitions, as the dense
/// engine expects:  once[I] f  ==  true since[I] f,  and  historically[I] f
/// ==  !(true since[I] !f).  The result contains only propositional nodes
/// and (possibly timed) since.  Idempotent.  `pre` has no dense meaning and
/// is rejected.
inline Formula desugar_for_dense(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Prop:
      return f;
    case FormulaKind::Pre:
      throw std::invalid_argument("desugar_for_dense: 'pre' is unsupported in dense mode");
    case FormulaKind::Not:
      return Formula::negation(desugar_for_dense(f.child(0)));
    case FormulaKind::And:
      return Formula::conjunction(desugar_for_dense(f.child(0)), desugar_for_dense(f.child(1)));
    case FormulaKind::Or:
      return Formula::disjunction(desugar_for_dense(f.child(0)), desugar_for_dense(f.child(1)));
    case FormulaKind::Implies:
      return Formula::implication(desugar_for_dense(f.child(0)), desugar_for_dense(f.child(1)));
    case FormulaKind::Since:
      return Formula::since(desugar_for_dense(f.child(0)), desugar_for_dense(f.child(1)),
                            f.time_bound());
    case FormulaKind::Once:
      return Formula::since(Formula::top(), desugar_for_dense(f.child(0)), f.time_bound());
    case FormulaKind::Historically:
      return Formula::negation(Formula::since(
          Formula::top(), Formula::negation(desugar_for_dense(f.child(0))), f.time_bound()));
  }
  throw std::logic_error("desugar_for_dense: unhandled node");
}

}  // namespace seqmon

#endif  // SEQMON_REWRITE_HPP
