// ============================================================================
// seqmon/dense_engine.hpp — Dense-time point-free sequential network
// ============================================================================
//
// Consumes a behavior one chunk at a time and emits, per chunk, the maximal
// true periods of the root formula within the chunk span.  Boolean nodes
// are stateless set operations over the chunk.  A timed-since node carries
// a period set V of future truth across chunks (V_{k,n} = V_{k+1,0}); it
// synchronizes its operands into operand-constant segments and runs one
// local update per segment:
//
//   prune            V := V n (t, inf)            at segment start t
//   y1 & y2          V := V u (t+a, t'+b)
//   !y1 & y2         V := {(t'+a, t'+b)}
//   y1 & !y2         V unchanged
//   otherwise        V := {}
//
// with local output V n (t,t'); the chunk output is the merged union of the
// local outputs.  Outputs are clipped to the chunk span: truths scheduled
// beyond it live only in V and are emitted by later chunks.
// ============================================================================

#ifndef SEQMON_DENSE_ENGINE_HPP
#define SEQMON_DENSE_ENGINE_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmon/chunk.hpp"
#include "seqmon/dag.hpp"
#include "seqmon/period_set.hpp"
#include "seqmon/rational.hpp"
#include "seqmon/rewrite.hpp"

namespace seqmon {

class DenseNetwork {
 public:
  /// Feeds one chunk given as per-proposition true-period sets over the
  /// span (begin, end); begin must equal the current clock.  Returns the
  /// root formula's true periods within the span.
  PeriodSet feed(const Rational& begin, const Rational& end,
                 std::span<const PeriodSet> prop_periods) {
    if (finished_) throw std::logic_error("DenseNetwork::feed: stream already finished");
    if (begin != clock_)
      throw std::invalid_argument("DenseNetwork::feed: chunk span does not continue the clock");
    if (!(begin < end)) throw std::invalid_argument("DenseNetwork::feed: empty chunk span");
    if (prop_periods.size() != dag_.propositions.size())
      throw std::invalid_argument("DenseNetwork::feed: proposition arity mismatch");
    if (trace_states_) trace_.clear();

    const Period span = period(begin, end);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node& n = nodes_[i];
      const PeriodSet* c0 = n.child[0] >= 0 ? &out_[static_cast<std::size_t>(n.child[0])] : nullptr;
      const PeriodSet* c1 = n.child[1] >= 0 ? &out_[static_cast<std::size_t>(n.child[1])] : nullptr;
      switch (n.op) {
        case Op::True: out_[i] = PeriodSet{span}; break;
        case Op::False: out_[i] = PeriodSet{}; break;
        case Op::Prop: out_[i] = prop_periods[static_cast<std::size_t>(n.aux)].clip(begin, end); break;
        case Op::Not: out_[i] = c0->complement_within(span); break;
        case Op::And: out_[i] = c0->intersect(*c1); break;
        case Op::Or: out_[i] = c0->unite(*c1); break;
        case Op::Implies: out_[i] = c0->complement_within(span).unite(*c1); break;
        case Op::Since: out_[i] = update_since(n, *c0, *c1, begin, end); break;
      }
    }
    clock_ = end;
    return out_[static_cast<std::size_t>(dag_.root)];
  }

  /// Chunk-level entry point: columns are matched to propositions by name.
  PeriodSet feed_chunk(const Chunk& chunk) {
    scratch_.clear();
    for (const std::string& prop : dag_.propositions) {
      int col = chunk.column_index(prop);
      if (col < 0)
        throw std::invalid_argument("DenseNetwork::feed_chunk: missing proposition '" + prop + "'");
      scratch_.push_back(chunk.column_periods(static_cast<std::size_t>(col)));
    }
    return feed(chunk.span_begin(), chunk.span_end(), scratch_);
  }

  /// Marks the stream ended; feeding afterwards is an error.
  void finish() {
    if (finished_) throw std::logic_error("DenseNetwork::finish: already finished");
    finished_ = true;
  }

  const Rational& clock() const { return clock_; }
  const std::vector<std::string>& propositions() const { return dag_.propositions; }
  const SubformulaDag& dag() const { return dag_; }

  std::size_t node_count() const { return nodes_.size(); }
  bool node_is_since(std::size_t i) const { return nodes_[i].op == Op::Since; }
  const PeriodSet& since_state(std::size_t i) const { return nodes_[i].state; }
  std::size_t timed_period_count() const {
    std::size_t n = 0;
    for (const Node& node : nodes_) n += node.state.size();
    return n;
  }

  /// When enabled, records each since node's V after every local step of
  /// the most recent chunk (used by tests inspecting intermediate states).
  void set_state_trace(bool enabled) { trace_states_ = enabled; }
  const std::vector<std::pair<std::size_t, PeriodSet>>& state_trace() const { return trace_; }

  friend DenseNetwork compile_dense(const Formula& f, Rational t0);

 private:
  enum class Op { True, False, Prop, Not, And, Or, Implies, Since };

  struct Node {
    Op op;
    int child[2] = {-1, -1};
    int aux = -1;                 // proposition index
    Rational lo;                  // since bound (a, b); untimed is (0, inf)
    Rational hi;
    bool hi_infinite = false;
    PeriodSet state;              // carried V for since nodes
  };

  PeriodSet update_since(Node& n, const PeriodSet& left, const PeriodSet& right,
                         const Rational& begin, const Rational& end) {
    PeriodSet result;
    for (const Segment& seg : synchronize_periods(left, right, begin, end)) {
      n.state.intersect_tail(seg.begin);
      if (seg.right) {
        const Rational& anchor = seg.left ? seg.begin : seg.end;
        if (!seg.left) n.state.clear();
        if (n.hi_infinite)
          n.state.add(period_unbounded(anchor + n.lo));
        else
          n.state.add(period(anchor + n.lo, seg.end + n.hi));
      } else if (!seg.left) {
        n.state.clear();
      }
      const PeriodSet local_output = n.state.clip(seg.begin, seg.end);
      for (const Period& p : local_output.periods()) result.add(p);
      if (trace_states_) trace_.emplace_back(static_cast<std::size_t>(&n - nodes_.data()), n.state);
    }
    return result;
  }

  SubformulaDag dag_;
  std::vector<Node> nodes_;
  std::vector<PeriodSet> out_;
  std::vector<PeriodSet> scratch_;
  Rational clock_;
  bool finished_ = false;
  bool trace_states_ = false;
  std::vector<std::pair<std::size_t, PeriodSet>> trace_;
};

/// Compiles a formula for the dense timeline starting at time t0.  The
/// formula is desugared first, so the network contains only propositional
/// nodes and since; `pre` is rejected, and timed bounds must be proper
/// open periods (a < b), since a punctual (a,a) window has empty interior.
inline DenseNetwork compile_dense(const Formula& f, Rational t0 = Rational(0)) {
  DenseNetwork net;
  net.dag_ = build_dag(desugar_for_dense(f));
  net.clock_ = std::move(t0);
  net.nodes_.reserve(net.dag_.nodes.size());
  for (const DagNode& dn : net.dag_.nodes) {
    DenseNetwork::Node n;
    n.child[0] = dn.child[0];
    n.child[1] = dn.child[1];
    using Op = DenseNetwork::Op;
    switch (dn.kind) {
      case FormulaKind::True: n.op = Op::True; break;
      case FormulaKind::False: n.op = Op::False; break;
      case FormulaKind::Prop:
        n.op = Op::Prop;
        n.aux = net.dag_.prop_index(dn.prop_name);
        break;
      case FormulaKind::Not: n.op = Op::Not; break;
      case FormulaKind::And: n.op = Op::And; break;
      case FormulaKind::Or: n.op = Op::Or; break;
      case FormulaKind::Implies: n.op = Op::Implies; break;
      case FormulaKind::Since:
        n.op = Op::Since;
        if (dn.bnd) {
          if (!dn.bnd->upper_infinite && dn.bnd->lower == dn.bnd->upper)
            throw std::invalid_argument("compile_dense: punctual bound has empty interior");
          n.lo = dn.bnd->lower;
          n.hi = dn.bnd->upper_infinite ? Rational(0) : dn.bnd->upper;
          n.hi_infinite = dn.bnd->upper_infinite;
        } else {
          n.lo = Rational(0);
          n.hi_infinite = true;
        }
        break;
      default:
        throw std::logic_error("compile_dense: unexpected node after desugaring");
    }
    net.nodes_.push_back(std::move(n));
  }
  net.out_.resize(net.nodes_.size());
  return net;
}

}  // namespace seqmon

#endif  // SEQMON_DENSE_ENGINE_HPP
