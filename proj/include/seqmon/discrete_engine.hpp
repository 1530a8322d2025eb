// ============================================================================
// seqmon/discrete_engine.hpp — Discrete-time sequential network
// ============================================================================
//
// Compiles a formula into one state variable per unique subformula and
// evaluates the trace one step at a time.  Untimed nodes carry a Boolean;
// timed nodes carry a set of future time points kept as integer intervals
// (forward-shifting: an event at step k makes a timed formula true on
// [k+a, k+b], so that window is stored and the output is the membership
// test k in V).  After every update the state is intersected with [k, inf)
// so its size stays bounded by the timing constraints, never by the trace.
//
// Step counting starts at 1; all state is zero-initialized at step 0.  The
// exceptions are untimed `historically` (vacuously true before the first
// step) and the strong-semantics option, under which `historically` nodes
// assume their operand was false before the trace began.
// ============================================================================

#ifndef SEQMON_DISCRETE_ENGINE_HPP
#define SEQMON_DISCRETE_ENGINE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqmon/dag.hpp"
#include "seqmon/formula.hpp"
#include "seqmon/int_interval_set.hpp"

namespace seqmon {

class DiscreteNetwork {
 public:
  bool untimed() const;

  /// Runs one step with inputs aligned to propositions(); returns the root
  /// formula's output at the new step.
  bool step(std::span<const char> inputs) {
    if (inputs.size() != dag_.propositions.size())
      throw std::invalid_argument("DiscreteNetwork::step: input arity mismatch");
    ++k_;
    const std::int64_t k = k_;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Node& n = nodes_[i];
      bool out = false;
      switch (n.op) {
        case Op::True: out = true; break;
        case Op::False: out = false; break;
        case Op::Prop: out = inputs[static_cast<std::size_t>(n.aux)] != 0; break;
        case Op::Not: out = out_[static_cast<std::size_t>(n.child[0])] == 0; break;
        case Op::And:
          out = out_[static_cast<std::size_t>(n.child[0])] != 0 && out_[static_cast<std::size_t>(n.child[1])] != 0;
          break;
        case Op::Or:
          out = out_[static_cast<std::size_t>(n.child[0])] != 0 || out_[static_cast<std::size_t>(n.child[1])] != 0;
          break;
        case Op::Implies:
          out = out_[static_cast<std::size_t>(n.child[0])] == 0 || out_[static_cast<std::size_t>(n.child[1])] != 0;
          break;
        case Op::Pre:
          out = n.prev;
          n.prev = out_[static_cast<std::size_t>(n.child[0])] != 0;
          break;
        case Op::SinceUntimed: {
          bool y1 = out_[static_cast<std::size_t>(n.child[0])] != 0;
          bool y2 = out_[static_cast<std::size_t>(n.child[1])] != 0;
          out = n.prev = y2 || (y1 && n.prev);
          break;
        }
        case Op::OnceUntimed:
          out = n.prev = out_[static_cast<std::size_t>(n.child[0])] != 0 || n.prev;
          break;
        case Op::HistoricallyUntimed:
          out = n.prev = out_[static_cast<std::size_t>(n.child[0])] != 0 && n.prev;
          break;
        case Op::OnceTimed:
          if (out_[static_cast<std::size_t>(n.child[0])] != 0) add_window(n, k);
          n.state.prune_below(k);
          out = n.state.contains(k);
          break;
        case Op::HistoricallyTimed:
          if (out_[static_cast<std::size_t>(n.child[0])] == 0) add_window(n, k);
          n.state.prune_below(k);
          out = !n.state.contains(k);
          break;
        case Op::SinceTimed: {
          bool y1 = out_[static_cast<std::size_t>(n.child[0])] != 0;
          bool y2 = out_[static_cast<std::size_t>(n.child[1])] != 0;
          if (y1 && y2) {
            add_window(n, k);
          } else if (y2) {
            n.state.clear();
            add_window(n, k);
          } else if (!y1) {
            n.state.clear();
          }
          n.state.prune_below(k);
          out = n.state.contains(k);
          break;
        }
      }
      out_[i] = out ? 1 : 0;
    }
    return out_[static_cast<std::size_t>(dag_.root)] != 0;
  }

  /// Name-keyed step; every proposition of the formula must be assigned.
  bool step(const std::unordered_map<std::string, bool>& inputs) {
    scratch_.resize(dag_.propositions.size());
    for (std::size_t i = 0; i < dag_.propositions.size(); ++i) {
      auto it = inputs.find(dag_.propositions[i]);
      if (it == inputs.end())
        throw std::invalid_argument("DiscreteNetwork::step: missing proposition '" +
                                    dag_.propositions[i] + "'");
      scratch_[i] = it->second ? 1 : 0;
    }
    return step(std::span<const char>(scratch_));
  }

  /// Restores the initial state; the compiled structure is unchanged.
  void reset() {
    k_ = 0;
    for (Node& n : nodes_) init_node(n);
    std::fill(out_.begin(), out_.end(), 0);
  }

  /// Strong semantics for `historically`: the operand is assumed false
  /// before the trace begins, so each timed node starts with V = [0, b]
  /// and each untimed node starts false instead of vacuously true.
  /// Only valid before the first step.
  void set_strong_historically(bool enabled) {
    if (k_ != 0)
      throw std::logic_error("set_strong_historically: network already stepped");
    strong_historically_ = enabled;
    for (Node& n : nodes_) init_node(n);
  }

  std::int64_t current_step() const { return k_; }
  const std::vector<std::string>& propositions() const { return dag_.propositions; }
  const SubformulaDag& dag() const { return dag_; }
  std::size_t node_count() const { return nodes_.size(); }

  bool node_output(std::size_t i) const { return out_[i] != 0; }
  bool node_is_timed(std::size_t i) const {
    Op op = nodes_[i].op;
    return op == Op::OnceTimed || op == Op::HistoricallyTimed || op == Op::SinceTimed;
  }
  const IntIntervalSet& node_state(std::size_t i) const { return nodes_[i].state; }

  /// Total interval count across all timed state variables.
  std::size_t timed_interval_count() const {
    std::size_t n = 0;
    for (const Node& node : nodes_) n += node.state.size();
    return n;
  }

  friend DiscreteNetwork compile_discrete(const Formula& f);

 private:
  enum class Op {
    True, False, Prop, Not, And, Or, Implies, Pre,
    SinceUntimed, OnceUntimed, HistoricallyUntimed,
    OnceTimed, HistoricallyTimed, SinceTimed,
  };

  struct Node {
    Op op;
    int child[2] = {-1, -1};
    int aux = -1;               // proposition index for Prop nodes
    std::int64_t lo = 0;        // window offsets for timed nodes
    std::int64_t hi = 0;        // kIntervalInf when the bound is [a, inf)
    bool prev = false;          // Boolean state / previous-output buffer
    IntIntervalSet state;       // timed state
  };

  void add_window(Node& n, std::int64_t k) {
    n.state.add(k + n.lo, n.hi == kIntervalInf ? kIntervalInf : k + n.hi);
  }

  void init_node(Node& n) {
    n.state.clear();
    n.prev = n.op == Op::HistoricallyUntimed && !strong_historically_;
    if (n.op == Op::HistoricallyTimed && strong_historically_)
      n.state.add(0, n.hi == kIntervalInf ? kIntervalInf : n.hi);
  }

  SubformulaDag dag_;
  std::vector<Node> nodes_;
  std::vector<char> out_;
  std::vector<char> scratch_;
  std::int64_t k_ = 0;
  bool strong_historically_ = false;
};

/// Compiles a formula for the discrete timeline.  Once/historically stay
/// native; a timed operator whose bound is [0, inf) is an untimed Boolean
/// node, and all bounds must be integers.
inline DiscreteNetwork compile_discrete(const Formula& f) {
  DiscreteNetwork net;
  net.dag_ = build_dag(f);
  net.nodes_.reserve(net.dag_.nodes.size());
  for (const DagNode& dn : net.dag_.nodes) {
    DiscreteNetwork::Node n;
    n.child[0] = dn.child[0];
    n.child[1] = dn.child[1];
    const bool timed = dn.bnd.has_value();  // [0:inf] was normalized away
    if (timed) {
      if (!dn.bnd->lower.is_integer() || (!dn.bnd->upper_infinite && !dn.bnd->upper.is_integer()))
        throw std::invalid_argument("compile_discrete: non-integer bound");
      n.lo = dn.bnd->lower.num();
      n.hi = dn.bnd->upper_infinite ? kIntervalInf : dn.bnd->upper.num();
    }
    using Op = DiscreteNetwork::Op;
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
      case FormulaKind::Pre: n.op = Op::Pre; break;
      case FormulaKind::Since: n.op = timed ? Op::SinceTimed : Op::SinceUntimed; break;
      case FormulaKind::Once: n.op = timed ? Op::OnceTimed : Op::OnceUntimed; break;
      case FormulaKind::Historically:
        n.op = timed ? Op::HistoricallyTimed : Op::HistoricallyUntimed;
        break;
    }
    net.nodes_.push_back(std::move(n));
  }
  net.out_.assign(net.nodes_.size(), 0);
  net.reset();
  return net;
}

inline bool DiscreteNetwork::untimed() const {
  for (const Node& n : nodes_)
    if (n.op == Op::OnceTimed || n.op == Op::HistoricallyTimed || n.op == Op::SinceTimed)
      return false;
  return true;
}

}  // namespace seqmon

#endif  // SEQMON_DISCRETE_ENGINE_HPP
