// ============================================================================
// seqmon/dag.hpp — Deduplicated subformula DAG
// ============================================================================
//
// Both engines associate one state variable with each *unique* subformula.
// build_dag lays a formula tree out as a topologically ordered node list:
// children precede parents, and structurally identical subformulas appear
// exactly once.
// ============================================================================

#ifndef SEQMON_DAG_HPP
#define SEQMON_DAG_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "seqmon/formula.hpp"

namespace seqmon {

struct DagNode {
  FormulaKind kind;
  std::string prop_name;        // Prop nodes only
  std::optional<Bound> bnd;     // timed temporal nodes only
  int child[2] = {-1, -1};
};

struct SubformulaDag {
  std::vector<DagNode> nodes;   // children precede parents
  int root = -1;
  std::vector<std::string> propositions;  // distinct names, in first-seen order

  int prop_index(const std::string& name) const {
    for (std::size_t i = 0; i < propositions.size(); ++i)
      if (propositions[i] == name) return static_cast<int>(i);
    return -1;
  }
};

inline SubformulaDag build_dag(const Formula& f) {
  SubformulaDag dag;
  // Interning key: kind, name, bound (as comparable tuple), child ids.
  using BoundKey = std::tuple<bool, std::int64_t, std::int64_t, bool, std::int64_t, std::int64_t>;
  using Key = std::tuple<int, std::string, BoundKey, int, int>;
  std::map<Key, int> interned;

  auto bound_key = [](const std::optional<Bound>& b) -> BoundKey {
    if (!b) return {false, 0, 1, false, 0, 1};
    return {true, b->lower.num(), b->lower.den(), b->upper_infinite, b->upper.num(), b->upper.den()};
  };

  auto intern = [&](auto&& self, const Formula& g) -> int {
    int c0 = g.arity() > 0 ? self(self, g.child(0)) : -1;
    int c1 = g.arity() > 1 ? self(self, g.child(1)) : -1;
    Key key{static_cast<int>(g.kind()),
            g.kind() == FormulaKind::Prop ? g.prop_name() : std::string(),
            bound_key(g.time_bound()), c0, c1};
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    int id = static_cast<int>(dag.nodes.size());
    DagNode node{g.kind(), std::get<1>(key), g.time_bound(), {c0, c1}};
    dag.nodes.push_back(std::move(node));
    interned.emplace(std::move(key), id);
    if (g.kind() == FormulaKind::Prop && dag.prop_index(g.prop_name()) < 0)
      dag.propositions.push_back(g.prop_name());
    return id;
  };
  dag.root = intern(intern, f);
  return dag;
}

}  // namespace seqmon

#endif  // SEQMON_DAG_HPP
