#include <catch2/catch_amalgamated.hpp>

#include "seqmon/discrete_engine.hpp"
#include "seqmon/generators.hpp"
#include "seqmon/oracle/discrete_oracle.hpp"
#include "seqmon/parser.hpp"

using namespace seqmon;

namespace {

// Steps the network over per-step rows and returns outputs; optionally
// records a timed node's state after each step.
std::vector<char> run(DiscreteNetwork& net, const std::vector<std::vector<char>>& rows,
                      int watch_node = -1, std::vector<std::string>* states = nullptr) {
  std::vector<char> out;
  for (const auto& row : rows) {
    out.push_back(net.step(std::span<const char>(row)) ? 1 : 0);
    if (states != nullptr && watch_node >= 0)
      states->push_back(net.node_state(static_cast<std::size_t>(watch_node)).to_string());
  }
  return out;
}

int find_timed_node(const DiscreteNetwork& net, FormulaKind kind, int occurrence = 0) {
  int seen = 0;
  for (std::size_t i = 0; i < net.node_count(); ++i)
    if (net.dag().nodes[i].kind == kind && net.dag().nodes[i].bnd.has_value())
      if (seen++ == occurrence) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("nested timed once: golden run") {
  // once[1:2] once[1:2] (p || q) with p at step 1 and q at step 5
  DiscreteNetwork net = compile_discrete(parse("once[1:2] once[1:2] (p || q)", TimeModel::Discrete));
  REQUIRE(net.propositions() == std::vector<std::string>{"p", "q"});
  REQUIRE(net.node_count() == 5);

  std::vector<std::vector<char>> rows = {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}};
  int inner = find_timed_node(net, FormulaKind::Once, 0);
  int outer = find_timed_node(net, FormulaKind::Once, 1);
  REQUIRE(inner >= 0);
  REQUIRE(outer >= 0);

  std::vector<std::string> inner_states, outer_states;
  std::vector<char> outputs;
  for (const auto& row : rows) {
    outputs.push_back(net.step(std::span<const char>(row)) ? 1 : 0);
    inner_states.push_back(net.node_state(static_cast<std::size_t>(inner)).to_string());
    outer_states.push_back(net.node_state(static_cast<std::size_t>(outer)).to_string());
  }

  CHECK(outputs == std::vector<char>{0, 0, 1, 1, 1, 0});
  CHECK(inner_states == std::vector<std::string>{"{[2,3]}", "{[2,3]}", "{{3}}", "{}", "{[6,7]}",
                                                 "{[6,7]}"});
  CHECK(outer_states == std::vector<std::string>{"{}", "{[3,4]}", "{[3,5]}", "{[4,5]}", "{{5}}",
                                                 "{[7,8]}"});
}

TEST_CASE("timed historically: golden run with vacuous start") {
  // historically[1:2] psi where psi is an input proposition
  DiscreteNetwork net = compile_discrete(parse("historically[1:2] psi", TimeModel::Discrete));
  std::vector<std::vector<char>> rows = {{0}, {0}, {1}, {1}, {1}, {0}};
  int node = find_timed_node(net, FormulaKind::Historically);
  std::vector<std::string> states;
  std::vector<char> outputs = run(net, rows, node, &states);

  CHECK(outputs == std::vector<char>{1, 0, 0, 0, 1, 1});  // vacuously true at step 1
  CHECK(states == std::vector<std::string>{"{[2,3]}", "{[2,4]}", "{[3,4]}", "{{4}}", "{}",
                                           "{[7,8]}"});
}

TEST_CASE("timed historically: strong semantics") {
  DiscreteNetwork net = compile_discrete(parse("historically[1:2] psi", TimeModel::Discrete));
  net.set_strong_historically(true);
  std::vector<std::vector<char>> rows = {{0}, {0}, {1}, {1}, {1}, {0}};
  // hand-applied update with V0 = [0,2]: outputs flip to false until the
  // assumed-false prefix ages out of the window
  CHECK(run(net, rows) == std::vector<char>{0, 0, 0, 0, 1, 1});

  SECTION("strong semantics cannot be toggled mid-run") {
    DiscreteNetwork n2 = compile_discrete(parse("historically[1:2] psi", TimeModel::Discrete));
    std::vector<char> row{1};
    n2.step(std::span<const char>(row));
    CHECK_THROWS_AS(n2.set_strong_historically(true), std::logic_error);
  }

  SECTION("unbounded strong historically starts with [0,inf)") {
    DiscreteNetwork n3 = compile_discrete(parse("historically[1:inf] psi", TimeModel::Discrete));
    n3.set_strong_historically(true);
    std::vector<std::vector<char>> all_true(10, {1});
    for (char y : run(n3, all_true)) CHECK(y == 0);
  }
}

TEST_CASE("timed since: golden run") {
  DiscreteNetwork net = compile_discrete(parse("p since[2:3] q", TimeModel::Discrete));
  std::vector<std::vector<char>> rows = {{0, 0}, {0, 1}, {1, 0}, {1, 0}, {1, 1}, {1, 0}};
  int node = find_timed_node(net, FormulaKind::Since);
  std::vector<std::string> states;
  std::vector<char> outputs = run(net, rows, node, &states);

  CHECK(outputs == std::vector<char>{0, 0, 0, 1, 1, 0});
  CHECK(states == std::vector<std::string>{"{}", "{[4,5]}", "{[4,5]}", "{[4,5]}", "{{5},[7,8]}",
                                           "{[7,8]}"});
}

TEST_CASE("reset restores the initial state") {
  DiscreteNetwork net = compile_discrete(parse("once[1:2] once[1:2] (p || q)", TimeModel::Discrete));
  std::vector<std::vector<char>> rows = {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}};
  std::vector<char> first = run(net, rows);
  net.reset();
  CHECK(net.current_step() == 0);
  CHECK(run(net, rows) == first);

  DiscreteNetwork fresh = compile_discrete(parse("p", TimeModel::Discrete));
  fresh.reset();  // no-op on a fresh network
  CHECK(fresh.current_step() == 0);
}

TEST_CASE("untimed boolean network matches the since expansion") {
  DiscreteNetwork net = compile_discrete(parse("(p || q) since !r", TimeModel::Discrete));
  CHECK(net.untimed());
  Rng rng(3);
  DiscreteTrace w = random_discrete_trace(rng, {"p", "q", "r"}, 20);
  Formula f = parse("(p || q) since !r", TimeModel::Discrete);
  for (std::int64_t t = 1; t <= 20; ++t) {
    std::vector<char> row = {w.values[0][static_cast<std::size_t>(t - 1)],
                             w.values[1][static_cast<std::size_t>(t - 1)],
                             w.values[2][static_cast<std::size_t>(t - 1)]};
    bool engine = net.step(std::span<const char>(row));
    CHECK(engine == eval_pointy_discrete(f, w, t));
  }
}

TEST_CASE("pre is false at the first step") {
  DiscreteNetwork net = compile_discrete(parse("pre p", TimeModel::Discrete));
  std::vector<std::vector<char>> rows = {{1}, {0}, {1}};
  CHECK(run(net, rows) == std::vector<char>{0, 1, 0});
}

TEST_CASE("missing proposition raises") {
  DiscreteNetwork net = compile_discrete(parse("p && q", TimeModel::Discrete));
  std::unordered_map<std::string, bool> partial{{"p", true}};
  CHECK_THROWS_AS(net.step(partial), std::invalid_argument);
  std::unordered_map<std::string, bool> full{{"p", true}, {"q", false}};
  CHECK_FALSE(net.step(full));
}

TEST_CASE("timed once with [0:inf) bound compiles to an untimed node") {
  DiscreteNetwork net = compile_discrete(parse("once[0:inf] p", TimeModel::Discrete));
  CHECK(net.untimed());
}

TEST_CASE("rewrite equivalence: once[2:4] equals once[1:2] once[1:2]") {
  Formula direct = parse("once[2:4] (p || q)", TimeModel::Discrete);
  Formula nested = parse("once[1:2] once[1:2] (p || q)", TimeModel::Discrete);
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    DiscreteNetwork a = compile_discrete(direct);
    DiscreteNetwork b = compile_discrete(nested);
    DiscreteTrace w = random_discrete_trace(rng, {"p", "q"}, 30);
    for (std::int64_t t = 1; t <= 30; ++t) {
      std::vector<char> row = {w.values[0][static_cast<std::size_t>(t - 1)],
                               w.values[1][static_cast<std::size_t>(t - 1)]};
      REQUIRE(a.step(std::span<const char>(row)) == b.step(std::span<const char>(row)));
    }
  }
}

TEST_CASE("forward-shift bound: timed state lives inside [k, k+b]") {
  Rng rng(31);
  RandomFormulaOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = random_formula(rng, opt);
    DiscreteNetwork net = compile_discrete(f);
    DiscreteTrace w = random_discrete_trace(rng, opt.propositions, 25);
    for (std::int64_t t = 1; t <= 25; ++t) {
      std::vector<char> row;
      for (std::size_t p = 0; p < net.propositions().size(); ++p) {
        int idx = -1;
        for (std::size_t q = 0; q < w.propositions.size(); ++q)
          if (w.propositions[q] == net.propositions()[p]) idx = static_cast<int>(q);
        row.push_back(w.values[static_cast<std::size_t>(idx)][static_cast<std::size_t>(t - 1)]);
      }
      net.step(std::span<const char>(row));
      for (std::size_t i = 0; i < net.node_count(); ++i) {
        if (!net.node_is_timed(i)) continue;
        const auto& bnd = net.dag().nodes[i].bnd;
        for (const IntInterval& iv : net.node_state(i).intervals()) {
          REQUIRE(iv.lo >= t);
          if (!bnd->upper_infinite) REQUIRE(iv.hi <= t + bnd->upper.num());
        }
      }
    }
  }
}

TEST_CASE("worst-case state: punctual window with alternating pulses") {
  // once[b:b] psi with psi true every other step saturates at ~b/2 singletons
  const std::int64_t b = 12;
  DiscreteNetwork net = compile_discrete(parse("once[12:12] psi", TimeModel::Discrete));
  std::size_t peak = 0;
  for (std::int64_t k = 1; k <= 200; ++k) {
    std::vector<char> row = {static_cast<char>(k % 2 == 1 ? 1 : 0)};
    net.step(std::span<const char>(row));
    peak = std::max(peak, net.timed_interval_count());
  }
  CHECK(peak >= static_cast<std::size_t>(b / 2));
  CHECK(peak <= static_cast<std::size_t>(b / 2 + 1));
  for (const IntInterval& iv : net.node_state(1).intervals()) CHECK(iv.lo == iv.hi);
}

TEST_CASE("engine agrees with the pointy oracle on random instances") {
  Rng rng(101);
  RandomFormulaOptions opt;
  for (int trial = 0; trial < 150; ++trial) {
    Formula f = random_formula(rng, opt);
    DiscreteNetwork net = compile_discrete(f);
    std::int64_t len = rng.range(1, 30);
    DiscreteTrace w = random_discrete_trace(rng, opt.propositions, len);
    for (std::int64_t t = 1; t <= len; ++t) {
      std::vector<char> row;
      for (const std::string& prop : net.propositions())
        row.push_back(w.value(prop, t) ? 1 : 0);
      bool engine = net.step(std::span<const char>(row));
      bool oracle = eval_pointy_discrete(f, w, t);
      if (engine != oracle) {
        CAPTURE(f.to_string(), t);
        REQUIRE(engine == oracle);
      }
    }
  }
}

TEST_CASE("engine agrees with the oracle under strong historically") {
  Rng rng(202);
  RandomFormulaOptions opt;
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = random_formula(rng, opt);
    DiscreteNetwork net = compile_discrete(f);
    net.set_strong_historically(true);
    std::int64_t len = rng.range(1, 25);
    DiscreteTrace w = random_discrete_trace(rng, opt.propositions, len);
    for (std::int64_t t = 1; t <= len; ++t) {
      std::vector<char> row;
      for (const std::string& prop : net.propositions())
        row.push_back(w.value(prop, t) ? 1 : 0);
      bool engine = net.step(std::span<const char>(row));
      bool oracle = eval_pointy_discrete(f, w, t, /*strong_historically=*/true);
      if (engine != oracle) {
        CAPTURE(f.to_string(), t);
        REQUIRE(engine == oracle);
      }
    }
  }
}
