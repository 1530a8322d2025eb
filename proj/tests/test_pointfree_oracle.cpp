#include <catch2/catch_amalgamated.hpp>

#include "seqmon/generators.hpp"
#include "seqmon/oracle/pointfree_oracle.hpp"
#include "seqmon/parser.hpp"

using namespace seqmon;

namespace {

PeriodSet ps(std::initializer_list<std::pair<int, int>> list) {
  PeriodSet out;
  for (auto [lo, hi] : list) out.add(period(Rational(lo), Rational(hi)));
  return out;
}

HomStructure table6_structure() {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(99);
  h.valuations.emplace_back("phi1", ps({{7, 30}, {30, 35}, {39, 47}, {47, 49}, {63, 75}, {75, 99}}));
  h.valuations.emplace_back("phi2", ps({{3, 8}, {38, 39}, {70, 75}, {75, 89}}));
  return h;
}

}  // namespace

TEST_CASE("point-free disjunction merges across the boundary point") {
  // p = {(3,4)}, q = {(4,6)} over (0,9): V(p || q) = {(3,6)}
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(9);
  h.valuations.emplace_back("p", ps({{3, 4}}));
  h.valuations.emplace_back("q", ps({{4, 6}}));
  CHECK(eval_pointfree(parse("p || q", TimeModel::Dense), h) == ps({{3, 6}}));
  CHECK(eval_pointfree(parse("!(!p && !q)", TimeModel::Dense), h) == ps({{3, 6}}));
}

TEST_CASE("point-free boolean operations reproduce the worked example") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(20);
  h.valuations.emplace_back("p", ps({{2, 4}, {7, 10}, {11, 17}}));
  h.valuations.emplace_back("q", ps({{3, 8}, {14, 15}}));
  CHECK(eval_pointfree(parse("!p", TimeModel::Dense), h) ==
        ps({{0, 2}, {4, 7}, {10, 11}, {17, 20}}));
  CHECK(eval_pointfree(parse("p && q", TimeModel::Dense), h) == ps({{3, 4}, {7, 8}, {14, 15}}));
  CHECK(eval_pointfree(parse("p || q", TimeModel::Dense), h) == ps({{2, 10}, {11, 17}}));
}

TEST_CASE("true holds on the whole span") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(9);
  CHECK(eval_pointfree(parse("true", TimeModel::Dense), h) == ps({{0, 9}}));
  CHECK(eval_pointfree(parse("false", TimeModel::Dense), h).empty());
}

TEST_CASE("timed since over the four-chunk behavior") {
  HomStructure h = table6_structure();
  Formula f = parse("phi1 since[18:24] phi2", TimeModel::Dense);
  CHECK(eval_pointfree(f, h) == ps({{25, 32}, {88, 99}}));
}

TEST_CASE("oracle output is independent of the refinement factor") {
  Rng rng(404);
  RandomFormulaOptions opt;
  opt.model = TimeModel::Dense;
  opt.max_bound = 6;
  for (int trial = 0; trial < 60; ++trial) {
    Formula f = random_formula(rng, opt);
    RandomBehaviorOptions bopt;
    bopt.max_end = 25;
    HomStructure h = random_hom_structure(rng, opt.propositions, bopt);
    PeriodSet base = eval_pointfree(f, h, 1);
    CHECK(eval_pointfree(f, h, 2) == base);
    CHECK(eval_pointfree(f, h, 4) == base);
  }
}

TEST_CASE("rational endpoints and bounds are handled exactly") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(10);
  PeriodSet truths;
  truths.add(period(Rational(5, 2), Rational(9, 2)));
  h.valuations.emplace_back("p", truths);
  // once[0.5:1.5] p is true exactly on (3,6)
  Formula f = parse("once[0.5:1.5] p", TimeModel::Dense);
  CHECK(eval_pointfree(f, h) == ps({{3, 6}}));
}

TEST_CASE("flattening holds on the worked examples") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(20);
  h.valuations.emplace_back("p", ps({{2, 4}, {7, 10}, {11, 17}}));
  h.valuations.emplace_back("q", ps({{3, 8}, {14, 15}}));
  CHECK(check_flattening(parse("p || q", TimeModel::Dense), h));
  CHECK(check_flattening(parse("p", TimeModel::Dense), h));
  CHECK(check_flattening(table6_structure().valuations.empty()
                             ? parse("p", TimeModel::Dense)
                             : parse("phi1 since[18:24] phi2", TimeModel::Dense),
                         table6_structure()));
}

TEST_CASE("flattening and left continuity hold on random dense instances") {
  Rng rng(505);
  RandomFormulaOptions opt;
  opt.model = TimeModel::Dense;
  opt.max_bound = 8;
  for (int trial = 0; trial < 120; ++trial) {
    Formula f = random_formula(rng, opt);
    RandomBehaviorOptions bopt;
    bopt.max_end = 30;
    if (trial % 3 == 0) bopt.denominator = 2;
    HomStructure h = random_hom_structure(rng, opt.propositions, bopt);
    CAPTURE(f.to_string(), h.span_end.to_string());
    CHECK(check_flattening(f, h));
    CHECK(check_left_continuity(f, h));
  }
}

TEST_CASE("every maximal period is pointwise true inside") {
  Rng rng(606);
  RandomFormulaOptions opt;
  opt.model = TimeModel::Dense;
  for (int trial = 0; trial < 40; ++trial) {
    Formula f = random_formula(rng, opt);
    RandomBehaviorOptions bopt;
    bopt.max_end = 20;
    HomStructure h = random_hom_structure(rng, opt.propositions, bopt);
    PeriodSet v = eval_pointfree(f, h);
    auto table = detail::eval_pointy_dense(f, h, 1);
    for (const Period& p : v.periods()) {
      std::int64_t s = p.begin.scaled_integer(table.scale) - table.grid0;
      std::int64_t e = p.end.scaled_integer(table.scale) - table.grid0;
      for (std::int64_t g = s; g < e; ++g)
        REQUIRE(table.root_truth()[static_cast<std::size_t>(2 * g + 1)] != 0);
    }
  }
}

TEST_CASE("oracle rejects ill-formed inputs") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(0);
  CHECK_THROWS_AS(eval_pointfree(parse("p", TimeModel::Dense), h), std::invalid_argument);
  h.span_end = Rational(10);
  CHECK_THROWS_AS(eval_pointfree(parse("p", TimeModel::Dense), h), std::invalid_argument);
  h.valuations.emplace_back("p", ps({{2, 30}}));
  CHECK_THROWS_AS(eval_pointfree(parse("p", TimeModel::Dense), h), std::invalid_argument);
  h.valuations[0].second = ps({{2, 4}});
  CHECK_THROWS_AS(eval_pointfree(parse("pre p", TimeModel::Dense), h), std::invalid_argument);
}
