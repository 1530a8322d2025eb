#include <catch2/catch_amalgamated.hpp>

#include "seqmon/generators.hpp"
#include "seqmon/oracle/mcl.hpp"
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
  h.valuations.emplace_back("phi1", ps({{7, 35}, {39, 49}, {63, 99}}));
  h.valuations.emplace_back("phi2", ps({{3, 8}, {38, 39}, {70, 89}}));
  return h;
}

}  // namespace

TEST_CASE("compass modalities by direct enumeration") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(50);
  h.valuations.emplace_back("phi2", ps({{38, 39}}));
  h.valuations.emplace_back("p", ps({{5, 8}}));
  h.valuations.emplace_back("nowhere", PeriodSet{});

  // <B> with a nowhere-true argument is false everywhere
  MclFormula b_empty = MclFormula::modal(CompassRelation::B, MclFormula::prop("nowhere"));
  CHECK_FALSE(eval_mcl(b_empty, h, Rational(0), Rational(5)));

  // [B][E]~p on a period inside p's complement
  MclFormula boxed = MclFormula::box(
      CompassRelation::B,
      MclFormula::box(CompassRelation::E, MclFormula::complement(MclFormula::prop("p"))));
  CHECK(eval_mcl(boxed, h, Rational(1), Rational(4)));
  CHECK_FALSE(eval_mcl(boxed, h, Rational(4), Rational(9)));  // p holds strictly inside

  // met-by with a length bound: a phi2-period must end exactly at the
  // period's start with length strictly inside the bound
  MclFormula met_narrow = MclFormula::modal(CompassRelation::AInv, MclFormula::prop("phi2"),
                                            bound(Rational(0), Rational(2)));
  CHECK(eval_mcl(met_narrow, h, Rational(39), Rational(40)));  // witness (38,39), length 1
  MclFormula met_wide = MclFormula::modal(CompassRelation::AInv, MclFormula::prop("phi2"),
                                          bound(Rational(18), Rational(24)));
  CHECK_FALSE(eval_mcl(met_wide, h, Rational(39), Rational(40)));  // 1 is outside (18,24)

  // meets: a p-period starts where this one ends
  MclFormula meets = MclFormula::modal(CompassRelation::A, MclFormula::prop("p"));
  CHECK(eval_mcl(meets, h, Rational(2), Rational(5)));
  CHECK(eval_mcl(meets, h, Rational(2), Rational(6)));  // p still extends past 6
  CHECK_FALSE(eval_mcl(meets, h, Rational(2), Rational(9)));

  CHECK_THROWS_AS(eval_mcl(meets, h, Rational(100), Rational(4000)), std::out_of_range);
}

TEST_CASE("compass equivalences on fixed instances") {
  HomStructure h;
  h.span_begin = Rational(0);
  h.span_end = Rational(20);
  h.valuations.emplace_back("p", ps({{2, 4}, {7, 10}, {11, 17}}));
  h.valuations.emplace_back("q", ps({{3, 8}, {14, 15}}));

  CHECK(check_mcl_equivalences(parse("!p", TimeModel::Dense), h));
  CHECK(check_mcl_equivalences(parse("p && q", TimeModel::Dense), h));
  CHECK(check_mcl_equivalences(parse("p since q", TimeModel::Dense), h));
  CHECK(check_mcl_equivalences(parse("p since[2:5] q", TimeModel::Dense), h));
  CHECK(check_mcl_equivalences(parse("!(p && !q)", TimeModel::Dense), h));
}

TEST_CASE("compass equivalence on the four-chunk since instance") {
  CHECK(check_mcl_equivalences(parse("phi1 since[18:24] phi2", TimeModel::Dense),
                               table6_structure()));
}

TEST_CASE("compass equivalences on random instances") {
  Rng rng(1234);
  RandomFormulaOptions opt;
  opt.model = TimeModel::Dense;
  opt.since_only = true;
  opt.max_depth = 3;
  opt.max_bound = 6;
  opt.propositions = {"p", "q"};
  RandomBehaviorOptions bopt;
  bopt.max_end = 14;
  for (int trial = 0; trial < 30; ++trial) {
    Formula f = random_formula(rng, opt);
    HomStructure h = random_hom_structure(rng, opt.propositions, bopt);
    CAPTURE(f.to_string());
    CHECK(check_mcl_equivalences(f, h));
  }
}
