#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seqmon/chunk.hpp"

using seqmon::Chunk;
using seqmon::merge_stutter;
using seqmon::period;
using seqmon::PeriodSet;
using seqmon::Rational;
using seqmon::Segment;
using seqmon::synchronize;

namespace {

Chunk single(const char* name, Rational begin, std::initializer_list<std::pair<int, bool>> segs) {
  Chunk c(begin, {name});
  for (auto [end, v] : segs) c.push_segment(Rational(end), {v ? char(1) : char(0)});
  return c;
}

}  // namespace

TEST_CASE("synchronize divides a common span at all boundaries") {
  // phi1 true on (7,30), phi2 true on (3,8), span (0,30)
  Chunk a = single("phi1", Rational(0), {{7, false}, {30, true}});
  Chunk b = single("phi2", Rational(0), {{3, false}, {8, true}, {30, false}});
  auto segs = synchronize(a, b);
  REQUIRE(segs.size() == 4);
  CHECK(segs[0] == Segment{Rational(0), Rational(3), false, false});
  CHECK(segs[1] == Segment{Rational(3), Rational(7), false, true});
  CHECK(segs[2] == Segment{Rational(7), Rational(8), true, true});
  CHECK(segs[3] == Segment{Rational(8), Rational(30), true, false});
}

TEST_CASE("synchronize of identical constant chunks is one segment") {
  Chunk a = single("x", Rational(0), {{9, true}});
  Chunk b = single("y", Rational(0), {{9, true}});
  auto segs = synchronize(a, b);
  REQUIRE(segs.size() == 1);
  CHECK(segs[0] == Segment{Rational(0), Rational(9), true, true});
}

TEST_CASE("synchronize keeps one-sided boundaries") {
  Chunk a = single("x", Rational(0), {{1, true}, {2, true}});  // stutter cut at 1
  Chunk b = single("y", Rational(0), {{2, false}});
  auto segs = synchronize(a, b);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0] == Segment{Rational(0), Rational(1), true, false});
  CHECK(segs[1] == Segment{Rational(1), Rational(2), true, false});
}

TEST_CASE("synchronize rejects span mismatch") {
  Chunk a = single("x", Rational(0), {{9, true}});
  Chunk b = single("y", Rational(0), {{8, true}});
  CHECK_THROWS_AS(synchronize(a, b), std::invalid_argument);
}

TEST_CASE("merge_stutter coalesces equal-valued neighbors") {
  Chunk p(Rational(0), {"p"});
  p.push_segment(Rational(5, 2), {1});
  p.push_segment(Rational(4), {1});
  p.push_segment(Rational(6), {0});
  p.push_segment(Rational(8), {1});
  p.push_segment(Rational(9), {0});
  Chunk merged = merge_stutter(p);
  REQUIRE(merged.segment_count() == 4);
  CHECK(merged.cut(0) == Rational(4));
  CHECK(merged.value(0, 0));
  CHECK(merged.cut(1) == Rational(6));
  CHECK_FALSE(merged.value(1, 0));
  CHECK(merged.cut(2) == Rational(8));
  CHECK(merged.cut(3) == Rational(9));

  Chunk one = single("p", Rational(0), {{4, true}});
  CHECK(merge_stutter(one).segment_count() == 1);

  Chunk alt = single("p", Rational(0), {{1, true}, {2, false}, {3, true}});
  CHECK(merge_stutter(alt).segment_count() == 3);
}

TEST_CASE("synchronize preserves values at segment midpoints") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_chunk = [&](const char* name) {
      Chunk c(Rational(0), {name});
      std::int64_t t = 0;
      while (t < 30) {
        std::int64_t next = t + 1 + static_cast<std::int64_t>(rng() % 5);
        if (next > 30) next = 30;
        c.push_segment(Rational(next), {static_cast<char>(rng() % 2)});
        t = next;
      }
      return c;
    };
    Chunk a = random_chunk("a");
    Chunk b = random_chunk("b");
    auto segs = synchronize(a, b);
    // tiling: no gaps, no overlaps
    REQUIRE(segs.front().begin == Rational(0));
    REQUIRE(segs.back().end == Rational(30));
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) REQUIRE(segs[i].end == segs[i + 1].begin);
    PeriodSet pa = a.column_periods(0);
    PeriodSet pb = b.column_periods(0);
    for (const Segment& s : segs) {
      Rational mid = Rational(s.begin.num(), s.begin.den() * 2) +
                     Rational(s.end.num(), s.end.den() * 2);  // (begin+end)/2
      REQUIRE(pa.contains_point(mid) == s.left);
      REQUIRE(pb.contains_point(mid) == s.right);
    }
  }
}
