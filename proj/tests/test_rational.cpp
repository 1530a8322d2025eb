#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seqmon/rational.hpp"

using seqmon::Rational;

TEST_CASE("rational decimal parsing and printing round-trips") {
  CHECK(Rational::from_decimal("7") == Rational(7));
  CHECK(Rational::from_decimal("2.5") == Rational(5, 2));
  CHECK(Rational::from_decimal("0.125") == Rational(1, 8));
  CHECK(Rational::from_decimal("12.345") == Rational(12345, 1000));
  CHECK(Rational(5, 2).to_string() == "2.5");
  CHECK(Rational(1, 8).to_string() == "0.125");
  CHECK(Rational(42).to_string() == "42");
  CHECK(Rational(-3, 4).to_string() == "-0.75");
  CHECK(Rational(1, 3).to_string() == "1/3");  // non-decimal fallback
  CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_decimal("."), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, 4) < Rational(4, 5));
  CHECK(Rational(7, 10) + Rational(3, 10) == Rational(1));
  CHECK((-Rational(1, 2)).is_negative());
}

TEST_CASE("rational scales exactly to grid integers") {
  CHECK(Rational(5, 2).scaled_integer(4) == 10);
  CHECK(Rational(7).scaled_integer(3) == 21);
  CHECK_THROWS_AS(Rational(1, 3).scaled_integer(2), std::logic_error);
}

TEST_CASE("rational ordering is consistent under random arithmetic") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a(static_cast<std::int64_t>(rng() % 2000) - 1000,
               static_cast<std::int64_t>(rng() % 40) + 1);
    Rational b(static_cast<std::int64_t>(rng() % 2000) - 1000,
               static_cast<std::int64_t>(rng() % 40) + 1);
    CHECK(((a < b) || (b < a) || (a == b)));
    CHECK((a + b) - b == a);
    if (a < b) CHECK(a + Rational(1, 1000000) <= b + Rational(1, 1000));
  }
}
