#include "doctest.h"

#include "zmc/rational.hpp"

#include <stdexcept>

using zmc::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));  // sign moves to numerator
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string accepts p and p/q") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("one half"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("0.5"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(), std::domain_error);

  Rational x(5, 4);
  x += Rational(3, 4);
  CHECK(x == Rational(2));
  x *= Rational(-1, 2);
  CHECK(x == Rational(-1));
  x -= Rational(1);
  CHECK(x == Rational(-2));
  x /= Rational(4);
  CHECK(x == Rational(-1, 2));
}

TEST_CASE("ring axioms hold on a small sample") {
  const Rational vals[] = {Rational(0), Rational(1), Rational(-2, 3),
                           Rational(7, 5), Rational(-11, 13)};
  for (const auto& p : vals)
    for (const auto& q : vals) {
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      for (const auto& r : vals) {
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
      }
    }
}

TEST_CASE("comparisons, sign, abs") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(3, 2) > Rational(1));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational().sign() == 0);
  CHECK(Rational(9, 2).sign() == 1);
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
  CHECK(Rational().is_zero());
  CHECK_FALSE(Rational(1, 1000000).is_zero());
}

TEST_CASE("pow and to_double") {
  CHECK(Rational(1, 2).pow(10) == Rational(1, 1024));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(7).pow(0) == Rational(1));
  CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("str round-trips") {
  const char* reprs[] = {"0", "1", "-1", "22/7", "-355/113"};
  for (const char* s : reprs) CHECK(Rational::from_string(s).str() == s);
}

TEST_CASE("exact arithmetic survives deep denominators") {
  // sum_{i=1}^{60} 1/i, exactly; double would have drifted long before.
  Rational h;
  for (long i = 1; i <= 60; ++i) h += Rational(1, i);
  CHECK(h.str() ==
        "15117092380124150817026911/3230237388259077233637600");
}
