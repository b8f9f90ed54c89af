#include "doctest.h"

#include "zmc/coefficient_table.hpp"
#include "zmc/cy_polynomial.hpp"
#include "zmc/rational.hpp"

#include <stdexcept>

using zmc::CoefficientTable;
using zmc::CYPolynomial;
using zmc::Rational;

namespace {

CYPolynomial mono(long num, long den, int c_exp, int y_exp) {
  return CYPolynomial::term(Rational(num, den), c_exp, y_exp);
}

}  // namespace

TEST_CASE("seed table") {
  const CoefficientTable t = CoefficientTable::seed();
  CHECK(t.order() == 3);
  CHECK(t.b(0) == mono(1, 1, 0, 1));
  CHECK(t.b(1).is_zero());
  CHECK(t.b(2).is_zero());
  CHECK(t.b(3) == mono(3, 1, 1, 1));
  CHECK(t.characteristic() == Rational(0));
}

// Closed forms b_4..b_10, derived independently by running the recurrence
// through a computer-algebra system and frozen here.
TEST_CASE("low-order coefficients") {
  const CoefficientTable t = CoefficientTable::generate(10);
  CHECK(t.b(4) == mono(-4, 1, 2, 3));
  CHECK(t.b(5) == mono(9, 1, 3, 5));
  CHECK(t.b(6) == mono(-24, 1, 4, 7));
  CHECK(t.b(7) == mono(70, 1, 5, 9) + mono(-14, 1, 3, 3));
  CHECK(t.b(8) == mono(-216, 1, 6, 11) + mono(288, 5, 4, 5));
  CHECK(t.b(9) == mono(693, 1, 7, 13) + mono(-1062, 5, 5, 7));
  CHECK(t.b(10) == mono(-2288, 1, 8, 15) + mono(768, 1, 6, 9));
}

TEST_CASE("b_6 carries c^4, not c^2") {
  // The c-exponent here is forced by the scaling weight i + k - 3j = 1
  // (7 + 6 - 3j = 1 gives j = 4); a c^2 top term would break it.
  const CoefficientTable t = CoefficientTable::generate(6);
  CHECK(t.b(6).coeff(4, 7) == Rational(-24));
  CHECK(t.b(6).coeff(2, 7) == Rational(0));
  CHECK(t.weight_ok(6));
}

TEST_CASE("source terms at k = 4..6 have no triple products") {
  const CoefficientTable t = CoefficientTable::generate(8);
  for (int k = 4; k <= 6; ++k) {
    CHECK(t.source_Q(k).is_zero());
    CHECK(t.source_R(k).is_zero());
  }
  CHECK_FALSE(t.source_Q(7).is_zero());
  // R_7's only term holds b_3'' = 0, so the first live R is R_8.
  CHECK(t.source_R(7).is_zero());
  CHECK_FALSE(t.source_R(8).is_zero());
}

TEST_CASE("P_4 comes out as -24 c^2 y") {
  // Single term m = 3: 2(4-6+3)/3 * b_3 b_3' = (2/3)(3cy)(3c) = 6c^2 y,
  // then P_4 alone drives b_4'' = -4 * 6 c^2 y.
  const CoefficientTable t = CoefficientTable::generate(4);
  CHECK(t.source_P(4) == mono(6, 1, 2, 1));
  CHECK(t.b(4).diff_y().diff_y() == mono(-24, 1, 2, 1));
}

TEST_CASE("index guards") {
  const CoefficientTable t = CoefficientTable::generate(6);
  CHECK_THROWS_AS(t.source_P(3), std::invalid_argument);
  CHECK_THROWS_AS(t.source_Q(2), std::invalid_argument);
  CHECK_THROWS_AS(t.source_P(8), std::invalid_argument);  // needs b_7
  CHECK_THROWS_AS(t.general_sources(8), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientTable::generate(2), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientTable::generate(-1), std::invalid_argument);
}

TEST_CASE("generate is deterministic and extend matches") {
  const CoefficientTable a = CoefficientTable::generate(12);
  const CoefficientTable b = CoefficientTable::generate(12);
  for (int k = 0; k <= 12; ++k) CHECK(a.b(k) == b.b(k));

  const CoefficientTable c = CoefficientTable::generate(11).extend();
  CHECK(c.order() == 12);
  for (int k = 0; k <= 12; ++k) CHECK(c.b(k) == a.b(k));
}

TEST_CASE("structural invariants through order 16") {
  const CoefficientTable t = CoefficientTable::generate(16);
  for (int k = 3; k <= 16; ++k) {
    CAPTURE(k);
    CHECK(t.odd_in_y_ok(k));
    CHECK(t.weight_ok(k));
    CHECK(t.degree_bound_ok(k));
    if (k >= 4) {
      CHECK(t.initial_conditions_ok(k));
      CHECK(t.ode_roundtrip_ok(k));
    }
  }
}

TEST_CASE("general sums reduce to the b_2 = 0 forms") {
  const CoefficientTable t = CoefficientTable::generate(12);
  for (int k = 4; k <= 12; ++k) {
    CAPTURE(k);
    const auto [P, Q, R] = t.general_sources(k);
    CHECK(P == t.source_P(k));
    CHECK(Q == t.source_Q(k));
    CHECK(R == t.source_R(k));
  }
}

TEST_CASE("coefficients stay rational multiples of odd powers") {
  const CoefficientTable t = CoefficientTable::generate(14);
  // Growth sanity: top coefficient of b_k alternates in sign with k.
  for (int k = 4; k <= 14; ++k) {
    const Rational top = t.b(k).coeff(k - 2, 2 * k - 5);
    CHECK(top.sign() == ((k % 2 == 0) ? -1 : 1));
  }
}
