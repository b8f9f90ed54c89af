#include "zmc/coefficient_table.hpp"

#include <stdexcept>
#include <string>

namespace zmc {

namespace {

void require_source_index(int k, int order) {
  if (k < 4) throw std::invalid_argument("source terms need k >= 4, got " + std::to_string(k));
  if (k - 1 > order)
    throw std::invalid_argument("source terms for k = " + std::to_string(k) +
                                " need b_3..b_" + std::to_string(k - 1) +
                                ", table order is " + std::to_string(order));
}

}  // namespace

CoefficientTable CoefficientTable::seed() {
  CoefficientTable t;
  t.b_.push_back(CYPolynomial::term(Rational(1), 0, 1));  // b_0 = y
  t.b_.push_back(CYPolynomial::zero());                   // b_1 = 0
  t.b_.push_back(CYPolynomial::zero());                   // b_2 = 0
  t.b_.push_back(CYPolynomial::term(Rational(3), 1, 1));  // b_3 = 3cy
  return t;
}

CoefficientTable CoefficientTable::generate(int n) {
  if (n < 3) throw std::invalid_argument("order must be >= 3, got " + std::to_string(n));
  CoefficientTable t = seed();
  while (t.order() < n) t.append_next();
  return t;
}

CYPolynomial CoefficientTable::source_P(int k) const {
  require_source_index(k, order());
  CYPolynomial p = CYPolynomial::zero();
  for (int m = 3; m <= k - 1; ++m) {
    const Rational factor(2L * (k - 2 * m + 3), k - m + 2);
    p = p + (b(m) * b(k - m + 2).diff_y()).scaled(factor);
  }
  return p;
}

CYPolynomial CoefficientTable::source_Q(int k) const {
  require_source_index(k, order());
  CYPolynomial q = CYPolynomial::zero();
  for (int m = 3; m <= k - 4; ++m) {
    const CYPolynomial dbm = b(m).diff_y();
    for (int n = 3; n <= k - m - 1; ++n) {
      const Rational factor(3L * n - k + m - 1, static_cast<long>(m) * n);
      q = q + (dbm * b(n).diff_y() * b(k - m - n + 2)).scaled(factor);
    }
  }
  return q;
}

CYPolynomial CoefficientTable::source_R(int k) const {
  require_source_index(k, order());
  CYPolynomial r = CYPolynomial::zero();
  for (int m = 3; m <= k - 4; ++m) {
    for (int n = 3; n <= k - m - 1; ++n) {
      const int j = k - m - n + 2;
      r = r + (b(m) * b(n) * b(j).diff_y().diff_y()).scaled(Rational(1L, j));
    }
  }
  return r;
}

SourceTerms CoefficientTable::general_sources(int k) const {
  require_source_index(k, order());
  SourceTerms s{CYPolynomial::zero(), CYPolynomial::zero(), CYPolynomial::zero()};
  for (int m = 3; m <= k - 1; ++m) {
    const Rational factor(2L * (k - 2 * m + 3), k - m + 2);
    s.P = s.P + (b(m) * b(k - m + 2).diff_y()).scaled(factor);
  }
  // Full ranges; terms touching b_2 = 0 vanish, which is what makes the
  // reduced forms above equivalent.
  for (int m = 2; m <= k - 2; ++m) {
    const CYPolynomial dbm = b(m).diff_y();
    for (int n = 2; n <= k - m; ++n) {
      const int j = k - m - n + 2;
      const Rational qfac(3L * n - k + m - 1, static_cast<long>(m) * n);
      s.Q = s.Q + (dbm * b(n).diff_y() * b(j)).scaled(qfac);
      s.R = s.R + (b(m) * b(n) * b(j).diff_y().diff_y()).scaled(Rational(1L, j));
    }
  }
  return s;
}

void CoefficientTable::append_next() {
  const int k = order() + 1;
  const CYPolynomial rhs =
      (source_P(k) + source_Q(k) - source_R(k)).scaled(Rational(-k));
  b_.push_back(rhs.double_integrate_zero_ic());
}

CoefficientTable CoefficientTable::extend() const {
  CoefficientTable t = *this;
  t.append_next();
  return t;
}

bool CoefficientTable::initial_conditions_ok(int k) const {
  for (const auto& [mono, coeff] : b(k).terms()) {
    (void)coeff;
    if (mono.y_exp < 2) return false;
  }
  return true;
}

bool CoefficientTable::odd_in_y_ok(int k) const { return b(k).odd_in_y(); }

bool CoefficientTable::weight_ok(int k) const {
  for (const auto& [mono, coeff] : b(k).terms()) {
    (void)coeff;
    if (mono.y_exp + k - 3 * mono.c_exp != 1) return false;
  }
  return true;
}

bool CoefficientTable::degree_bound_ok(int k) const {
  return b(k).deg_y() == 2 * k - 5;
}

bool CoefficientTable::ode_roundtrip_ok(int k) const {
  const CYPolynomial lhs = b(k).diff_y().diff_y() +
      (source_P(k) + source_Q(k) - source_R(k)).scaled(Rational(k));
  return lhs.is_zero();
}

}  // namespace zmc
