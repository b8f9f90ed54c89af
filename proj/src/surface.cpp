#include "zmc/surface.hpp"

#include <stdexcept>

namespace zmc {

char causal_code(CausalType t) {
  switch (t) {
    case CausalType::SPACELIKE: return 'S';
    case CausalType::TIMELIKE: return 'T';
    case CausalType::LIGHTLIKE: return 'L';
  }
  return '?';
}

const char* causal_name(CausalType t) {
  switch (t) {
    case CausalType::SPACELIKE: return "spacelike";
    case CausalType::TIMELIKE: return "timelike";
    case CausalType::LIGHTLIKE: return "lightlike";
  }
  return "?";
}

TruncatedSolution::TruncatedSolution(const CoefficientTable& table, const Rational& c_value)
    : c_(c_value) {
  if (c_.sign() <= 0) throw std::invalid_argument("c must be positive");
  const int n = table.order();
  b_.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) b_.push_back(table.b(k).specialize_c(c_));
  bf_.reserve(b_.size());
  dbf_.reserve(b_.size());
  ddbf_.reserve(b_.size());
  for (const auto& p : b_) {
    bf_.push_back(p.float_coeffs());
    dbf_.push_back(p.derivative().float_coeffs());
    ddbf_.push_back(p.derivative().derivative().float_coeffs());
  }
}

TruncatedSolution TruncatedSolution::build(const Rational& c_value, int order) {
  return TruncatedSolution(CoefficientTable::generate(order), c_value);
}

double TruncatedSolution::evaluate(double x, double y) const {
  // f = y + x^3 * sum_{k=3}^{N} (b_k(y)/k) x^{k-3}; the pulled-out factor
  // keeps f(0, y) = y without any arithmetic on the tail.
  double acc = 0.0;
  for (int k = order(); k >= 3; --k)
    acc = acc * x + horner(bf_[static_cast<std::size_t>(k)], y) / k;
  return y + x * x * x * acc;
}

Rational TruncatedSolution::evaluate_exact(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (int k = order(); k >= 3; --k)
    acc = acc * x + b_[static_cast<std::size_t>(k)].evaluate(y) / Rational(k);
  return y + x.pow(3) * acc;
}

Partials TruncatedSolution::partials(double x, double y) const {
  double s_fx = 0, s_fxx = 0, s_fxy = 0, s_fy = 0, s_fyy = 0;
  for (int k = order(); k >= 3; --k) {
    const auto ku = static_cast<std::size_t>(k);
    const double bk = horner(bf_[ku], y);
    const double dbk = horner(dbf_[ku], y);
    s_fx = s_fx * x + bk;
    s_fxx = s_fxx * x + (k - 1) * bk;
    s_fxy = s_fxy * x + dbk;
    s_fy = s_fy * x + dbk / k;
    s_fyy = s_fyy * x + horner(ddbf_[ku], y) / k;
  }
  const double x2 = x * x, x3 = x2 * x;
  return {x2 * s_fx, 1.0 + x3 * s_fy, x * s_fxx, x2 * s_fxy, x3 * s_fyy};
}

double TruncatedSolution::residual_numeric(double x, double y) const {
  const Partials p = partials(x, y);
  return (1.0 - p.fy * p.fy) * p.fxx + 2.0 * p.fx * p.fy * p.fxy +
         (1.0 - p.fx * p.fx) * p.fyy;
}

double TruncatedSolution::causal_quantity(double x, double y) const {
  double s_fx = 0, s_fy = 0;
  for (int k = order(); k >= 3; --k) {
    const auto ku = static_cast<std::size_t>(k);
    s_fx = s_fx * x + horner(bf_[ku], y);
    s_fy = s_fy * x + horner(dbf_[ku], y) / k;
  }
  const double fx = x * x * s_fx;
  const double S = x * x * x * s_fy;  // f_y - 1
  return -S * (2.0 + S) - fx * fx;
}

CausalType TruncatedSolution::causal_type(double x, double y, double tol) const {
  const double q = causal_quantity(x, y);
  if (q > tol) return CausalType::SPACELIKE;
  if (q < -tol) return CausalType::TIMELIKE;
  return CausalType::LIGHTLIKE;
}

}  // namespace zmc
