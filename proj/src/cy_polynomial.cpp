#include "zmc/cy_polynomial.hpp"

#include <ostream>
#include <sstream>

namespace zmc {

void YPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

YPolynomial YPolynomial::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return YPolynomial(std::move(out));
}

YPolynomial operator+(const YPolynomial& a, const YPolynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return YPolynomial(std::move(out));
}

YPolynomial operator-(const YPolynomial& a, const YPolynomial& b) { return a + (-b); }

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return YPolynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return YPolynomial(std::move(out));
}

YPolynomial YPolynomial::scaled(const Rational& s) const {
  if (s.is_zero()) return YPolynomial();
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return YPolynomial(std::move(out));
}

YPolynomial YPolynomial::derivative() const {
  if (c_.size() <= 1) return YPolynomial();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return YPolynomial(std::move(out));
}

Rational YPolynomial::evaluate(const Rational& y) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

double YPolynomial::evaluate(double y) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + it->to_double();
  return acc;
}

std::vector<double> YPolynomial::float_coeffs() const {
  std::vector<double> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].to_double();
  return out;
}

std::string YPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational r = coeff(i);
    if (r.is_zero()) continue;
    const Rational mag = r.abs();
    if (first) {
      if (r.sign() < 0) os << "-";
      first = false;
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1)) && i > 0;
    if (!unit) {
      if (mag.denominator() == 1) os << mag.str();
      else os << "(" << mag.str() << ")";
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CYPolynomial CYPolynomial::term(const Rational& coeff, int c_exp, int y_exp) {
  CYPolynomial p;
  if (!coeff.is_zero()) p.terms_[{c_exp, y_exp}] = coeff;
  return p;
}

int CYPolynomial::deg_y() const {
  int d = -1;
  for (const auto& [m, r] : terms_) d = std::max(d, m.y_exp);
  return d;
}

int CYPolynomial::deg_c() const {
  int d = -1;
  for (const auto& [m, r] : terms_) d = std::max(d, m.c_exp);
  return d;
}

Rational CYPolynomial::coeff(int c_exp, int y_exp) const {
  auto it = terms_.find({c_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void CYPolynomial::add_term(const Monomial& m, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CYPolynomial CYPolynomial::operator-() const {
  CYPolynomial out;
  for (const auto& [m, r] : terms_) out.terms_[m] = -r;
  return out;
}

CYPolynomial operator+(const CYPolynomial& a, const CYPolynomial& b) {
  CYPolynomial out = a;
  for (const auto& [m, r] : b.terms_) out.add_term(m, r);
  return out;
}

CYPolynomial operator-(const CYPolynomial& a, const CYPolynomial& b) {
  CYPolynomial out = a;
  for (const auto& [m, r] : b.terms_) out.add_term(m, -r);
  return out;
}

CYPolynomial operator*(const CYPolynomial& a, const CYPolynomial& b) {
  CYPolynomial out;
  for (const auto& [ma, ra] : a.terms_) {
    for (const auto& [mb, rb] : b.terms_) {
      out.add_term({ma.c_exp + mb.c_exp, ma.y_exp + mb.y_exp}, ra * rb);
    }
  }
  return out;
}

CYPolynomial CYPolynomial::scaled(const Rational& s) const {
  CYPolynomial out;
  if (s.is_zero()) return out;
  for (const auto& [m, r] : terms_) out.terms_[m] = r * s;
  return out;
}

CYPolynomial CYPolynomial::diff_y() const {
  CYPolynomial out;
  for (const auto& [m, r] : terms_) {
    if (m.y_exp == 0) continue;
    out.terms_[{m.c_exp, m.y_exp - 1}] = r * Rational(m.y_exp);
  }
  return out;
}

CYPolynomial CYPolynomial::double_integrate_zero_ic() const {
  CYPolynomial out;
  for (const auto& [m, r] : terms_) {
    const long i = m.y_exp;
    out.terms_[{m.c_exp, m.y_exp + 2}] = r / Rational((i + 1) * (i + 2));
  }
  return out;
}

YPolynomial CYPolynomial::specialize_c(const Rational& c_value) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(deg_y() + 1, 0)));
  for (const auto& [m, r] : terms_) {
    out[m.y_exp] += r * c_value.pow(static_cast<unsigned>(m.c_exp));
  }
  return YPolynomial(std::move(out));
}

Rational CYPolynomial::evaluate(const Rational& c_value, const Rational& y) const {
  Rational acc(0);
  for (const auto& [m, r] : terms_) {
    acc += r * c_value.pow(static_cast<unsigned>(m.c_exp)) * y.pow(static_cast<unsigned>(m.y_exp));
  }
  return acc;
}

bool CYPolynomial::odd_in_y() const {
  for (const auto& [m, r] : terms_) {
    if (m.y_exp % 2 == 0) return false;
  }
  return true;
}

std::string CYPolynomial::str() const {
  if (terms_.empty()) return "0";
  // Descending y-degree, then descending c-degree.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.y_exp != b.first.y_exp) return a.first.y_exp > b.first.y_exp;
    return a.first.c_exp > b.first.c_exp;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : ordered) {
    const Rational mag = r.abs();
    if (first) {
      if (r.sign() < 0) os << "-";
      first = false;
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    const bool has_vars = m.c_exp > 0 || m.y_exp > 0;
    const bool unit = (mag == Rational(1)) && has_vars;
    bool emitted = false;
    if (!unit) {
      if (mag.denominator() == 1) os << mag.str();
      else os << "(" << mag.str() << ")";
      emitted = true;
    }
    if (m.c_exp > 0) {
      if (emitted) os << "*";
      os << "c";
      if (m.c_exp > 1) os << "^" << m.c_exp;
      emitted = true;
    }
    if (m.y_exp > 0) {
      if (emitted) os << "*";
      os << "y";
      if (m.y_exp > 1) os << "^" << m.y_exp;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CYPolynomial& p) { return os << p.str(); }

}  // namespace zmc
