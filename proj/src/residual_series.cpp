#include "zmc/residual_series.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace zmc {

namespace {

// Cauchy-product machinery over x-coefficient families. Works for any
// polynomial type with zero default construction, +, -, * and scaled().
template <typename Poly>
std::vector<Poly> conv(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Poly> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

template <typename Poly>
std::vector<Poly> fam_add(std::vector<Poly> a, const std::vector<Poly>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

template <typename Poly>
std::vector<Poly> fam_sub(std::vector<Poly> a, const std::vector<Poly>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

template <typename Poly>
std::vector<Poly> fam_scale(std::vector<Poly> a, const Rational& s) {
  for (auto& p : a) p = p.scaled(s);
  return a;
}

// The five partial-derivative families of the truncated solution
// f = b_0 + sum_{k=3}^{N} b_k x^k / k, each indexed by power of x.
template <typename Poly>
struct PartialFamilies {
  std::vector<Poly> fy;   // size N+1; fy[0] = 1
  std::vector<Poly> Y;    // fy with the constant removed
  std::vector<Poly> fx;   // fx[j] = b_{j+1}, size N
  std::vector<Poly> fxx;  // fxx[j] = (j+1) b_{j+2}, size N-1
  std::vector<Poly> fxy;  // fxy[j] = b'_{j+1}, size N
  std::vector<Poly> fyy;  // fyy[k] = b''_k / k, size N+1
};

struct SymbolicOps {
  using Poly = CYPolynomial;
  static Poly at(const CoefficientTable& t, int k) { return t.b(k); }
  static Poly diff(const Poly& p) { return p.diff_y(); }
  static Poly one() { return CYPolynomial::constant(Rational(1)); }
};

struct SpecializedOps {
  using Poly = YPolynomial;
  const Rational& c;
  Poly at(const CoefficientTable& t, int k) const { return t.b(k).specialize_c(c); }
  static Poly diff(const Poly& p) { return p.derivative(); }
  static Poly one() { return YPolynomial({Rational(1)}); }
};

template <typename Ops>
PartialFamilies<typename Ops::Poly> partial_families(const CoefficientTable& table,
                                                     const Ops& ops) {
  using Poly = typename Ops::Poly;
  const int n = table.order();
  PartialFamilies<Poly> f;
  std::vector<Poly> b(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) b[static_cast<std::size_t>(k)] = ops.at(table, k);

  f.fy.resize(static_cast<std::size_t>(n) + 1);
  f.Y.resize(static_cast<std::size_t>(n) + 1);
  f.fyy.resize(static_cast<std::size_t>(n) + 1);
  f.fy[0] = Ops::diff(b[0]);  // = 1 for the seeded family
  for (int k = 1; k <= n; ++k) {
    const Poly dbk = Ops::diff(b[static_cast<std::size_t>(k)]).scaled(Rational(1L, k));
    f.fy[static_cast<std::size_t>(k)] = dbk;
    f.Y[static_cast<std::size_t>(k)] = dbk;
    f.fyy[static_cast<std::size_t>(k)] = Ops::diff(dbk);
  }
  f.fyy[0] = Ops::diff(f.fy[0]);

  f.fx.resize(static_cast<std::size_t>(n));
  f.fxy.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    f.fx[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j) + 1];
    f.fxy[static_cast<std::size_t>(j)] = Ops::diff(b[static_cast<std::size_t>(j) + 1]);
  }
  f.fxx.resize(n >= 1 ? static_cast<std::size_t>(n) - 1 : 0);
  for (int j = 0; j + 2 <= n; ++j)
    f.fxx[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j) + 2].scaled(Rational(j + 1));
  return f;
}

template <typename Ops>
std::pair<std::vector<typename Ops::Poly>, std::vector<typename Ops::Poly>>
residual_families(const CoefficientTable& table, const Ops& ops) {
  using Poly = typename Ops::Poly;
  const PartialFamilies<Poly> f = partial_families(table, ops);

  const auto Y_fxx = conv(f.Y, f.fxx);
  const auto fx_fxy = conv(f.fx, f.fxy);
  const auto ptilde = fam_scale(fam_sub(Y_fxx, fx_fxy), Rational(2));
  const auto q = fam_sub(conv(conv(f.Y, f.Y), f.fxx),
                         fam_scale(conv(fx_fxy, f.Y), Rational(2)));
  const auto r = conv(conv(f.fx, f.fx), f.fyy);
  const auto combined = fam_sub(fam_sub(fam_sub(f.fyy, ptilde), q), r);

  std::vector<Poly> unit = {ops.one()};
  const auto one_minus_fy2 = fam_sub(unit, conv(f.fy, f.fy));
  const auto one_minus_fx2 = fam_sub(unit, conv(f.fx, f.fx));
  auto direct = fam_add(conv(one_minus_fy2, f.fxx),
                        fam_scale(conv(conv(f.fx, f.fy), f.fxy), Rational(2)));
  direct = fam_add(std::move(direct), conv(one_minus_fx2, f.fyy));

  return {combined, direct};
}

}  // namespace

ResidualDecomposition residual_decomposition(const CoefficientTable& table) {
  const SymbolicOps ops;
  const PartialFamilies<CYPolynomial> f = partial_families(table, ops);

  ResidualDecomposition d;
  d.Y = f.Y;
  d.f_yy = f.fyy;
  const auto Y_fxx = conv(f.Y, f.fxx);
  const auto fx_fxy = conv(f.fx, f.fxy);
  d.Ptilde = fam_scale(fam_sub(Y_fxx, fx_fxy), Rational(2));
  d.Q = fam_sub(conv(conv(f.Y, f.Y), f.fxx),
                fam_scale(conv(fx_fxy, f.Y), Rational(2)));
  d.R = conv(conv(f.fx, f.fx), f.fyy);
  auto [combined, direct] = residual_families(table, ops);
  d.combined = std::move(combined);
  d.direct = std::move(direct);
  return d;
}

ResidualVerdict residual_symbolic(const CoefficientTable& table) {
  const auto [combined, direct] = residual_families(table, SymbolicOps{});

  ResidualVerdict v;
  v.order = table.order();
  v.first_nonzero = -1;
  for (std::size_t k = 0; k < combined.size(); ++k) {
    if (!combined[k].is_zero()) {
      v.first_nonzero = static_cast<int>(k);
      v.first_nonzero_poly = combined[k].str();
      break;
    }
  }
  v.zero_through_order = (v.first_nonzero < 0 || v.first_nonzero > v.order);

  // Both assemblies end at x-degree 3N-2, so the families line up index
  // by index.
  v.identity_ok = (combined.size() == direct.size());
  for (std::size_t k = 0; v.identity_ok && k < combined.size(); ++k)
    if (!(combined[k] == direct[k])) v.identity_ok = false;
  return v;
}

ResidualPolynomial::ResidualPolynomial(const CoefficientTable& table,
                                       const Rational& c_value)
    : order_(table.order()) {
  const SpecializedOps ops{c_value};
  auto [combined, direct] = residual_families(table, ops);
  (void)combined;
  coeffs_ = std::move(direct);
  float_coeffs_.reserve(coeffs_.size());
  for (const auto& p : coeffs_) float_coeffs_.push_back(p.float_coeffs());
}

int ResidualPolynomial::first_nonzero() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

const YPolynomial& ResidualPolynomial::coefficient(int k) const {
  return coeffs_.at(static_cast<std::size_t>(k));
}

double ResidualPolynomial::evaluate(double x, double y) const {
  double acc = 0.0;
  for (auto it = float_coeffs_.rbegin(); it != float_coeffs_.rend(); ++it)
    acc = acc * x + horner(*it, y);
  return acc;
}

Rational ResidualPolynomial::evaluate_exact(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->evaluate(y);
  return acc;
}

}  // namespace zmc
