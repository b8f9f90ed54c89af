#include "zmc/certify.hpp"

#include "zmc/cy_polynomial.hpp"
#include "zmc/util.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zmc {

namespace {

// All certificate quantities are O(1)..O(1e2); a fixed absolute-ish slack of
// 1e-9 absorbs double rounding without masking a real violation.
constexpr double kSlack = 1e-9;

bool leq_slack(double lhs, double rhs) {
  return lhs <= rhs + kSlack * std::max(1.0, std::abs(rhs));
}

struct FloatPolys {
  std::vector<std::vector<double>> b, db, ddb;  // b_k, b_k', b_k'' at c
};

FloatPolys specialize_all(const CoefficientTable& table, const Rational& c) {
  FloatPolys fp;
  const int n = table.order();
  fp.b.reserve(static_cast<std::size_t>(n) + 1);
  fp.db.reserve(static_cast<std::size_t>(n) + 1);
  fp.ddb.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const YPolynomial p = table.b(k).specialize_c(c);
    fp.b.push_back(p.float_coeffs());
    fp.db.push_back(p.derivative().float_coeffs());
    fp.ddb.push_back(p.derivative().derivative().float_coeffs());
  }
  return fp;
}

}  // namespace

double integral_closed_form(double t, double a) {
  if (!(t > 0.0) || !(t < 0.5 * a))
    throw std::domain_error("integral_closed_form needs 0 < t < a/2");
  const double a3 = a * a * a;
  return (2.0 / a3) *
         (a * (a - 2.0 * t) / (t * (a - t)) + 2.0 * std::log((a - t) / t));
}

double tau_profile(double t) {
  return 2.0 * (1.0 - 2.0 * t) / (1.0 - t) + 4.0 * t * std::log((1.0 - t) / t);
}

double compute_tau() {
  const double t_star = golden_section_max(tau_profile, 1e-6, 0.5 - 1e-6, 1e-9);
  return tau_profile(t_star) + 1e-6;
}

CertConstants compute_constants(double c, double delta) {
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  CertConstants out;
  out.c = c;
  out.delta = delta;
  out.tau = compute_tau();
  const double cubic_branch = 144.0 * c * out.tau * std::pow(delta, 1.5);
  const double quartic_branch = std::pow(192.0 * c * c * out.tau, 0.25);
  out.M = 3.0 * std::max(cubic_branch, quartic_branch);
  out.C = delta * out.M;
  out.theta0 = (3.0 / c) * std::pow(delta * out.M, 3.0);
  return out;
}

std::vector<PerKResult> check_proposition_bounds(const CoefficientTable& table,
                                                 const Rational& c, double M,
                                                 const std::vector<double>& ys) {
  const FloatPolys fp = specialize_all(table, c);
  const double cd = c.to_double();
  std::vector<PerKResult> out;
  for (int l = 3; l <= table.order(); ++l) {
    const auto lu = static_cast<std::size_t>(l);
    const double lstar = 0.5 * (l - 1) - 2.0;
    const double Ml3 = std::pow(M, l - 3);
    PerKResult row{l, true, std::numeric_limits<double>::infinity()};
    auto check = [&row](double lhs, double rhs) {
      row.worst_margin = std::min(row.worst_margin, rhs - lhs);
      if (!leq_slack(lhs, rhs)) row.passed = false;
    };
    for (const double y : ys) {
      const double ay = std::abs(y);
      check(std::abs(horner(fp.ddb[lu], y)), cd * std::pow(ay, lstar) * Ml3);
      check(std::abs(horner(fp.db[lu], y)),
            3.0 * cd * std::pow(ay, lstar + 1.0) * Ml3 / (lstar + 2.0));
      check(std::abs(horner(fp.b[lu], y)),
            3.0 * cd * std::pow(ay, lstar + 2.0) * Ml3 /
                ((lstar + 2.0) * (lstar + 2.0)));
    }
    // y = 0: the b'' bound blows up for l <= 4 and is checked nowhere; the
    // b' and b bounds stay finite and must hold (both sides vanish, l >= 4).
    check(std::abs(horner(fp.db[lu], 0.0)),
          3.0 * cd * std::pow(0.0, lstar + 1.0) * Ml3 / (lstar + 2.0));
    check(std::abs(horner(fp.b[lu], 0.0)),
          3.0 * cd * std::pow(0.0, lstar + 2.0) * Ml3 /
              ((lstar + 2.0) * (lstar + 2.0)));
    out.push_back(row);
  }
  return out;
}

std::vector<PerKResult> check_estimation_targets(const CoefficientTable& table,
                                                 const Rational& c, double M,
                                                 const std::vector<double>& ys) {
  const double cd = c.to_double();
  std::vector<PerKResult> out;
  for (int k = 4; k <= table.order(); ++k) {
    const std::vector<double> pk = table.source_P(k).specialize_c(c).float_coeffs();
    const std::vector<double> qk = table.source_Q(k).specialize_c(c).float_coeffs();
    const std::vector<double> rk = table.source_R(k).specialize_c(c).float_coeffs();
    const double kstar = 0.5 * (k - 1) - 2.0;
    const double Mk3 = std::pow(M, k - 3);
    PerKResult row{k, true, std::numeric_limits<double>::infinity()};
    for (const double y : ys) {
      const double target = (cd / 3.0) * std::pow(std::abs(y), kstar) * Mk3;
      for (const auto* poly : {&pk, &qk, &rk}) {
        const double lhs = k * std::abs(horner(*poly, y));
        row.worst_margin = std::min(row.worst_margin, target - lhs);
        if (!leq_slack(lhs, target)) row.passed = false;
      }
    }
    out.push_back(row);
  }
  return out;
}

std::vector<PerKResult> check_uniform_bound(const CoefficientTable& table,
                                            const Rational& c, double theta0,
                                            double C_const,
                                            const std::vector<double>& ys,
                                            int k_from) {
  std::vector<PerKResult> out;
  for (int k = std::max(k_from, 0); k <= table.order(); ++k) {
    const std::vector<double> bk = table.b(k).specialize_c(c).float_coeffs();
    const double rhs = theta0 * std::pow(C_const, k);
    PerKResult row{k, true, std::numeric_limits<double>::infinity()};
    for (const double y : ys) {
      const double lhs = std::abs(horner(bk, y));
      row.worst_margin = std::min(row.worst_margin, rhs - lhs);
      if (!leq_slack(lhs, rhs)) row.passed = false;
    }
    out.push_back(row);
  }
  return out;
}

LemmaSumIntResult check_lemma_sum_int(int k, int p) {
  if (p < 0 || k < p + 4)
    throw std::invalid_argument("lemma sum needs p >= 0 and k >= p + 4");
  LemmaSumIntResult r;
  r.k = k;
  r.p = p;
  const double k3 = static_cast<double>(k) * k * k;
  for (int q = 2; q <= k - p - 2; ++q) {
    const double qq = q;
    const double rest = k - p - q;
    r.lhs += k3 / (qq * qq * rest * rest);
  }
  r.rhs = integral_closed_form(1.0 / k, 1.0 - static_cast<double>(p) / k);
  r.passed = leq_slack(r.lhs, r.rhs);
  return r;
}

LemmaSum2Result check_lemma_sum_2(int k, double tau) {
  if (k < 7) throw std::invalid_argument("double-sum lemma needs k >= 7");
  LemmaSum2Result r;
  r.k = k;
  const double k2 = static_cast<double>(k) * k;
  for (int p = 2; p <= k - 5; ++p)
    for (int q = 2; q <= k - p - 2; ++q) {
      const double pp = p, qq = q, rest = k - p - q;
      r.lhs += k2 / (pp * pp * qq * qq * rest * rest);
    }
  r.mid = (6.0 / k) * integral_closed_form(1.0 / k, 1.0);
  r.bound = 6.0 * tau;
  r.passed = leq_slack(r.lhs, r.mid) && leq_slack(r.mid, r.bound);
  return r;
}

CertificationReport run_certification(const CoefficientTable& table,
                                      const Rational& c, double delta,
                                      int y_samples, std::uint64_t seed,
                                      int lemma_k_max) {
  if (y_samples < 1) throw std::invalid_argument("need at least one y sample");
  if (lemma_k_max < 7) throw std::invalid_argument("lemma sweep needs k_max >= 7");

  CertificationReport r;
  r.c_str = c.str();
  r.delta = delta;
  r.order = table.order();
  r.y_samples = y_samples;
  r.seed = seed;

  const CertConstants cc = compute_constants(c.to_double(), delta);
  r.c = cc.c;
  r.tau = cc.tau;
  r.M = cc.M;
  r.C = cc.C;
  r.theta0 = cc.theta0;
  r.x_certified = 1.0 / cc.C;

  const std::vector<double> ys = sample_ys(delta, y_samples, seed);
  r.proposition = check_proposition_bounds(table, c, cc.M, ys);
  r.estimation = check_estimation_targets(table, c, cc.M, ys);
  r.uniform = check_uniform_bound(table, c, cc.theta0, cc.C, ys, 3);
  for (const auto& row : r.uniform) {
    if (row.passed) {
      r.first_uniform_k = row.k;
      break;
    }
  }

  r.lemma_sum_int.k_max = lemma_k_max;
  r.lemma_sum_int.all_passed = true;
  r.lemma_sum_int.worst_margin = std::numeric_limits<double>::infinity();
  for (int k = 4; k <= lemma_k_max; ++k) {
    for (int p = 0; p <= k - 4; ++p) {
      const LemmaSumIntResult one = check_lemma_sum_int(k, p);
      ++r.lemma_sum_int.cases_checked;
      if (!one.passed) r.lemma_sum_int.all_passed = false;
      if (one.rhs - one.lhs < r.lemma_sum_int.worst_margin) {
        r.lemma_sum_int.worst_margin = one.rhs - one.lhs;
        r.lemma_sum_int.worst_k = k;
        r.lemma_sum_int.worst_p = p;
      }
    }
  }

  r.lemma_sum_2.k_max = lemma_k_max;
  r.lemma_sum_2.all_passed = true;
  r.lemma_sum_2.worst_margin = std::numeric_limits<double>::infinity();
  for (int k = 7; k <= lemma_k_max; ++k) {
    const LemmaSum2Result one = check_lemma_sum_2(k, cc.tau);
    ++r.lemma_sum_2.cases_checked;
    if (!one.passed) r.lemma_sum_2.all_passed = false;
    // The binding link in this chain is mid <= 6 tau.
    if (one.bound - one.mid < r.lemma_sum_2.worst_margin) {
      r.lemma_sum_2.worst_margin = one.bound - one.mid;
      r.lemma_sum_2.worst_k = k;
    }
  }

  r.all_passed = r.lemma_sum_int.all_passed && r.lemma_sum_2.all_passed;
  for (const auto& row : r.proposition) r.all_passed = r.all_passed && row.passed;
  for (const auto& row : r.estimation) r.all_passed = r.all_passed && row.passed;
  for (const auto& row : r.uniform)
    if (row.k >= 7) r.all_passed = r.all_passed && row.passed;
  return r;
}

std::string report_to_json(const CertificationReport& r) {
  nlohmann::ordered_json j;
  j["inputs"] = {{"c", r.c_str},
                 {"c_float", r.c},
                 {"delta", r.delta},
                 {"order", r.order},
                 {"y_samples", r.y_samples},
                 {"seed", r.seed}};
  j["constants"] = {{"tau", r.tau},
                    {"M", r.M},
                    {"C", r.C},
                    {"theta0", r.theta0},
                    {"x_certified", r.x_certified}};
  auto rows = [](const std::vector<PerKResult>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : v)
      arr.push_back({{"k", row.k},
                     {"passed", row.passed},
                     {"worst_margin", row.worst_margin}});
    return arr;
  };
  j["proposition_bounds"] = rows(r.proposition);
  j["estimation_targets"] = rows(r.estimation);
  j["uniform_bound"] = {{"first_k", r.first_uniform_k}, {"rows", rows(r.uniform)}};
  auto sweep = [](const LemmaSweepSummary& s, bool with_p) {
    nlohmann::ordered_json o = {{"k_max", s.k_max},
                                {"cases_checked", s.cases_checked},
                                {"all_passed", s.all_passed},
                                {"worst_margin", s.worst_margin},
                                {"worst_k", s.worst_k}};
    if (with_p) o["worst_p"] = s.worst_p;
    return o;
  };
  j["lemma_sum_int"] = sweep(r.lemma_sum_int, true);
  j["lemma_sum_2"] = sweep(r.lemma_sum_2, false);
  j["all_passed"] = r.all_passed;
  return j.dump(2);
}

}  // namespace zmc
