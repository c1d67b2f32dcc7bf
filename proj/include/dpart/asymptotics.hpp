// Assembles the main asymptotic estimate
//   d_t(n) ~ A_n(t) n^{-3/4} e^{B(t) sqrt(n)},
// the saddle function f_n(y) and its derivative, the defect of the
// saddle-point expansion of log(x^{-n} D_{t,n}(x)), the Hardy-Ramanujan
// comparison for unrestricted distinct-parts counts, and the limit-shape
// curve of typical constrained partitions.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpart/beta_solver.hpp"
#include "dpart/bound_ratio.hpp"
#include "dpart/exact_count.hpp"

namespace dpart {

struct AsymptoticEstimate {
  std::int64_t n = 0;
  double t_value = 0;
  std::int64_t L = 0;
  double frac = 0;          // {t sqrt n}
  double log_estimate = 0;  // ln A_n(t) - (3/4) ln n + B(t) sqrt n
  double estimate = 0;      // exp(log_estimate), +inf when unrepresentable
  std::int64_t exact_digits = 0;          // decimal digits of d_t(n), 0 if absent
  std::optional<double> log_exact;        // ln d_t(n)
  std::optional<double> ratio_to_exact;   // d_t(n) / estimate
  std::string error;                      // per-entry resource failure, if any
};

inline AsymptoticEstimate estimate_dt(std::int64_t n, const BoundRatio& t) {
  if (n < 1) throw std::domain_error("estimate_dt: n must be >= 1");
  BetaSolution sol = solve_beta(t.value());
  AsymptoticEstimate est;
  est.n = n;
  est.t_value = t.value();
  est.L = t.floor_sqrt(n);
  est.frac = t.frac_sqrt(n);
  double log_a_n = std::log(sol.amplitude) -
                   est.frac * log1p_exp(-sol.beta * sol.t);
  est.log_estimate = log_a_n - 0.75 * std::log(double(n)) +
                     sol.big_b * std::sqrt(double(n));
  est.estimate = std::exp(est.log_estimate);
  return est;
}

// ln of the Hardy-Ramanujan main term for d(n).
inline double log_hardy_ramanujan_d(std::int64_t n) {
  if (n < 1) throw std::domain_error("hardy_ramanujan_d: n must be >= 1");
  return kPi * std::sqrt(double(n) / 3.0) -
         std::log(4.0 * std::pow(3.0, 0.25)) - 0.75 * std::log(double(n));
}

inline double hardy_ramanujan_d(std::int64_t n) {
  return std::exp(log_hardy_ramanujan_d(n));
}

struct SaddleEval {
  double y = 0;
  double f_n_value = 0;  // y + log D_{t,n}(e^{-y/sqrt n}) / sqrt n
  double f_n_prime = 0;  // 1 - (1/n) sum k x^k/(1+x^k)
};

inline SaddleEval saddle_eval(const BoundRatio& t, std::int64_t n, double y) {
  if (n < 1) throw std::domain_error("saddle_eval: n must be >= 1");
  SaddleEval ev;
  ev.y = y;
  double sqrt_n = std::sqrt(double(n));
  ev.f_n_value = y + log_D(t, n, y) / sqrt_n;
  std::int64_t L = t.floor_sqrt(n);
  double sum = 0.0;
  for (std::int64_t k = 1; k <= L; ++k) {
    sum += double(k) / (1.0 + std::exp(y * double(k) / sqrt_n));
  }
  ev.f_n_prime = 1.0 - sum / double(n);
  return ev;
}

// Difference between log(x^{-n} D_{t,n}(x)) at the saddle and its expansion
//   B(t) sqrt n + ln sqrt((1+e^{-beta t})/2) - ln(1+e^{-beta t}) {t sqrt n};
// tends to 0 as n grows, and vanishes identically at t = 2.
inline double prop1_defect(const BoundRatio& t, std::int64_t n) {
  BetaSolution sol = solve_beta(t.value());
  double sqrt_n = std::sqrt(double(n));
  double lhs = sol.beta * sqrt_n + log_D(t, n, sol.beta);
  double log_opef = log1p_exp(-sol.beta * sol.t);  // ln(1+e^{-beta t})
  double rhs = sol.big_b * sqrt_n + 0.5 * (log_opef - std::numbers::ln2) -
               log_opef * t.frac_sqrt(n);
  return lhs - rhs;
}

// Limit-shape curve f_t(x) = (1/beta) ln((1+e^{-beta x})/(1+e^{-beta t}))
// on [0, t]; at beta ~ 0 the 0/0 resolves to the straight line (t-x)/2.
inline double limit_shape(double t, double x) {
  BetaSolution sol = solve_beta(t);
  if (x < 0.0 || x > t)
    throw std::domain_error("limit_shape: x must lie in [0, t]");
  if (std::fabs(sol.beta) < 1e-8) return (t - x) / 2.0;
  return (log1p_exp(-sol.beta * x) - log1p_exp(-sol.beta * t)) / sol.beta;
}

// Estimate vs exact count across an n-grid; exact-count resource failures
// are recorded per entry rather than aborting the sweep.
inline std::vector<AsymptoticEstimate> compare_sweep(
    const BoundRatio& t, const std::vector<std::int64_t>& n_list,
    std::uint64_t work_budget = kDefaultWorkBudget) {
  std::vector<AsymptoticEstimate> out;
  out.reserve(n_list.size());
  for (std::int64_t n : n_list) {
    AsymptoticEstimate est = estimate_dt(n, t);
    try {
      mpz_class count = d_t(n, t, work_budget);
      est.exact_digits = std::int64_t(count.get_str().size());
      est.log_exact = log_mpz(count);
      est.ratio_to_exact = std::exp(*est.log_exact - est.log_estimate);
    } catch (const ResourceError& e) {
      est.error = e.what();
    }
    out.push_back(est);
  }
  return out;
}

}  // namespace dpart
