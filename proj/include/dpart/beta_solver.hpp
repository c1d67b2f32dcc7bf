// Solves the tilting equation  int_0^t u e^{-bu}/(1+e^{-bu}) du = 1  for the
// saddle parameter beta(t), and evaluates the derived quantities beta'(t),
// the growth constant B(t), the amplitude envelope A(t), and the oscillating
// coefficient A_n(t).
//
// beta < 0 for sqrt(2) < t < 2, beta = 0 at t = 2, beta > 0 for t > 2; the
// equation's integral is evaluated through its closed dilogarithm forms,
// with a Taylor series taking over near beta*t = 0 where the dilogarithm
// expressions cancel.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dpart/bound_ratio.hpp"
#include "dpart/special_functions.hpp"

namespace dpart {

// Thrown when an iteration fails to converge or an internal numeric
// cross-check disagrees.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// beta(t) is defined on (sqrt(2), inf) but diverges to -inf at the left
// endpoint; everything below this cutoff is rejected.
inline constexpr double kMinT = std::numbers::sqrt2 + 1e-3;

struct BetaSolution {
  double t = 0;
  double beta = 0;        // saddle parameter, sign(beta) = sign(t - 2)
  double beta_prime = 0;  // d beta / dt, always > 0
  double big_b = 0;       // B(t) = 2 beta + t log(1+e^{-beta t})
  double amplitude = 0;   // A(t) = cosh(beta t / 2) sqrt(beta'/(pi t))
  double residual = 0;    // |g(beta) - 1| at convergence
  int iterations = 0;
};

namespace detail {

// g(beta) = int_0^t u/(1+e^{beta u}) du, strictly decreasing in beta.
// Closed forms: with z = beta t,
//   beta > 0:  g = [Li2(1-e^{-z}) - Li2(1-e^{-2z})/2] / beta^2
//   beta < 0:  g = [-pi^2/12 + z^2/2 - z log(1+e^z) - Li2(-e^z)] / beta^2
// and the |z| <= 0.1 window uses the Taylor series of int_0^z u/(1+e^u) du
// to avoid the cancellation both closed forms suffer there.
inline double tilt_integral(double beta, double t) {
  double z = beta * t;
  if (std::fabs(z) <= 0.1) {
    // int_0^z u/(1+e^u) du = z^2/4 - z^3/12 + z^5/240 - z^7/3360 + 17 z^9/725760 - ...
    // divided by beta^2; next omitted term is below 2e-16 for |z| <= 0.1.
    double t2 = t * t;
    return t2 / 4.0 - beta * t2 * t / 12.0 +
           beta * beta * beta * t2 * t2 * t / 240.0 -
           std::pow(beta, 5) * std::pow(t, 7) / 3360.0 +
           17.0 * std::pow(beta, 7) * std::pow(t, 9) / 725760.0;
  }
  if (beta > 0.0) {
    double x1 = -std::expm1(-z);        // 1 - e^{-z}
    double x2 = -std::expm1(-2.0 * z);  // 1 - e^{-2z}
    return (li2(x1) - 0.5 * li2(x2)) / (beta * beta);
  }
  double zp = -z;  // = gamma * t > 0
  double bracket = -kPi * kPi / 12.0 + 0.5 * zp * zp +
                   zp * std::log1p(std::exp(-zp)) - li2(-std::exp(-zp));
  return bracket / (beta * beta);
}

inline double beta_prime_at(double beta, double t) {
  if (std::fabs(t - 2.0) <= 1e-4) {
    // Local branch: beta = 3/t - 12/t^3 + O(beta^3 t^2) near t = 2, so the
    // direct quotient (which loses ~8 digits there) is replaced by its
    // derivative, exactly 3/2 at t = 2.
    double t2 = t * t;
    return -3.0 / t2 + 36.0 / (t2 * t2);
  }
  return beta * t / (2.0 * (1.0 + std::exp(beta * t)) - t * t);
}

}  // namespace detail

// Root of g(beta) = 1 by bracketed bisection interleaved with regula falsi
// steps; g is strictly decreasing, so a sign change in [-50, 2] is
// guaranteed on the admissible t range.
inline BetaSolution solve_beta(double t) {
  if (!(t >= kMinT))
    throw std::domain_error(
        "solve_beta: t must be >= sqrt(2)+1e-3 (beta diverges below)");

  double lo = -50.0, hi = 2.0;
  double g_lo = detail::tilt_integral(lo, t) - 1.0;
  double g_hi = detail::tilt_integral(hi, t) - 1.0;
  if (!(g_lo > 0.0) || !(g_hi < 0.0))
    throw ConvergenceError("solve_beta: initial bracket does not straddle");

  double best = 0.5 * (lo + hi);
  double g_best = detail::tilt_integral(best, t) - 1.0;
  int iter = 0;
  for (; iter < 200; ++iter) {
    double c;
    if (iter % 2 == 0 || g_lo == g_hi) {
      c = 0.5 * (lo + hi);
    } else {
      c = lo + g_lo * (hi - lo) / (g_lo - g_hi);  // regula falsi
      if (!(c > lo && c < hi)) c = 0.5 * (lo + hi);
    }
    double g_c = detail::tilt_integral(c, t) - 1.0;
    if (std::fabs(g_c) < std::fabs(g_best)) {
      best = c;
      g_best = g_c;
    }
    if (std::fabs(g_c) <= 1e-13) break;
    if (g_c > 0.0) {
      lo = c;
      g_lo = g_c;
    } else {
      hi = c;
      g_hi = g_c;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(c))) break;
  }

  BetaSolution sol;
  sol.t = t;
  sol.beta = best;
  sol.residual = std::fabs(g_best);
  sol.iterations = iter + 1;
  if (sol.residual > 1e-12)
    throw ConvergenceError("solve_beta: residual " +
                           std::to_string(sol.residual) + " above 1e-12 at t=" +
                           std::to_string(t));

  sol.beta_prime = detail::beta_prime_at(sol.beta, t);
  if (!(sol.beta_prime > 0.0))
    throw ConvergenceError("solve_beta: beta'(t) not positive");
  double z = sol.beta * t;
  sol.big_b = 2.0 * sol.beta + t * log1p_exp(-z);
  sol.amplitude = std::cosh(0.5 * z) * std::sqrt(sol.beta_prime / (kPi * t));

  // Same amplitude through the simplified radical; the two routes must
  // agree to 1e-10. Skipped inside the t = 2 window where both the
  // numerator and denominator of the radical vanish.
  if (std::fabs(t - 2.0) > 1e-4) {
    double denom = 2.0 - t * t / (1.0 + std::exp(z));
    double alt = 0.5 * std::sqrt(sol.beta * (1.0 + std::exp(-z)) /
                                 (kPi * denom));
    if (std::fabs(alt - sol.amplitude) > 1e-10 * std::max(1.0, sol.amplitude))
      throw ConvergenceError("solve_beta: amplitude cross-check failed at t=" +
                             std::to_string(t));
  }
  return sol;
}

inline double beta_prime(double t) { return solve_beta(t).beta_prime; }

inline double big_B(double t) { return solve_beta(t).big_b; }

inline double amplitude(double t) { return solve_beta(t).amplitude; }

// A_n(t) = A(t) (1+e^{-beta t})^{-{t sqrt n}}, the n-dependent oscillating
// coefficient; the fractional part goes through the exact rational path
// when t carries one.
inline double a_n(const BoundRatio& t, std::int64_t n) {
  BetaSolution sol = solve_beta(t.value());
  double frac = t.frac_sqrt(n);
  return sol.amplitude * std::exp(-frac * log1p_exp(-sol.beta * sol.t));
}

}  // namespace dpart
