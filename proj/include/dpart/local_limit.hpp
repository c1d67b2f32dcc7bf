// Local limit machinery for the partition-size variable N: its
// characteristic function phi(s) = prod (1+x^k e^{isk})/(1+x^k), pointwise
// Gaussian convergence, exact Fourier inversion of P(N=n) on the
// trigonometric-polynomial grid, and the Gaussian-domination and tail
// profiles of |phi|.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dpart/boltzmann.hpp"
#include "dpart/exact_count.hpp"

namespace dpart {

inline constexpr std::int64_t kDefaultFourierBudget = 4'000'000;

// ln |phi(s)|, accumulated factor by factor; branch bookkeeping is moot for
// the modulus. Returns -inf when a factor vanishes exactly (x^k = 1 and
// e^{isk} = -1), where phi is genuinely zero.
inline double log_abs_char_fn(const BoltzmannModel& model, double s) {
  double inv_sqrt_n = 1.0 / std::sqrt(double(model.n));
  double sum = 0.0;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    double xk = std::exp(-model.beta * double(k) * inv_sqrt_n);
    double c = std::cos(s * double(k));
    double num2 = 1.0 + 2.0 * xk * c + xk * xk;  // |1 + x^k e^{isk}|^2
    if (num2 <= 0.0) return -std::numeric_limits<double>::infinity();
    sum += 0.5 * std::log(num2) - std::log1p(xk);
  }
  return sum;
}

// phi(s) = E e^{isN}, assembled as exp of a sum of per-factor logs so that
// thousand-factor products cannot underflow midway.
inline std::complex<double> char_fn(const BoltzmannModel& model, double s) {
  double inv_sqrt_n = 1.0 / std::sqrt(double(model.n));
  double log_abs = 0.0;
  double arg = 0.0;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    double xk = std::exp(-model.beta * double(k) * inv_sqrt_n);
    double re = 1.0 + xk * std::cos(s * double(k));
    double im = xk * std::sin(s * double(k));
    double num2 = re * re + im * im;
    if (num2 <= 0.0) return {0.0, 0.0};
    log_abs += 0.5 * std::log(num2) - std::log1p(xk);
    arg += std::atan2(im, re);
  }
  return std::polar(std::exp(log_abs), arg);
}

// |phi(u/sigma) e^{-inu/sigma} - e^{-u^2/2}|, the pointwise CLT defect.
inline double clt_pointwise_error(const BoltzmannModel& model, double u) {
  if (u == 0.0) return 0.0;
  double sigma = std::sqrt(model.var_N);
  double s = u / sigma;
  std::complex<double> rotated =
      char_fn(model, s) * std::polar(1.0, -double(model.n) * s);
  return std::abs(rotated - std::complex<double>(std::exp(-0.5 * u * u), 0.0));
}

// Mean of phi(s_j) e^{-ins_j} over the uniform grid s_j = 2 pi j / M with
// M = L(L+1)/2 + 1. The integrand is a trigonometric polynomial of degree
// at most L(L+1)/2, so the grid average equals the Fourier integral exactly
// (up to rounding) -- this is P(N=n) computed without any counts.
inline std::complex<double> fourier_invert_mean(
    const BoltzmannModel& model,
    std::int64_t budget = kDefaultFourierBudget) {
  std::int64_t M = model.L * (model.L + 1) / 2 + 1;
  if (M > budget)
    throw ResourceError("fourier_invert: grid size " + std::to_string(M) +
                        " exceeds budget " + std::to_string(budget));
  // n beyond the polynomial degree: P(N=n) = 0, and the mod-M grid would
  // alias onto P(N = n-M) instead
  if (model.n >= M) return {0.0, 0.0};
  std::complex<double> sum = 0.0;
  for (std::int64_t j = 0; j < M; ++j) {
    double s = 2.0 * kPi * double(j) / double(M);
    sum += char_fn(model, s) * std::polar(1.0, -double(model.n) * s);
  }
  return sum / double(M);
}

inline double fourier_invert(const BoltzmannModel& model,
                             std::int64_t budget = kDefaultFourierBudget) {
  return fourier_invert_mean(model, budget).real();
}

// ln|phi(v/sqrt n)| / (sqrt(n) v^2) for each grid v; all values sit below
// some -A < 0 on the Gaussian-domination range.
inline std::vector<double> gaussian_domination_profile(
    const BoltzmannModel& model, const std::vector<double>& v_grid) {
  std::vector<double> out;
  out.reserve(v_grid.size());
  double sqrt_n = std::sqrt(double(model.n));
  for (double v : v_grid) {
    if (v == 0.0)
      throw std::domain_error("gaussian_domination_profile: v must be != 0");
    out.push_back(log_abs_char_fn(model, v / sqrt_n) / (sqrt_n * v * v));
  }
  return out;
}

// max over the grid of ln|phi(w)| / sqrt(n); strictly negative maxima
// certify that the tail arc of the inversion integral dies off.
inline double tail_smallness(const BoltzmannModel& model,
                             const std::vector<double>& w_grid) {
  if (w_grid.empty()) throw std::domain_error("tail_smallness: empty grid");
  double sqrt_n = std::sqrt(double(model.n));
  double best = -std::numeric_limits<double>::infinity();
  for (double w : w_grid) {
    best = std::max(best, log_abs_char_fn(model, w) / sqrt_n);
  }
  return best;
}

// Exact measure weight P(N = m) from the count table (table must reach m).
inline double exact_point_weight(const BoltzmannModel& model,
                                 const CountTable& table, std::int64_t m,
                                 double log_d) {
  double log_w = log_mpz(table.counts[std::size_t(m)]) -
                 model.beta * double(m) / std::sqrt(double(model.n)) - log_d;
  return std::exp(log_w);
}

// Exact CDF P(N <= m) by summing the measure weights of the count table.
inline double exact_cdf(const BoltzmannModel& model, const CountTable& table,
                        std::int64_t m) {
  if (m >= std::int64_t(table.counts.size()))
    throw std::domain_error("exact_cdf: table too short");
  double log_d = log_D(model.t, model.n, model.beta);
  double sum = 0.0;
  for (std::int64_t j = 0; j <= m; ++j) {
    if (table.counts[std::size_t(j)] == 0) continue;
    sum += exact_point_weight(model, table, j, log_d);
  }
  return sum;
}

}  // namespace dpart
