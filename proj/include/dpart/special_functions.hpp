// Real dilogarithm and small numeric helpers shared by the analytic modules.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dpart {

inline constexpr double kPi = std::numbers::pi;

namespace detail {

// Power series Li2(x) = sum_{n>=1} x^n / n^2, for |x| <= 1/2.
inline double li2_series(double x) {
  double sum = 0.0;
  double pow_x = x;
  for (int n = 1; n <= 200; ++n) {
    double term = pow_x / (double(n) * double(n));
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    pow_x *= x;
  }
  return sum;
}

}  // namespace detail

// Li2(x) = -int_0^x log(1-w)/w dw on the principal branch, restricted to
// real x <= 1. Series inside |x| <= 1/2; reflection, Landen and inversion
// transforms map everything else into the series disc. Relative error
// is a few ulp, comfortably below the 1e-13 contract.
inline double li2(double x) {
  if (!(x <= 1.0)) throw std::domain_error("li2: argument must be <= 1");
  if (x == 1.0) return kPi * kPi / 6.0;
  if (x == 0.0) return 0.0;
  if (x > 0.5) {
    // reflection: Li2(x) + Li2(1-x) = pi^2/6 - log(x) log(1-x)
    return kPi * kPi / 6.0 - std::log(x) * std::log1p(-x) -
           detail::li2_series(1.0 - x);
  }
  if (x >= -0.5) return detail::li2_series(x);
  if (x >= -1.0) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2, x/(x-1) in (1/3, 1/2]
    double u = x / (x - 1.0);
    double l = std::log1p(-x);
    return -detail::li2_series(u) - 0.5 * l * l;
  }
  // inversion: Li2(x) = -pi^2/6 - log^2(-x)/2 - Li2(1/x), 1/x in (-1, 0)
  double l = std::log(-x);
  return -kPi * kPi / 6.0 - 0.5 * l * l - li2(1.0 / x);
}

// Fractional part {a} = a - floor(a) for a >= 0. Inputs within 1e-9 of an
// integer snap to fractional part 0: t*sqrt(n) for rational t and square n
// must come out exact despite floating rounding. Callers needing exactness
// for rational t use the integer path in exact_count instead.
inline double frac_part(double alpha) {
  if (alpha < 0.0) throw std::domain_error("frac_part: argument must be >= 0");
  if (std::fabs(alpha - std::nearbyint(alpha)) <= 1e-9) return 0.0;
  return alpha - std::floor(alpha);
}

// log(1 + e^w) without overflow for large |w|.
inline double log1p_exp(double w) {
  if (w > 0.0) return w + std::log1p(std::exp(-w));
  return std::log1p(std::exp(w));
}

}  // namespace dpart
