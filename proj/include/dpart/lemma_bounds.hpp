// Numeric certificates for the two logarithmic-series lemmas: the cubic
// remainder bound |f_x(s)| <= c x|s|^3/(1-x)^3 on the Bernoulli factor log,
// and the Weyl-type lower bound inf sum_{k<=n} ||k alpha||^2 >> n.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dpart/exact_count.hpp"

namespace dpart {

// f_x(s) = log((1+x e^{is})/(1+x)) - is x/(1+x) + s^2/2 * x/(1+x)^2.
// The log argument stays in the right half-plane for x < 1, so the
// principal branch is the analytic one.
inline std::complex<double> f_x(double x, double s) {
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("f_x: x must lie in (0,1)");
  std::complex<double> ratio(1.0 + x * std::cos(s), x * std::sin(s));
  std::complex<double> value =
      std::log(ratio / (1.0 + x)) -
      std::complex<double>(0.0, s * x / (1.0 + x)) +
      std::complex<double>(0.5 * s * s * x / ((1.0 + x) * (1.0 + x)), 0.0);
  return value;
}

// |f_x(s)| (1-x)^3 / (x |s|^3), the quantity the lemma bounds by a constant.
inline double remainder_ratio(double x, double s) {
  if (s == 0.0) throw std::domain_error("remainder_ratio: s must be != 0");
  double cube = std::fabs(s) * std::fabs(s) * std::fabs(s);
  double om = (1.0 - x);
  return std::abs(f_x(x, s)) * om * om * om / (x * cube);
}

inline double lemma1_max_ratio(const std::vector<double>& x_grid,
                               const std::vector<double>& s_grid) {
  double best = 0.0;
  for (double x : x_grid) {
    for (double s : s_grid) {
      best = std::max(best, remainder_ratio(x, s));
    }
  }
  return best;
}

// Canonical grids: x = 0.01..0.99 step 0.01, s = +-logspace(1e-4, pi, 200).
inline std::vector<double> lemma1_x_grid() {
  std::vector<double> xs;
  for (int i = 1; i <= 99; ++i) xs.push_back(double(i) / 100.0);
  return xs;
}

inline std::vector<double> lemma1_s_grid(int points_per_sign = 200) {
  std::vector<double> ss;
  double lo = std::log(1e-4), hi = std::log(kPi);
  for (int i = 0; i < points_per_sign; ++i) {
    double s = std::exp(lo + (hi - lo) * double(i) /
                                 double(points_per_sign - 1));
    ss.push_back(s);
    ss.push_back(-s);
  }
  return ss;
}

// Distance to the nearest integer.
inline double dist_to_int(double y) {
  return std::fabs(y - std::nearbyint(y));
}

// f_n(alpha) = sum_{k<=n} ||k alpha||^2, summed exactly term by term.
inline double weyl_sum(std::int64_t n, double alpha) {
  if (n < 1) throw std::domain_error("weyl_sum: n must be >= 1");
  double sum = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    double d = dist_to_int(double(k) * alpha);
    sum += d * d;
  }
  return sum;
}

struct Lemma2Result {
  double alpha_min = 0;
  double value = 0;
};

// Minimizes f_n over [eps/n, 1/2]. f_n is piecewise a single upward
// parabola between consecutive half-integer multiples m/(2k), and its
// minimum occurs at a rational; the candidate set is therefore all
// rationals a/b with b <= n in range, the piece breakpoints, each piece's
// quadratic vertex, and the interval endpoints. Vertices guard against
// aliasing when the rational minimum sits between grid candidates.
inline Lemma2Result lemma2_min(std::int64_t n, double eps,
                               std::int64_t n_budget = 2000) {
  if (n < 1) throw std::domain_error("lemma2_min: n must be >= 1");
  if (!(eps > 0.0 && eps <= 0.5))
    throw std::domain_error("lemma2_min: eps must lie in (0, 1/2]");
  if (n > n_budget)
    throw ResourceError("lemma2_min: n exceeds candidate-set budget");

  double lo = eps / double(n), hi = 0.5;
  std::vector<double> candidates{lo, hi};

  // rationals a/b, b <= n
  for (std::int64_t b = 1; b <= n; ++b) {
    std::int64_t a_lo = std::int64_t(std::ceil(lo * double(b) - 1e-12));
    std::int64_t a_hi = std::int64_t(std::floor(hi * double(b) + 1e-12));
    for (std::int64_t a = std::max<std::int64_t>(a_lo, 1); a <= a_hi; ++a) {
      double alpha = double(a) / double(b);
      if (alpha >= lo && alpha <= hi) candidates.push_back(alpha);
    }
  }

  // breakpoints m/(2k) with m odd: where some ||k alpha|| kinks
  std::vector<double> breaks{lo, hi};
  for (std::int64_t k = 1; k <= n; ++k) {
    for (std::int64_t m = 1; m <= k; m += 2) {
      double alpha = double(m) / double(2 * k);
      if (alpha > lo && alpha < hi) breaks.push_back(alpha);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // per-piece parabola vertex: alpha* = sum k l_k / sum k^2 with
  // l_k = round(k alpha_mid)
  double sum_k2 = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) sum_k2 += double(k) * double(k);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double mid = 0.5 * (breaks[i] + breaks[i + 1]);
    double sum_kl = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
      sum_kl += double(k) * std::nearbyint(double(k) * mid);
    }
    double vertex = sum_kl / sum_k2;
    if (vertex >= breaks[i] && vertex <= breaks[i + 1]) {
      candidates.push_back(vertex);
    }
  }

  Lemma2Result best;
  best.value = std::numeric_limits<double>::infinity();
  for (double alpha : candidates) {
    double v = weyl_sum(n, alpha);
    if (v < best.value) {
      best.value = v;
      best.alpha_min = alpha;
    }
  }
  return best;
}

}  // namespace dpart
