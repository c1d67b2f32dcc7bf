// Exact arbitrary-precision counting of distinct-parts partitions with a
// bounded largest part: the coefficient table of prod_{k<=L} (1+x^k), the
// restricted counts d_t(n), the unrestricted d(n), and the log of the
// generating polynomial on the positive axis.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpart/bound_ratio.hpp"

namespace dpart {

// Thrown when a computation would exceed its configured work budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap on coefficient updates in build_table (~2 minutes of desk
// work at the far end); overridable per call and via the CLI.
inline constexpr std::uint64_t kDefaultWorkBudget = std::uint64_t(1) << 31;

// A partition into strictly decreasing positive parts.
struct Partition {
  std::vector<std::int64_t> parts;  // decreasing
  std::int64_t size = 0;            // sum of parts
};

// counts[m] = number of subsets of {1..L} with sum m, i.e. distinct-parts
// partitions of m with every part <= L. Immutable after construction.
struct CountTable {
  std::int64_t bound = 0;  // L
  std::vector<mpz_class> counts;

  std::int64_t max_index() const {
    return std::int64_t(counts.size()) - 1;
  }
};

// Dynamic program over k = 1..L; counts[m] += counts[m-k] with m running
// downward so each part is used at most once. Exact.
inline CountTable build_table(std::int64_t L, std::int64_t n_max,
                              std::uint64_t work_budget = kDefaultWorkBudget) {
  if (L < 1) throw std::domain_error("build_table: L must be >= 1");
  if (n_max < 0) throw std::domain_error("build_table: n_max must be >= 0");
  std::uint64_t work = std::uint64_t(L) * std::uint64_t(n_max);
  if (work > work_budget)
    throw ResourceError("build_table: L*n_max = " + std::to_string(work) +
                        " exceeds work budget " + std::to_string(work_budget));
  CountTable table;
  table.bound = L;
  table.counts.assign(std::size_t(n_max) + 1, mpz_class(0));
  table.counts[0] = 1;
  for (std::int64_t k = 1; k <= L; ++k) {
    for (std::int64_t m = n_max; m >= k; --m) {
      table.counts[std::size_t(m)] += table.counts[std::size_t(m - k)];
    }
  }
  return table;
}

// d_t(n): distinct-parts partitions of n with largest part <= t*sqrt(n).
inline mpz_class d_t(std::int64_t n, const BoundRatio& t,
                     std::uint64_t work_budget = kDefaultWorkBudget) {
  if (n < 1) throw std::domain_error("d_t: n must be >= 1");
  std::int64_t L = t.floor_sqrt(n);
  if (L < 1) return 0;
  return build_table(L, n, work_budget).counts[std::size_t(n)];
}

// d(n): all distinct-parts partitions of n (parts above n never contribute).
inline mpz_class d_unrestricted(std::int64_t n,
                                std::uint64_t work_budget =
                                    kDefaultWorkBudget) {
  if (n < 0) throw std::domain_error("d_unrestricted: n must be >= 0");
  if (n == 0) return 1;
  return build_table(n, n, work_budget).counts[std::size_t(n)];
}

// Log-space variant of build_table for sweeps past the big-integer budget:
// entry m holds ln(counts[m]), -inf where the count is zero. Absolute error
// grows like the number of log-add rounding steps (~1e-13 at desk scale);
// never used where exactness matters.
inline std::vector<double> build_table_log(std::int64_t L, std::int64_t n_max) {
  if (L < 1) throw std::domain_error("build_table_log: L must be >= 1");
  if (n_max < 0) throw std::domain_error("build_table_log: n_max must be >= 0");
  const double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> log_counts(std::size_t(n_max) + 1, neg_inf);
  log_counts[0] = 0.0;
  auto log_add = [](double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
  };
  for (std::int64_t k = 1; k <= L; ++k) {
    for (std::int64_t m = n_max; m >= k; --m) {
      log_counts[std::size_t(m)] =
          log_add(log_counts[std::size_t(m)], log_counts[std::size_t(m - k)]);
    }
  }
  return log_counts;
}

// log D_{t,n}(x) at x = e^{-y/sqrt(n)}: sum_{k<=t sqrt n} log(1+e^{-yk/sqrt n}),
// summed directly with no truncation.
inline double log_D(const BoundRatio& t, std::int64_t n, double y) {
  if (n < 1) throw std::domain_error("log_D: n must be >= 1");
  std::int64_t L = t.floor_sqrt(n);
  double inv_sqrt_n = 1.0 / std::sqrt(double(n));
  double sum = 0.0;
  for (std::int64_t k = 1; k <= L; ++k) {
    sum += log1p_exp(-y * double(k) * inv_sqrt_n);
  }
  return sum;
}

// Natural log of a positive big integer from its top 64 bits plus bit
// length; keeps ~15 significant digits. -inf for zero.
inline double log_mpz(const mpz_class& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + double(exp2) * std::numbers::ln2;
}

}  // namespace dpart
