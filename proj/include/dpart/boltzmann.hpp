// The tilted product measure on bounded distinct-parts partitions: each part
// k <= t sqrt(n) is present independently with probability x^k/(1+x^k) at
// x = e^{-beta/sqrt(n)}, making the partition size N a sum of independent
// scaled Bernoullis with mean ~ n.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dpart/beta_solver.hpp"
#include "dpart/bound_ratio.hpp"
#include "dpart/exact_count.hpp"

namespace dpart {

struct BoltzmannModel {
  BoundRatio t;
  std::int64_t n = 0;
  std::int64_t L = 0;   // floor(t sqrt n)
  double beta = 0;
  double x = 0;         // e^{-beta/sqrt(n)}
  std::vector<double> p;  // p[k] = x^k/(1+x^k), index 0 unused
  double mean_N = 0;    // sum k p[k]
  double var_N = 0;     // sum k^2 p[k](1-p[k])
};

inline BoltzmannModel build_model(const BoundRatio& t, std::int64_t n) {
  if (n < 1) throw std::domain_error("build_model: n must be >= 1");
  BetaSolution sol = solve_beta(t.value());
  double inv_sqrt_n = 1.0 / std::sqrt(double(n));
  BoltzmannModel model{t,
                       n,
                       t.floor_sqrt(n),
                       sol.beta,
                       std::exp(-sol.beta * inv_sqrt_n),
                       {},
                       0.0,
                       0.0};
  model.p.assign(std::size_t(model.L) + 1, 0.0);
  double mean = 0.0, var = 0.0;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    double pk = 1.0 / (1.0 + std::exp(sol.beta * double(k) * inv_sqrt_n));
    model.p[std::size_t(k)] = pk;
    mean += double(k) * pk;
    var += double(k) * double(k) * pk * (1.0 - pk);
  }
  model.mean_N = mean;
  model.var_N = var;
  return model;
}

// Leading term of Var(N): t / ((1+e^{beta t}) beta'(t)) * n^{3/2}.
inline double variance_asymptotic(double t, std::int64_t n) {
  BetaSolution sol = solve_beta(t);
  double z = sol.beta * t;
  return t / ((1.0 + std::exp(z)) * sol.beta_prime) * std::pow(double(n), 1.5);
}

// Counter-based generator (splitmix64). The sampling stream is documented
// and fixed: one 53-bit unit draw per part k = 1..L, in increasing k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_unit() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Pure Boltzmann draw (no conditioning on |lambda| = n) from any unit-
// interval source; part k is included iff the k-th draw is < p[k].
template <class UnitSource>
Partition sample_with(const BoltzmannModel& model, UnitSource&& draw) {
  Partition out;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    if (draw() < model.p[std::size_t(k)]) {
      out.parts.push_back(k);
      out.size += k;
    }
  }
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

inline Partition sample(const BoltzmannModel& model, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_with(model, [&rng] { return rng.next_unit(); });
}

// Rejection to exact size n; expected cost 1/P(N=n), about n^{3/4} draws.
// Returns the partition and the number of attempts consumed.
inline std::pair<Partition, std::int64_t> sample_exact_size(
    const BoltzmannModel& model, std::uint64_t seed,
    std::int64_t max_attempts = 1'000'000) {
  SplitMix64 rng(seed);
  for (std::int64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    Partition cand = sample_with(model, [&rng] { return rng.next_unit(); });
    if (cand.size == model.n) return {std::move(cand), attempt};
  }
  throw ConvergenceError("sample_exact_size: no hit within attempt budget");
}

// P(N = n) = d_t(n) x^n / D_{t,n}(x), assembled in log space; the count has
// hundreds of digits at desk scale, so its log comes from the big-integer
// mantissa + bit length.
inline double prob_N_exact(const BoltzmannModel& model,
                           std::uint64_t work_budget = kDefaultWorkBudget) {
  mpz_class count = d_t(model.n, model.t, work_budget);
  double log_count = log_mpz(count);
  double sqrt_n = std::sqrt(double(model.n));
  double log_p = log_count - model.beta * sqrt_n -
                 log_D(model.t, model.n, model.beta);
  return std::exp(log_p);
}

// Exact third and fourth cumulants of N (Bernoulli cumulant sums); used to
// track skewness o(sigma^3) and kurtosis o(sigma^4).
inline double third_cumulant(const BoltzmannModel& model) {
  double sum = 0.0;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    double pk = model.p[std::size_t(k)];
    sum += std::pow(double(k), 3) * pk * (1.0 - pk) * (1.0 - 2.0 * pk);
  }
  return sum;
}

inline double fourth_cumulant(const BoltzmannModel& model) {
  double sum = 0.0;
  for (std::int64_t k = 1; k <= model.L; ++k) {
    double pk = model.p[std::size_t(k)];
    double q = pk * (1.0 - pk);
    sum += std::pow(double(k), 4) * q * (1.0 - 6.0 * q);
  }
  return sum;
}

// Empirical summary of sampled sizes; moments are central.
struct SampleStats {
  std::int64_t count = 0;
  double mean = 0;
  double variance = 0;
  std::int64_t hits_at_n = 0;  // samples with |lambda| = n
  double third_moment = 0;
  double fourth_moment = 0;
};

inline SampleStats summarize_sizes(std::span<const std::int64_t> sizes,
                                   std::int64_t n) {
  if (sizes.empty()) throw std::domain_error("summarize_sizes: empty input");
  SampleStats stats;
  stats.count = std::int64_t(sizes.size());
  double mean = 0.0;
  for (auto s : sizes) mean += double(s);
  mean /= double(stats.count);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (auto s : sizes) {
    double d = double(s) - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
    if (s == n) ++stats.hits_at_n;
  }
  stats.mean = mean;
  stats.variance = m2 / double(stats.count);
  stats.third_moment = m3 / double(stats.count);
  stats.fourth_moment = m4 / double(stats.count);
  return stats;
}

}  // namespace dpart
