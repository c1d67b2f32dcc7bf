#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "dpart/local_limit.hpp"
#include "support/oracles.hpp"

using dpart::BoundRatio;
using dpart::build_model;
using dpart::char_fn;
using dpart::clt_pointwise_error;
using dpart::fourier_invert;
using dpart::fourier_invert_mean;
using dpart::kPi;
using dpart::prob_N_exact;

TEST_CASE("characteristic function basics", "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 900);
  CHECK(std::abs(char_fn(model, 0.0) - std::complex<double>(1.0, 0.0)) <=
        1e-13);
  // N is integer valued, so phi has period 2 pi
  CHECK(std::abs(char_fn(model, 2.0 * kPi) - std::complex<double>(1.0, 0.0)) <=
        1e-10);
  for (int i = -40; i <= 40; ++i) {
    double s = kPi * double(i) / 40.0;
    CHECK(std::abs(char_fn(model, s)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("pointwise CLT error is small and shrinking", "[local_limit]") {
  auto coarse = build_model(BoundRatio(3.0), 1000);
  auto fine = build_model(BoundRatio(3.0), 10000);
  CHECK(clt_pointwise_error(fine, 0.0) == 0.0);
  double worst = 0.0;
  for (int i = -60; i <= 60; ++i) {
    worst = std::max(worst, clt_pointwise_error(fine, double(i) / 20.0));
  }
  CHECK(worst <= 0.05);  // calibrated 0.017 at (3, 1e4)
  CHECK(clt_pointwise_error(coarse, 1.0) > clt_pointwise_error(fine, 1.0));
}

TEST_CASE("Fourier inversion equals the exact probability", "[local_limit]") {
  // two independent exact computations of P(N=n): trigonometric-polynomial
  // grid average vs big-integer count
  struct Pair {
    BoundRatio t;
    std::int64_t n;
  };
  std::vector<Pair> pairs = {{BoundRatio::rational(2, 1), 400},
                             {BoundRatio(1.7), 300},
                             {BoundRatio(3.0), 500},
                             {BoundRatio::rational(2, 1), 10000}};
  for (const auto& pr : pairs) {
    auto model = build_model(pr.t, pr.n);
    double via_grid = fourier_invert(model);
    double via_count = prob_N_exact(model);
    CHECK(std::fabs(via_grid / via_count - 1.0) <= 1e-9);
    CHECK(std::fabs(fourier_invert_mean(model).imag()) <= 1e-10);
  }
}

TEST_CASE("Fourier inversion against exhaustive enumeration",
          "[local_limit]") {
  auto model = build_model(BoundRatio::rational(2, 1), 16);
  double x = model.x;
  double D = 1.0;
  for (std::int64_t k = 1; k <= model.L; ++k) D *= 1.0 + std::pow(x, double(k));
  double weight = 0.0;
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::int64_t sum = 0;
    for (int k = 0; k < 8; ++k) {
      if (mask & (1u << k)) sum += k + 1;
    }
    if (sum == 16) weight += std::pow(x, 16.0);
  }
  CHECK(fourier_invert(model) == Catch::Approx(weight / D).epsilon(1e-12));
}

TEST_CASE("inversion grid budget", "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 10000);  // M = 45151
  CHECK_THROWS_AS(fourier_invert(model, /*budget=*/1000), dpart::ResourceError);
}

TEST_CASE("impossible sizes invert to exactly zero", "[local_limit]") {
  // t=1.42, n=7: L=3, so no distinct-parts partition reaches 7
  auto model = build_model(BoundRatio(1.42), 7);
  REQUIRE(model.L == 3);
  CHECK(fourier_invert(model) == 0.0);
  CHECK(prob_N_exact(model) == 0.0);
}

TEST_CASE("log-space product equals the direct product", "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 25);  // L = 15
  for (double s : {0.3, 1.0, 2.2, -1.7, 3.1}) {
    std::complex<double> direct = 1.0;
    for (std::int64_t k = 1; k <= model.L; ++k) {
      double xk = std::pow(model.x, double(k));
      direct *= std::complex<double>(1.0 + xk * std::cos(s * double(k)),
                                     xk * std::sin(s * double(k))) /
                (1.0 + xk);
    }
    CHECK(std::abs(char_fn(model, s) - direct) <= 1e-13);
  }
}

TEST_CASE("Gaussian domination profile", "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 10000);
  std::vector<double> grid;
  for (double v = 0.01; v <= 0.3; v += 0.01) grid.push_back(v);
  auto profile = dpart::gaussian_domination_profile(model, grid);
  for (double value : profile) CHECK(value < 0.0);

  // even in v
  auto plus = dpart::gaussian_domination_profile(model, {0.17});
  auto minus = dpart::gaussian_domination_profile(model, {-0.17});
  CHECK(plus[0] == Catch::Approx(minus[0]).epsilon(1e-14));

  // t=2 small-v limit: ln|phi| ~ 2 sqrt(n) (1/v) int_0^v ln cos = -(1/3) sqrt(n) v^2
  auto fair = build_model(BoundRatio::rational(2, 1), 10000);
  auto small = dpart::gaussian_domination_profile(fair, {0.01});
  CHECK(small[0] == Catch::Approx(-1.0 / 3.0).epsilon(0.05));

  CHECK_THROWS_AS(dpart::gaussian_domination_profile(model, {0.0}),
                  std::domain_error);
}

TEST_CASE("tail of |phi| dies uniformly", "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 2500);
  double w_lo = 0.3 / std::sqrt(2500.0);
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) {
    grid.push_back(w_lo + (kPi - w_lo) * double(i) / 200.0);
  }
  double max_ratio = dpart::tail_smallness(model, grid);
  CHECK(max_ratio <= -0.01);  // calibrated -0.061
  CHECK(std::abs(char_fn(model, kPi)) < 1.0);

  // doubling the grid only refines the max upward
  std::vector<double> denser = grid;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    denser.push_back(0.5 * (grid[i] + grid[i + 1]));
  }
  CHECK(dpart::tail_smallness(model, denser) >= max_ratio - 1e-12);
}

TEST_CASE("exact CDF of (N-n)/sigma approaches the normal law",
          "[local_limit]") {
  auto model = build_model(BoundRatio(3.0), 10000);
  double sigma = std::sqrt(model.var_N);
  std::int64_t m_hi = std::int64_t(10000.0 + 2.5 * sigma) + 10;
  auto table = dpart::build_table(model.L, m_hi);
  for (int v = -2; v <= 2; ++v) {
    double cdf = dpart::exact_cdf(
        model, table, std::int64_t(10000.0 + double(v) * sigma));
    CHECK(std::fabs(cdf - oracles::normal_cdf(double(v))) <= 0.02);
  }
}
