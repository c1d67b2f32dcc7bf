// The largest-part bound coefficient t, kept either as an exact rational
// p/q or as a double. The rational form gives exact integer arithmetic for
// floor(t*sqrt(n)) and {t*sqrt(n)}; the oscillatory amplitude factor is
// sensitive to off-by-one floor errors, so exactness matters here.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dpart/special_functions.hpp"

namespace dpart {

class BoundRatio {
 public:
  // Bare doubles go through the float path with 1e-9 integer snapping.
  BoundRatio(double t) : value_(t) {  // NOLINT: implicit by design
    if (!(t > 0.0)) throw std::domain_error("BoundRatio: t must be positive");
  }

  static BoundRatio rational(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0)
      throw std::domain_error("BoundRatio: p/q must be positive");
    BoundRatio r(double(p) / double(q));
    r.rational_ = true;
    r.num_ = p;
    r.den_ = q;
    return r;
  }

  // Accepts "p/q" (exact) or a plain decimal (float path).
  static BoundRatio parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      std::int64_t p = std::stoll(text.substr(0, slash));
      std::int64_t q = std::stoll(text.substr(slash + 1));
      return rational(p, q);
    }
    return BoundRatio(std::stod(text));
  }

  double value() const { return value_; }
  bool is_rational() const { return rational_; }

  // floor(t*sqrt(n)). Rational path: largest k with k^2 q^2 <= p^2 n,
  // i.e. floor(isqrt(p^2 n) / q), all in exact integer arithmetic.
  std::int64_t floor_sqrt(std::int64_t n) const {
    if (n < 0) throw std::domain_error("BoundRatio: n must be >= 0");
    if (rational_) {
      mpz_class p2n = mpz_class(num_) * num_ * n;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), p2n.get_mpz_t());
      mpz_class k = s / den_;
      return k.get_si();
    }
    double y = value_ * std::sqrt(double(n));
    if (std::fabs(y - std::nearbyint(y)) <= 1e-9)
      return std::int64_t(std::llround(y));
    return std::int64_t(std::floor(y));
  }

  // {t*sqrt(n)}. Exact 0 when t*sqrt(n) is an integer; exact (s mod q)/q
  // when p^2 n is a perfect square.
  double frac_sqrt(std::int64_t n) const {
    if (rational_) {
      mpz_class p2n = mpz_class(num_) * num_ * n;
      mpz_class s, rem;
      mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), p2n.get_mpz_t());
      if (rem == 0) {
        mpz_class m = s % den_;
        return m.get_d() / double(den_);
      }
      double y = value_ * std::sqrt(double(n));
      double f = y - double(floor_sqrt(n));
      if (f < 0.0) f = 0.0;
      if (f >= 1.0) f = std::nextafter(1.0, 0.0);
      return f;
    }
    double y = value_ * std::sqrt(double(n));
    return frac_part(y);
  }

 private:
  double value_;
  bool rational_ = false;
  std::int64_t num_ = 0, den_ = 1;
};

}  // namespace dpart
