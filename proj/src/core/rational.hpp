#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "status.hpp"

namespace edgecone {

// Exact rational arithmetic on int64, overflow-checked. The topology-side
// formulas never need anything bigger (p up to 1e4 gives numerators ~ 1e8).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
    normalize();
  }

  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  double value() const { return double(num) / double(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

private:
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::internal, "rational overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::internal, "rational overflow");
    return r;
  }

public:
  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(checked_add(checked_mul(x.num, y.den), checked_mul(y.num, x.den)),
                    checked_mul(x.den, y.den));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return x + Rational(-y.num, y.den);
  }
  friend Rational operator-(const Rational& x) { return Rational(-x.num, x.den); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(checked_mul(x.num, y.num), checked_mul(x.den, y.den));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) fail(errc::invalid_argument, "rational division by zero");
    return Rational(checked_mul(x.num, y.den), checked_mul(x.den, y.num));
  }
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return checked_mul(x.num, y.den) < checked_mul(y.num, x.den);
  }
  friend bool operator<=(const Rational& x, const Rational& y) { return x < y || x == y; }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) { return y <= x; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

// Cone angle parameter carried exactly when supplied as p/q; equality-style
// conclusions downstream are only asserted in the exact case.
struct BetaValue {
  Rational exact{1, 1};
  double approx = 1.0;
  bool is_exact = true;

  static BetaValue from_rational(std::int64_t p, std::int64_t q) {
    BetaValue b;
    b.exact = Rational(p, q);
    b.approx = b.exact.value();
    b.is_exact = true;
    if (b.approx <= 0.0) fail(errc::invalid_argument, "beta must be positive");
    return b;
  }
  static BetaValue from_double(double v) {
    if (!(v > 0.0)) fail(errc::invalid_argument, "beta must be positive");
    BetaValue b;
    b.approx = v;
    b.is_exact = false;
    return b;
  }
};

}  // namespace edgecone
