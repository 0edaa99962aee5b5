#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace edgecone {

// Degree-2 truncated Taylor series ("2-jet") in N variables.
//
// Metric families are given in closed form; evaluating their components on
// Jet values produces the exact first and second coordinate derivatives that
// the Levi-Civita pipeline needs, with no finite-difference noise. The
// Hessian block is stored as the upper triangle of a symmetric N x N matrix.
template <int N>
struct Jet {
  static constexpr int nhess = N * (N + 1) / 2;

  double v = 0.0;
  std::array<double, N> d{};
  std::array<double, nhess> h{};

  Jet() = default;
  Jet(double value) : v(value) {}

  static constexpr int hidx(int i, int j) {
    if (i > j) { const int t = i; i = j; j = t; }
    // row-major upper triangle
    return i * N - i * (i - 1) / 2 + (j - i);
  }

  double hess(int i, int j) const { return h[hidx(i, j)]; }

  // independent variable number `i` with value x
  static Jet variable(int i, double x) {
    Jet j(x);
    j.d[i] = 1.0;
    return j;
  }
};

template <int N>
inline Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  for (int i = 0; i < Jet<N>::nhess; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

template <int N>
inline Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  for (int i = 0; i < Jet<N>::nhess; ++i) r.h[i] = a.h[i] - b.h[i];
  return r;
}

template <int N>
inline Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  for (int i = 0; i < Jet<N>::nhess; ++i) r.h[i] = -a.h[i];
  return r;
}

template <int N>
inline Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      const int k = Jet<N>::hidx(i, j);
      r.h[k] = a.h[k] * b.v + a.d[i] * b.d[j] + a.d[j] * b.d[i] + a.v * b.h[k];
    }
  return r;
}

// compose with scalar function: f(u), given f(u.v), f'(u.v), f''(u.v)
template <int N>
inline Jet<N> compose(const Jet<N>& u, double f0, double f1, double f2) {
  Jet<N> r(f0);
  for (int i = 0; i < N; ++i) r.d[i] = f1 * u.d[i];
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      const int k = Jet<N>::hidx(i, j);
      r.h[k] = f2 * u.d[i] * u.d[j] + f1 * u.h[k];
    }
  return r;
}

template <int N>
inline Jet<N> inv(const Jet<N>& u) {
  const double w = 1.0 / u.v;
  return compose(u, w, -w * w, 2.0 * w * w * w);
}

template <int N>
inline Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) { return a * inv(b); }

template <int N> inline Jet<N> operator+(const Jet<N>& a, double s) { Jet<N> r = a; r.v += s; return r; }
template <int N> inline Jet<N> operator+(double s, const Jet<N>& a) { return a + s; }
template <int N> inline Jet<N> operator-(const Jet<N>& a, double s) { Jet<N> r = a; r.v -= s; return r; }
template <int N> inline Jet<N> operator-(double s, const Jet<N>& a) { return (-a) + s; }

template <int N>
inline Jet<N> operator*(const Jet<N>& a, double s) {
  Jet<N> r(a.v * s);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * s;
  for (int i = 0; i < Jet<N>::nhess; ++i) r.h[i] = a.h[i] * s;
  return r;
}
template <int N> inline Jet<N> operator*(double s, const Jet<N>& a) { return a * s; }
template <int N> inline Jet<N> operator/(const Jet<N>& a, double s) { return a * (1.0 / s); }
template <int N> inline Jet<N> operator/(double s, const Jet<N>& a) { return inv(a) * s; }

template <int N> inline Jet<N> sqrt(const Jet<N>& u) {
  const double s = std::sqrt(u.v);
  return compose(u, s, 0.5 / s, -0.25 / (s * u.v));
}
template <int N> inline Jet<N> exp(const Jet<N>& u) {
  const double e = std::exp(u.v);
  return compose(u, e, e, e);
}
// exp(u) - 1, accurate near 0
template <int N> inline Jet<N> expm1(const Jet<N>& u) {
  const double e = std::exp(u.v);
  return compose(u, std::expm1(u.v), e, e);
}
template <int N> inline Jet<N> log(const Jet<N>& u) {
  const double w = 1.0 / u.v;
  return compose(u, std::log(u.v), w, -w * w);
}
template <int N> inline Jet<N> sin(const Jet<N>& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, s, c, -s);
}
template <int N> inline Jet<N> cos(const Jet<N>& u) {
  const double s = std::sin(u.v), c = std::cos(u.v);
  return compose(u, c, -s, -c);
}
template <int N> inline Jet<N> sinh(const Jet<N>& u) {
  const double s = std::sinh(u.v), c = std::cosh(u.v);
  return compose(u, s, c, s);
}
template <int N> inline Jet<N> cosh(const Jet<N>& u) {
  const double s = std::sinh(u.v), c = std::cosh(u.v);
  return compose(u, c, s, c);
}
// u^p for constant exponent, u > 0
template <int N> inline Jet<N> pow(const Jet<N>& u, double p) {
  const double f0 = std::pow(u.v, p);
  return compose(u, f0, p * f0 / u.v, p * (p - 1.0) * f0 / (u.v * u.v));
}

using Jet2 = Jet<2>;
using Jet4 = Jet<4>;

}  // namespace edgecone
