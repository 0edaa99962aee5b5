#pragma once

#include <array>
#include <cmath>

#include "status.hpp"

namespace edgecone {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

struct Mat3 {
  std::array<std::array<double, 3>, 3> a{};
  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m(i, i) = 1.0;
    return m;
  }
  double trace() const { return a[0][0] + a[1][1] + a[2][2]; }
  double frob_sq() const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += a[i][j] * a[i][j];
    return s;
  }
  double det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }
  double max_asymmetry() const {
    double m = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m = std::max(m, std::fabs(a[i][j] - a[j][i]));
    return m;
  }
};

inline Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

inline double dot(const Mat3& x, const Mat3& y) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += x(i, j) * y(i, j);
  return s;
}

struct Mat4 {
  std::array<std::array<double, 4>, 4> a{};
  double& operator()(int i, int j) { return a[i][j]; }
  double operator()(int i, int j) const { return a[i][j]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
  double max_abs() const {
    double m = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m = std::max(m, std::fabs(a[i][j]));
    return m;
  }
};

// Cholesky factor of a symmetric matrix, L lower triangular, g = L L^T.
// The matrix is equilibrated to unit diagonal first, so the pivot test
// measures genuine degeneracy rather than coordinate scaling; a scaled pivot
// below 1e-13 signals a chart evaluated outside its valid domain.
inline Mat4 cholesky(const Mat4& g) {
  double s[4];
  for (int i = 0; i < 4; ++i) {
    if (!(g(i, i) > 0.0))
      fail(errc::non_positive_definite, "cholesky: non-positive diagonal entry");
    s[i] = 1.0 / std::sqrt(g(i, i));
  }
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = g(i, j) * s[i] * s[j];

  Mat4 L;
  for (int j = 0; j < 4; ++j) {
    double p = a(j, j);
    for (int k = 0; k < j; ++k) p -= L(j, k) * L(j, k);
    if (!(p > 1e-13))
      fail(errc::non_positive_definite, "cholesky: matrix not positive definite");
    L(j, j) = std::sqrt(p);
    for (int i = j + 1; i < 4; ++i) {
      double t = a(i, j);
      for (int k = 0; k < j; ++k) t -= L(i, k) * L(j, k);
      L(i, j) = t / L(j, j);
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) L(i, j) /= s[i];
  return L;
}

inline double det_from_cholesky(const Mat4& L) {
  const double d = L(0, 0) * L(1, 1) * L(2, 2) * L(3, 3);
  return d * d;
}

// inverse of symmetric positive definite matrix via its Cholesky factor
inline Mat4 spd_inverse(const Mat4& g) {
  const Mat4 L = cholesky(g);
  // invert L (lower triangular)
  Mat4 Li;
  for (int i = 0; i < 4; ++i) {
    Li(i, i) = 1.0 / L(i, i);
    for (int j = 0; j < i; ++j) {
      double s = 0;
      for (int k = j; k < i; ++k) s += L(i, k) * Li(k, j);
      Li(i, j) = -s / L(i, i);
    }
  }
  // g^{-1} = Li^T Li
  Mat4 inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0;
      for (int k = i; k < 4; ++k) s += Li(k, i) * Li(k, j);
      inv(i, j) = s;
      inv(j, i) = s;
    }
  return inv;
}

inline double sym_det(const Mat4& g) { return det_from_cholesky(cholesky(g)); }

}  // namespace edgecone
