#pragma once

#include "quadrature_types.hpp"

namespace edgecone {

// Rotationally symmetric profile f on [0,∞) with
//   f(t) = 1/β    for t ≤ 1/2
//   f(t) = t^{β−1} for t ≥ 1
// blended on [1/2,1] by a fixed quintic smoothstep and then corrected by a
// compactly supported bump so that ∫₀¹ f = 1/β holds exactly. The metric with
// Kähler form i f(|ζ|²) dζ∧dζ̄ is Euclidean near the origin and a standard
// cone of perimeter angle 2πβ outside the unit disk.
struct ConeProfile {
  double beta = 1.0;
  double blend_correction = 0.0;  // coefficient of the bump on [1/2,1]

  double f(double t) const;
  void f_derivs(double t, double& f0, double& f1, double& f2) const;
  double integral_f(double t) const;  // ∫₀ᵗ f
  double Fprime(double t) const;      // (1/t)∫₀ᵗ f
  double F(double t) const;           // antiderivative with F(t) = t^β/β² for t ≥ 1
  double unit_integral() const { return integral_f(1.0); }
};

ConeProfile cone_profile(double beta);

// ∫ K dA over the smoothed cone, computed through the generic 2-dimensional
// Levi-Civita pipeline on the chart metric f(x²+y²)(dx²+dy²).
IntegralReport smoothed_cone_total_curvature(double beta, double rel_tol);

// Gaussian curvature of the chart metric at radius r (2D tensor route)
double smoothed_cone_gauss_curvature(const ConeProfile& p, double r);

}  // namespace edgecone
