#pragma once

#include "metric_field.hpp"
#include "tensor_core.hpp"

namespace edgecone {

// Pointwise curvature of a chart metric: Christoffels, lowered Riemann,
// Ricci, operator blocks and invariant densities.
struct CurvatureData {
  Mat4 g, g_inv;
  std::array<Mat4, 4> gamma;  // gamma[k](i,j) = Γ^k_{ij}
  Riem4 riemann;
  Mat4 ricci;
  Frame4 frame;
  CurvatureOperator op;
  InvariantDensities densities;
  double deriv_error = 0.0;        // estimated absolute error on riemann entries
  double symmetry_residual = 0.0;  // relative to max |R|
};

struct HypersurfaceData {
  Mat3 second_fundamental_form;  // boundary orthonormal frame, outward normal
  Mat3 rhat;
  double area_density = 0.0;  // √det of the induced 3-metric, chart coordinates
  std::array<Vec4, 3> tangent_frame;
  Vec4 unit_normal{};
};

CurvatureData curvature_at(const MetricField& m, const Vec4& x);

// Level set {x0 = radial}; angular components taken from `angular`.
HypersurfaceData hypersurface_at(const MetricField& m, double radial, const Vec4& angular);

// |R|² by direct full contraction (independent of the operator-block route)
double riemann_full_contraction(const Riem4& r, const Mat4& g_inv);

}  // namespace edgecone
