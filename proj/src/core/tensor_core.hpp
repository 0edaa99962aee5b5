#pragma once

#include <array>

#include "linalg.hpp"

namespace edgecone {

// Lowered Riemann tensor R_{ijkl} at a point, chart indices.
// Conventions: R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_[X,Y] Z, components
// R^l_{kij} with R(∂_i,∂_j)∂_k = R^l_{kij} ∂_l, lowered on the first slot.
// Constant curvature +1 then reads R_{ijkl} = g_ik g_jl − g_il g_jk.
struct Riem4 {
  std::array<double, 256> r{};
  double& operator()(int i, int j, int k, int l) { return r[((i * 4 + j) * 4 + k) * 4 + l]; }
  double operator()(int i, int j, int k, int l) const { return r[((i * 4 + j) * 4 + k) * 4 + l]; }

  double max_abs() const;
  // worst violation of pair antisymmetries, pair interchange and the first
  // Bianchi identity, relative to max |R| (0 scale -> absolute)
  double symmetry_residual() const;
};

// Oriented g-orthonormal frame; vectors[a] = chart components of leg a.
struct Frame4 {
  std::array<Vec4, 4> vectors{};
  int orientation_sign = 1;  // +1 always after construction
};

// Curvature operator on 2-forms in the normalized self-dual / anti-self-dual
// basis {(e0^e1 ± e2^e3)/√2, (e0^e2 ± e3^e1)/√2, (e0^e3 ± e1^e2)/√2}.
// A maps SD->SD, D maps ASD->ASD, B mixes; s = 2(tr A + tr D).
struct CurvatureOperator {
  Mat3 A, B, D;
  double scalar = 0.0;
};

struct InvariantDensities {
  double s = 0.0;          // scalar curvature
  double ricci0_sq = 0.0;  // |r̊|², trace-free Ricci, full contraction
  double wplus_sq = 0.0;   // |W₊|², Λ²⊗Λ² (operator Frobenius) norm
  double wminus_sq = 0.0;  // |W₋|², same normalization
  double riem_sq = 0.0;    // R_{ijkl} R^{ijkl}, full contraction
  double vol_density = 0.0;

  // Gauss-Bonnet / signature integrands and the |R|² of the curvature
  // operator (the convention in which the instanton totals are stated:
  // riem_operator_sq = riem_sq / 4 for exact tensors).
  double gauss_bonnet_density() const { return s * s / 24.0 + wplus_sq + wminus_sq - 0.5 * ricci0_sq; }
  double signature_density() const { return wplus_sq - wminus_sq; }
  double riem_operator_sq() const { return s * s / 24.0 + 0.5 * ricci0_sq + wplus_sq + wminus_sq; }
};

// Deterministic Gram-Schmidt frame for g, positively oriented with respect to
// the requested chart orientation (±1). A reversed frame is corrected by
// swapping the last two legs.
Frame4 orthonormal_frame(const Mat4& g, int chart_orientation);

// Blocks of the curvature operator in the frame's SD/ASD basis.
// Throws AsymmetryExceeded when the input violates its pair symmetries beyond
// `asym_tol` relative to max(|R|, scale_floor); the floor lets callers with
// near-flat curvature supply the magnitude of the cancelling terms.
CurvatureOperator curvature_operator(const Riem4& riemann, const Frame4& frame,
                                     double asym_tol = 1e-9, double scale_floor = 0.0);

InvariantDensities invariant_densities(const CurvatureOperator& op, const Mat4& ricci,
                                       const Mat4& g, const Mat4& g_inv, double vol_density);

// R̂_ab = (1/4) ε_acd ε_bef R_cdef with all indices in the boundary
// orthonormal frame {tangent[0..2]}; the 3-dimensional Hodge dual of the
// ambient curvature restricted to a hypersurface.
Mat3 boundary_rhat(const Riem4& riemann, const std::array<Vec4, 3>& tangent_frame);

}  // namespace edgecone
