#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metric_field.hpp"
#include "quadrature_types.hpp"

namespace edgecone {

// Metric families, addressable by name from CLI config.
//
// Cohomogeneity-one families are realized in Euler-angle coordinates
// (t, ψ, θ, φ) with the left-invariant coframe
//   σ₁ = cosψ dθ + sinψ sinθ dφ
//   σ₂ = −sinψ dθ + cosψ sinθ dφ
//   σ₃ = dψ + cosθ dφ
// normalized so dσᵢ = −σⱼ∧σₖ (cyclic) and ∫σ₁∧σ₂∧σ₃ = 16π² over ψ-period 4π.
// Published component functions written for a unit-S³-orthonormal coframe are
// rescaled by σ → σ/2 (a factor 1/4 on the σ² blocks); the constant is fixed
// by requiring the smooth members to close up without conical points (flat at
// the taub_nut origin, standard form at the eguchi_hanson bolt) and is
// recorded per family in MetricField::calibration.
struct FamilyDescriptor {
  std::string family;           // edge_s4 | pedersen_abreu | lebrun_gibbons_hawking |
                                // eguchi_hanson | taub_nut | multi_taub_nut |
                                // fubini_study | flat
  double beta = 1.0;            // cone angle / 2π, where applicable
  std::vector<double> centers;  // collinear center offsets along the symmetry axis
                                // (hyperbolic geodesic distance for lebrun_gibbons_hawking,
                                //  Euclidean height for multi_taub_nut)
  double psi_period = 0.0;      // 0 => family default
  int orientation = 0;          // 0 => family default (fixed so W₋ ≡ 0 where applicable)
  bool numeric_derivatives = false;
};

// Discrete data of the completed space, for predictions.
struct FamilyTopology {
  bool known = false;
  int chi_m = 0, tau_m = 0;
  int chi_sigma = 0, sigma_sq = 0;
  bool has_edge = false;  // β ≠ 1 edge along Σ
};

struct CatalogMetric {
  MetricField field;
  FamilyDescriptor descriptor;
  FamilyTopology topology;
};

CatalogMetric make_metric(const FamilyDescriptor& d);

// The closed-form target for a family/invariant, when one is known; the
// Gauss-Bonnet and signature targets carry the edge corrections
// χ(M) − (1−β)χ(Σ) and τ(M) − (1/3)(1−β²)[Σ]².
std::optional<double> exact_prediction(const CatalogMetric& m, Invariant which);

std::vector<std::string> catalog_family_names();

}  // namespace edgecone
