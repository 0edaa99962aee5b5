#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace edgecone {

// Discrete data of an edge-cone pair (M, Σ): Euler characteristics, signature,
// self-intersection (the Euler number of the normal bundle when Σ is
// non-orientable), cone angle 2πβ.
struct EdgeConeTopology {
  int chi_m = 0;
  int tau_m = 0;
  int chi_sigma = 0;
  int sigma_sq = 0;
  BetaValue beta;
  bool totally_real = false;  // use the totally-real signature variant
};

// Exact when β is exact; the double mirror is always populated.
struct ScalarResult {
  double value = 0.0;
  Rational exact{0};
  bool is_exact = false;
};

// D±(Σ,β) = 2(1−β)χ(Σ) ± (1−β²)[Σ]²
ScalarResult defect(const EdgeConeTopology& t, int sign);

// χ(M) − (1−β)χ(Σ)
ScalarResult predicted_gauss_bonnet(const EdgeConeTopology& t);

// τ(M) − (1/3)(1−β²)[Σ]², or τ(M) + (1/3)(1−β²)χ(Σ) for totally real Σ
ScalarResult predicted_signature(const EdgeConeTopology& t);

struct HTVerdict {
  double lhs_plus = 0, rhs_plus = 0, lhs_minus = 0, rhs_minus = 0;
  bool holds_plus = false, holds_minus = false;
  bool equality_plus = false, equality_minus = false;  // meaningful only when exact
  bool exact = false;
};

// (2χ ± 3τ)(M) ≥ (1−β)[2χ(Σ) ± (1+β)[Σ]²]; equality flags are evaluated in
// exact rational arithmetic and only when β was supplied exactly.
HTVerdict hitchin_thorpe_check(const EdgeConeTopology& t);

struct ObstructionVerdict {
  bool obstructed = false;
  std::string reason;
};

// Large-cone-angle obstruction: no Einstein edge-cone metrics for all large β
// when [Σ]² ≠ 0 or χ(Σ) < 0.
ObstructionVerdict large_beta_obstruction(int chi_sigma, int sigma_sq);

struct CscSumResult {
  double direct = 0.0;        // compensated summation of Σ csc²(kπ/p)
  Rational closed_form{0};    // (p²−1)/3
};
CscSumResult csc_sum(std::int64_t p);

// τ(g,X) = −Σ cot(αⱼ/2)cot(βⱼ/2) + Σ csc²(θₖ/2)[Σ̂ₖ]²
struct IsolatedFixedPoint {
  double alpha, beta;
};
struct FixedSurface {
  double theta;
  double sigma_hat_sq;
};
double g_signature_contribution(const std::vector<IsolatedFixedPoint>& points,
                                const std::vector<FixedSurface>& surfaces);

struct OrbifoldSignatureResult {
  Rational tau_m{0};        // (1/p)[τ(X) + ((p²−1)/3)[Σ̂]²]
  bool integral = false;    // non-integral τ(M) signals inconsistent input
  Rational rest2_lhs{0};    // τ(M) − (1/3)(1−p⁻²)[Σ]², with [Σ]² = p[Σ̂]²
  Rational rest2_rhs{0};    // τ(X)/p
};
OrbifoldSignatureResult orbifold_signature(std::int64_t tau_x, const Rational& sigma_hat_sq,
                                           std::int64_t p);

// Total squared curvature of ALE/ALF gravitational instantons, as exact
// rational multiples of 8π². A_k: |Γ| = k+1; D_k (k ≥ 3): |Γ| = 4k−8;
// E₆/E₇/E₈: 24/48/120; χ = k+1 in all diagram cases.
struct InstantonDescriptor {
  enum Series { A, D, E, TaubNut, AtiyahHitchin, AtiyahHitchinCover } series = A;
  int k = 1;  // node count for A/D/E (E: k ∈ {6,7,8})
  enum Asymptotics { ALE, ALF, Default } asym = Default;
};
std::optional<InstantonDescriptor> parse_instanton_name(const std::string& name,
                                                        const std::string& asym);

struct InstantonTotal {
  Rational coeff_8pi2{0};
  double value = 0.0;  // coeff × 8π²
};
InstantonTotal instanton_total(const InstantonDescriptor& d);

struct InstantonRow {
  std::string dynkin;
  std::string group_name;
  std::int64_t gamma_order = 0;
  int chi = 0;
  Rational ale_coeff{0};                 // × 8π²
  std::optional<Rational> alf_coeff;     // absent for E-type
};
std::vector<InstantonRow> instanton_table(int a_max = 8, int d_max = 8);

}  // namespace edgecone
