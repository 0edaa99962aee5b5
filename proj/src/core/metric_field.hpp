#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "jet.hpp"
#include "linalg.hpp"

namespace edgecone {

enum class DerivMode { Analytic, NumericFD };

enum class SymmetryKind {
  CohomogeneityOne,  // components depend on x0 only; vol density = D(x0)·sin(x_polar)
  Axisymmetric2D,    // components depend on (x0, x_polar); x1, x3 are fiber circles
  NoReduction,
};

enum class DecayClass { None, ALE, ALF, ExponentialTail };

// Substitution used at an improper or singular endpoint of the reduced
// radial integral. Maps u in (0,1] (or [0,1)) to the radial coordinate.
struct EndpointMap {
  enum Kind {
    None,
    EdgeExp,        // t = t0 + k·(−ln u): edge at infinite radial coordinate,
                    // transversal distance ρ ≈ e^{−t}; realizes ρ = u^{1/min(1,β)}
    AleInfinity,    // t = t0 − 1 + 1/(1−u)
    AlfInfinity,    // t = t0 + tan(πu/2)
    AlgebraicZero,  // t = t0 + span·u^p  (bounded singular endpoint)
  } kind = None;
  double param = 1.0;

  std::string label() const;
};

struct SymmetryReduction {
  SymmetryKind kind = SymmetryKind::NoReduction;
  int polar_index = 2;        // coordinate carrying the sin factor
  double orbit_factor = 1.0;  // CohomogeneityOne: ∫ d(angles) with sin factored out
                              // Axisymmetric2D: product of the two fiber periods
  Vec4 base_point{};          // representative angular values; radial slot ignored
  double radial_min = 0.0;
  double radial_max = std::numeric_limits<double>::infinity();
  EndpointMap inner_map, outer_map;
  double polar_min = 0.0, polar_max = M_PI;  // Axisymmetric2D only
  DecayClass decay = DecayClass::None;
};

struct CalibrationConstant {
  std::string name;
  double value;
};

// A coordinate-chart 4-metric: evaluates the component matrix and, through
// 2-jets of the closed form, its exact first and second derivatives.
// Evaluation is pure; instances are safe to share across workers.
struct MetricField {
  using JetEval = std::function<void(const Vec4&, std::array<Jet4, 16>&)>;

  std::string name;
  JetEval jet_eval;
  DerivMode deriv_mode = DerivMode::Analytic;
  double fd_base_step = 1e-4;  // NumericFD: base step, scaled per coordinate
  int orientation = +1;        // chart orientation handed to frame construction

  // chart box; radial guard band keeps evaluations off singular loci
  double radial_guard = 1e-6;
  std::function<bool(const Vec4&)> extra_domain_check;  // optional

  SymmetryReduction symmetry;

  // descriptor echo / reporting
  double beta = 1.0;
  double psi_period = 0.0;
  int euler_characteristic = 0;
  bool euler_known = false;
  std::vector<CalibrationConstant> calibration;

  Mat4 eval(const Vec4& x) const {
    std::array<Jet4, 16> j;
    jet_eval(x, j);
    Mat4 g;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) g(i, k) = j[i * 4 + k].v;
    return g;
  }

  bool in_domain(const Vec4& x) const {
    if (!(x[0] >= symmetry.radial_min + radial_guard)) return false;
    if (std::isfinite(symmetry.radial_max) && !(x[0] <= symmetry.radial_max - radial_guard))
      return false;
    if (extra_domain_check && !extra_domain_check(x)) return false;
    return true;
  }
};

inline std::string EndpointMap::label() const {
  switch (kind) {
    case None: return "none";
    case EdgeExp: return "edge_exp";
    case AleInfinity: return "ale_inf";
    case AlfInfinity: return "alf_inf";
    case AlgebraicZero: return "algebraic_zero";
  }
  return "?";
}

}  // namespace edgecone
