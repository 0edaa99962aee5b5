#pragma once

#include <optional>
#include <string>
#include <vector>

namespace edgecone {

enum class Invariant {
  GaussBonnet,  // (1/8π²)(s²/24 + |W₊|² + |W₋|² − |r̊|²/2)
  Signature,    // (1/12π²)(|W₊|² − |W₋|²)
  WplusTotal,   // |W₊|²
  RiemTotal,    // |R|² in the curvature-operator norm: s²/24 + |r̊|²/2 + |W₊|² + |W₋|²
  Volume,
};

const char* invariant_name(Invariant w);
std::optional<Invariant> invariant_from_name(const std::string& s);

struct QuadratureSpec {
  double rel_tol = 0.0;      // 0 => default (1e-7 for 1D reductions, 1e-5 for 2D)
  long long max_evals = 0;   // 0 => default (1e6 / 5e7)
};

struct IntegralReport {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::optional<double> predicted;
  long long n_evals = 0;
  std::vector<std::string> substitutions_used;
  bool budget_exhausted = false;

  double residual() const { return predicted ? value - *predicted : 0.0; }
};

inline const char* invariant_name(Invariant w) {
  switch (w) {
    case Invariant::GaussBonnet: return "gauss_bonnet";
    case Invariant::Signature: return "signature";
    case Invariant::WplusTotal: return "wplus_total";
    case Invariant::RiemTotal: return "riem_total";
    case Invariant::Volume: return "volume";
  }
  return "?";
}

inline std::optional<Invariant> invariant_from_name(const std::string& s) {
  if (s == "gauss_bonnet") return Invariant::GaussBonnet;
  if (s == "signature") return Invariant::Signature;
  if (s == "wplus_total") return Invariant::WplusTotal;
  if (s == "riem_total") return Invariant::RiemTotal;
  if (s == "volume") return Invariant::Volume;
  return std::nullopt;
}

}  // namespace edgecone
