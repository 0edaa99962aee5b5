#include "topology.hpp"

#include <cmath>

#include "status.hpp"

namespace edgecone {

namespace {

constexpr double kPi = 3.14159265358979323846;

ScalarResult from_rational(const Rational& r) {
  ScalarResult s;
  s.exact = r;
  s.value = r.value();
  s.is_exact = true;
  return s;
}

ScalarResult from_double(double v) {
  ScalarResult s;
  s.value = v;
  s.is_exact = false;
  return s;
}

}  // namespace

ScalarResult defect(const EdgeConeTopology& t, int sign) {
  if (sign != 1 && sign != -1) fail(errc::invalid_argument, "defect sign must be ±1");
  if (t.beta.is_exact) {
    const Rational b = t.beta.exact;
    const Rational one(1);
    return from_rational(Rational(2) * (one - b) * Rational(t.chi_sigma) +
                         Rational(sign) * (one - b * b) * Rational(t.sigma_sq));
  }
  const double b = t.beta.approx;
  return from_double(2 * (1 - b) * t.chi_sigma + sign * (1 - b * b) * t.sigma_sq);
}

ScalarResult predicted_gauss_bonnet(const EdgeConeTopology& t) {
  if (t.beta.is_exact) {
    const Rational b = t.beta.exact;
    return from_rational(Rational(t.chi_m) - (Rational(1) - b) * Rational(t.chi_sigma));
  }
  return from_double(t.chi_m - (1 - t.beta.approx) * t.chi_sigma);
}

ScalarResult predicted_signature(const EdgeConeTopology& t) {
  // totally real Σ has normal Euler number −χ(Σ), flipping the correction sign
  if (t.beta.is_exact) {
    const Rational b = t.beta.exact;
    const Rational corr = (Rational(1) - b * b) / Rational(3);
    if (t.totally_real)
      return from_rational(Rational(t.tau_m) + corr * Rational(t.chi_sigma));
    return from_rational(Rational(t.tau_m) - corr * Rational(t.sigma_sq));
  }
  const double b = t.beta.approx;
  const double corr = (1 - b * b) / 3.0;
  if (t.totally_real) return from_double(t.tau_m + corr * t.chi_sigma);
  return from_double(t.tau_m - corr * t.sigma_sq);
}

HTVerdict hitchin_thorpe_check(const EdgeConeTopology& t) {
  HTVerdict v;
  v.exact = t.beta.is_exact;
  if (v.exact) {
    const Rational b = t.beta.exact;
    const Rational one(1);
    const Rational lhs_p = Rational(2 * t.chi_m + 3 * t.tau_m);
    const Rational lhs_m = Rational(2 * t.chi_m - 3 * t.tau_m);
    const Rational rhs_p =
        (one - b) * (Rational(2 * t.chi_sigma) + (one + b) * Rational(t.sigma_sq));
    const Rational rhs_m =
        (one - b) * (Rational(2 * t.chi_sigma) - (one + b) * Rational(t.sigma_sq));
    v.lhs_plus = lhs_p.value();
    v.rhs_plus = rhs_p.value();
    v.lhs_minus = lhs_m.value();
    v.rhs_minus = rhs_m.value();
    v.holds_plus = lhs_p >= rhs_p;
    v.holds_minus = lhs_m >= rhs_m;
    v.equality_plus = lhs_p == rhs_p;
    v.equality_minus = lhs_m == rhs_m;
    return v;
  }
  const double b = t.beta.approx;
  v.lhs_plus = 2 * t.chi_m + 3 * t.tau_m;
  v.lhs_minus = 2 * t.chi_m - 3 * t.tau_m;
  v.rhs_plus = (1 - b) * (2 * t.chi_sigma + (1 + b) * t.sigma_sq);
  v.rhs_minus = (1 - b) * (2 * t.chi_sigma - (1 + b) * t.sigma_sq);
  v.holds_plus = v.lhs_plus >= v.rhs_plus;
  v.holds_minus = v.lhs_minus >= v.rhs_minus;
  return v;
}

ObstructionVerdict large_beta_obstruction(int chi_sigma, int sigma_sq) {
  ObstructionVerdict v;
  if (sigma_sq != 0) {
    v.obstructed = true;
    v.reason = "non-zero self-intersection: the β²-terms force 0 ≥ ±[Σ]²";
    return v;
  }
  if (chi_sigma < 0) {
    v.obstructed = true;
    v.reason = "genus ≥ 2: the β-terms force 0 ≥ −χ(Σ)";
    return v;
  }
  v.reason = "no large-angle obstruction: [Σ]² = 0 and χ(Σ) ≥ 0";
  return v;
}

CscSumResult csc_sum(std::int64_t p) {
  if (p < 2) fail(errc::invalid_argument, "csc_sum needs p ≥ 2");
  CscSumResult out;
  out.closed_form = Rational(p * p - 1, 3);
  // Neumaier-compensated sum, pairing k and p−k
  double sum = 0.0, comp = 0.0;
  auto add = [&sum, &comp](double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  };
  for (std::int64_t k = 1; 2 * k < p; ++k) {
    const double s = std::sin(kPi * double(k) / double(p));
    add(2.0 / (s * s));
  }
  if (p % 2 == 0) add(1.0);  // k = p/2 term, csc²(π/2)
  out.direct = sum + comp;
  return out;
}

double g_signature_contribution(const std::vector<IsolatedFixedPoint>& points,
                                const std::vector<FixedSurface>& surfaces) {
  double total = 0.0;
  for (const auto& pt : points) {
    if (!(pt.alpha > 0 && pt.alpha < 2 * kPi && pt.beta > 0 && pt.beta < 2 * kPi))
      fail(errc::invalid_argument, "rotation angles must lie in (0, 2π)");
    total -= (std::cos(0.5 * pt.alpha) / std::sin(0.5 * pt.alpha)) *
             (std::cos(0.5 * pt.beta) / std::sin(0.5 * pt.beta));
  }
  for (const auto& sf : surfaces) {
    if (!(sf.theta > 0 && sf.theta < 2 * kPi))
      fail(errc::invalid_argument, "rotation angles must lie in (0, 2π)");
    const double s = std::sin(0.5 * sf.theta);
    total += sf.sigma_hat_sq / (s * s);
  }
  return total;
}

OrbifoldSignatureResult orbifold_signature(std::int64_t tau_x, const Rational& sigma_hat_sq,
                                           std::int64_t p) {
  if (p < 1) fail(errc::invalid_argument, "orbifold_signature needs p ≥ 1");
  OrbifoldSignatureResult out;
  if (p == 1) {
    out.tau_m = Rational(tau_x);
    out.integral = true;
    out.rest2_lhs = out.tau_m;
    out.rest2_rhs = out.tau_m;
    return out;
  }
  const Rational csc_total(p * p - 1, 3);
  out.tau_m = (Rational(tau_x) + csc_total * sigma_hat_sq) / Rational(p);
  out.integral = out.tau_m.is_integer();
  // both sides of the downstairs identity, with [Σ]² = p [Σ̂]²
  const Rational sigma_sq = Rational(p) * sigma_hat_sq;
  const Rational corr = (Rational(1) - Rational(1, p * p)) / Rational(3);
  out.rest2_lhs = out.tau_m - corr * sigma_sq;
  out.rest2_rhs = Rational(tau_x) / Rational(p);
  return out;
}

std::optional<InstantonDescriptor> parse_instanton_name(const std::string& name,
                                                        const std::string& asym) {
  InstantonDescriptor d;
  if (asym == "ALE" || asym == "ale")
    d.asym = InstantonDescriptor::ALE;
  else if (asym == "ALF" || asym == "alf")
    d.asym = InstantonDescriptor::ALF;
  else if (asym.empty())
    d.asym = InstantonDescriptor::Default;
  else
    return std::nullopt;

  if (name == "taub_nut" || name == "TN") {
    d.series = InstantonDescriptor::TaubNut;
    return d;
  }
  if (name == "atiyah_hitchin" || name == "AH") {
    d.series = InstantonDescriptor::AtiyahHitchin;
    return d;
  }
  if (name == "atiyah_hitchin_cover" || name == "AH~" || name == "AH_cover") {
    d.series = InstantonDescriptor::AtiyahHitchinCover;
    return d;
  }
  if (name.size() < 2) return std::nullopt;
  char series = name[0];
  int k = 0;
  try {
    k = std::stoi(name.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  d.k = k;
  if (series == 'A' || series == 'a') d.series = InstantonDescriptor::A;
  else if (series == 'D' || series == 'd') d.series = InstantonDescriptor::D;
  else if (series == 'E' || series == 'e') d.series = InstantonDescriptor::E;
  else return std::nullopt;
  return d;
}

InstantonTotal instanton_total(const InstantonDescriptor& d) {
  InstantonTotal out;
  auto finish = [&out]() {
    out.value = out.coeff_8pi2.value() * 8 * kPi * kPi;
    return out;
  };

  switch (d.series) {
    case InstantonDescriptor::TaubNut:
      out.coeff_8pi2 = Rational(1);  // ALF, χ = 1
      return finish();
    case InstantonDescriptor::AtiyahHitchin:
      out.coeff_8pi2 = Rational(1);  // ALF, χ = 1
      return finish();
    case InstantonDescriptor::AtiyahHitchinCover:
      out.coeff_8pi2 = Rational(2);  // ALF, χ = 2
      return finish();
    default:
      break;
  }

  std::int64_t gamma = 0;
  int chi = 0;
  if (d.series == InstantonDescriptor::A) {
    if (d.k < 1) fail(errc::invalid_argument, "A_k needs k ≥ 1");
    gamma = d.k + 1;
    chi = d.k + 1;
  } else if (d.series == InstantonDescriptor::D) {
    if (d.k < 3) fail(errc::invalid_argument, "D_k needs k ≥ 3");
    gamma = 4 * d.k - 8;
    chi = d.k + 1;
  } else {
    if (d.k < 6 || d.k > 8) fail(errc::invalid_argument, "E_k needs k ∈ {6,7,8}");
    gamma = (d.k == 6) ? 24 : (d.k == 7) ? 48 : 120;
    chi = d.k + 1;
  }

  const auto asym = (d.asym == InstantonDescriptor::Default) ? InstantonDescriptor::ALE : d.asym;
  if (asym == InstantonDescriptor::ALE) {
    out.coeff_8pi2 = Rational(chi) - Rational(1, gamma);
  } else {
    if (d.series == InstantonDescriptor::E)
      fail(errc::no_alf_for_e_type, "E-type diagrams have no ALF partner");
    out.coeff_8pi2 = Rational(chi);
  }
  return finish();
}

std::vector<InstantonRow> instanton_table(int a_max, int d_max) {
  std::vector<InstantonRow> rows;
  for (int k = 1; k <= a_max; ++k) {
    InstantonRow r;
    r.dynkin = "A" + std::to_string(k);
    r.group_name = "cyclic";
    r.gamma_order = k + 1;
    r.chi = k + 1;
    r.ale_coeff = Rational(k + 1) - Rational(1, k + 1);
    r.alf_coeff = Rational(k + 1);
    rows.push_back(r);
  }
  for (int k = 3; k <= d_max; ++k) {
    InstantonRow r;
    r.dynkin = "D" + std::to_string(k);
    r.group_name = "dihedral*";
    r.gamma_order = 4 * k - 8;
    r.chi = k + 1;
    r.ale_coeff = Rational(k + 1) - Rational(1, 4 * k - 8);
    r.alf_coeff = Rational(k + 1);
    rows.push_back(r);
  }
  const char* names[3] = {"tetrahedral*", "octahedral*", "dodecahedral*"};
  const std::int64_t orders[3] = {24, 48, 120};
  for (int i = 0; i < 3; ++i) {
    InstantonRow r;
    r.dynkin = "E" + std::to_string(6 + i);
    r.group_name = names[i];
    r.gamma_order = orders[i];
    r.chi = 7 + i;
    r.ale_coeff = Rational(7 + i) - Rational(1, orders[i]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace edgecone
