#include "geometry_catalog.hpp"

#include <cmath>

#include "status.hpp"

namespace edgecone {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Profile = std::function<void(const Jet4&, Jet4&, Jet4&, Jet4&)>;

// g = A(t) dt² + B(t)(σ₁²+σ₂²) + C(t) σ₃² in coordinates (t, ψ, θ, φ)
MetricField::JetEval biaxial_eval(Profile profile) {
  return [profile = std::move(profile)](const Vec4& x, std::array<Jet4, 16>& g) {
    for (auto& c : g) c = Jet4(0.0);
    const Jet4 t = Jet4::variable(0, x[0]);
    const Jet4 th = Jet4::variable(2, x[2]);
    Jet4 A, B, C;
    profile(t, A, B, C);
    const Jet4 ct = cos(th), st = sin(th);
    g[0 * 4 + 0] = A;
    g[1 * 4 + 1] = C;
    g[2 * 4 + 2] = B;
    g[3 * 4 + 3] = B * (st * st) + C * (ct * ct);
    g[1 * 4 + 3] = C * ct;
    g[3 * 4 + 1] = g[1 * 4 + 3];
  };
}

// Gibbons-Hawking-type bundle metric over a rotationally symmetric base:
//   g = V (dt² + R2(t)(dθ² + sin²θ dφ²)) + (1/4V)(dψ + w dφ)²
// with V, w functions of (t, θ). Coordinates (t, ψ, θ, φ).
MetricField::JetEval bundle_eval(std::function<void(const Jet4&, const Jet4&, Jet4&, Jet4&, Jet4&)> vw) {
  return [vw = std::move(vw)](const Vec4& x, std::array<Jet4, 16>& g) {
    for (auto& c : g) c = Jet4(0.0);
    const Jet4 t = Jet4::variable(0, x[0]);
    const Jet4 th = Jet4::variable(2, x[2]);
    Jet4 V, w, R2;
    vw(t, th, V, w, R2);
    const Jet4 st = sin(th);
    const Jet4 fiber = 0.25 * inv(V);
    g[0 * 4 + 0] = V;
    g[2 * 4 + 2] = V * R2;
    g[1 * 4 + 1] = fiber;
    g[1 * 4 + 3] = fiber * w;
    g[3 * 4 + 1] = g[1 * 4 + 3];
    g[3 * 4 + 3] = V * R2 * (st * st) + fiber * (w * w);
  };
}

SymmetryReduction cohom_one(double p1, double p3, double rmin, double rmax) {
  SymmetryReduction s;
  s.kind = SymmetryKind::CohomogeneityOne;
  s.polar_index = 2;
  s.orbit_factor = 2.0 * p1 * p3;
  s.base_point = {0.0, 0.4, 1.1, 0.8};
  s.radial_min = rmin;
  s.radial_max = rmax;
  return s;
}

void require(bool cond, const std::string& msg) {
  if (!cond) fail(errc::unsupported_parameters, msg);
}

}  // namespace

CatalogMetric make_metric(const FamilyDescriptor& d) {
  CatalogMetric cm;
  cm.descriptor = d;
  MetricField& m = cm.field;
  m.name = d.family;
  m.beta = d.beta;
  m.deriv_mode = d.numeric_derivatives ? DerivMode::NumericFD : DerivMode::Analytic;

  const double beta = d.beta;
  const double inf = std::numeric_limits<double>::infinity();

  if (d.family == "edge_s4") {
    require(beta > 0, "edge_s4: beta must be positive");
    // (sech²t)[dt² + β²dθc² + sinh²t dΩ²]: hyperbolic-cylinder picture of the
    // round 4-sphere with an edge of cone angle 2πβ along the equatorial S²
    // at t = ∞; locally isometric to the unit round S⁴ for every β.
    m.jet_eval = [beta](const Vec4& x, std::array<Jet4, 16>& g) {
      for (auto& c : g) c = Jet4(0.0);
      const Jet4 t = Jet4::variable(0, x[0]);
      const Jet4 th = Jet4::variable(2, x[2]);
      const Jet4 F = inv(cosh(t) * cosh(t));
      const Jet4 sh2 = sinh(t) * sinh(t);
      const Jet4 st = sin(th);
      g[0] = F;
      g[1 * 4 + 1] = F * (beta * beta);
      g[2 * 4 + 2] = F * sh2;
      g[3 * 4 + 3] = F * sh2 * (st * st);
    };
    m.symmetry = cohom_one(2 * kPi, 2 * kPi, 0.0, inf);
    m.symmetry.outer_map = {EndpointMap::EdgeExp, 1.0 / std::min(1.0, beta)};
    m.symmetry.decay = DecayClass::ExponentialTail;
    m.orientation = d.orientation ? d.orientation : 1;
    m.euler_characteristic = 2;
    m.euler_known = true;
    cm.topology = {true, 2, 0, 2, 0, beta != 1.0};
    m.calibration = {{"circle_period", 2 * kPi}, {"local_model_scalar_curvature", 12.0}};
    return cm;
  }

  if (d.family == "pedersen_abreu") {
    require(beta > 0 && beta < 2, "pedersen_abreu: requires 0 < beta < 2");
    // Einstein representative of the one-center hyperbolic-ansatz conformal
    // class; scalar curvature 6β²(2−β), edge of angle 2πβ along the sphere at
    // infinity. V = 1/β + 1/(e^{2t}−1), conformal factor 4β⁻¹[(2−β)cosh t + β sinh t]⁻².
    m.jet_eval = biaxial_eval([beta](const Jet4& t, Jet4& A, Jet4& B, Jet4& C) {
      const Jet4 V = (1.0 / beta) + inv(expm1(2.0 * t));
      const Jet4 pre = (2.0 - beta) * cosh(t) + beta * sinh(t);
      const Jet4 c = (4.0 / beta) * inv(pre * pre);
      const Jet4 sh = sinh(t);
      A = c * V;
      B = c * V * (sh * sh);
      C = c * 0.25 * inv(V);
    });
    m.symmetry = cohom_one(4 * kPi, 2 * kPi, 0.0, inf);
    m.symmetry.outer_map = {EndpointMap::EdgeExp, 1.0 / std::min(1.0, beta)};
    m.symmetry.decay = DecayClass::ExponentialTail;
    m.orientation = d.orientation ? d.orientation : -1;  // W₋ ≡ 0 in this chart
    m.psi_period = 4 * kPi;
    m.euler_characteristic = 3;
    m.euler_known = true;
    cm.topology = {true, 3, 1, 2, 1, beta != 1.0};
    m.calibration = {{"sigma_scale", 0.5},
                     {"psi_period", 4 * kPi},
                     {"einstein_scalar_curvature", 6 * beta * beta * (2 - beta)}};
    return cm;
  }

  if (d.family == "lebrun_gibbons_hawking") {
    require(beta > 0, "lebrun_gibbons_hawking: beta must be positive");
    std::vector<double> centers = d.centers;
    if (centers.empty()) {
      const int n = 1;
      centers.assign(n, 0.0);
    }
    const int n = int(centers.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        require(centers[i] != centers[j], "lebrun_gibbons_hawking: centers must be distinct");

    if (n == 1) {
      const double d0 = centers[0];
      require(d0 == 0.0, "lebrun_gibbons_hawking: single center must sit at the base point");
      // the ansatz representative g₀ = V h + V⁻¹Θ² itself
      m.jet_eval = biaxial_eval([beta](const Jet4& t, Jet4& A, Jet4& B, Jet4& C) {
        const Jet4 V = (1.0 / beta) + inv(expm1(2.0 * t));
        const Jet4 sh = sinh(t);
        A = V;
        B = V * (sh * sh);
        C = 0.25 * inv(V);
      });
      m.symmetry = cohom_one(4 * kPi, 2 * kPi, 0.0, inf);
    } else {
      // collinear centers at hyperbolic offsets dⱼ along a geodesic axis;
      // hyperbolic law of cosines gives the distance tⱼ to each center, and
      // the monopole potential sums (1/2)cos(angle at center) dφ terms.
      auto vw = [beta, centers](const Jet4& t, const Jet4& th, Jet4& V, Jet4& w, Jet4& R2) {
        const Jet4 cht = cosh(t), sht = sinh(t), cth = cos(th);
        V = Jet4(1.0 / beta);
        w = Jet4(0.0);
        for (double dj : centers) {
          const double cd = std::cosh(dj), sd = std::sinh(dj);
          const Jet4 cj = cd * cht - sd * (sht * cth);     // cosh tⱼ
          const Jet4 sj = sqrt(cj * cj - 1.0);             // sinh tⱼ
          V = V + inv(2.0 * sj * (sj + cj));               // 1/(e^{2tⱼ}−1)
          w = w + (cd * (sht * cth) - sd * cht) / sj;      // cos(angle at center j)
        }
        R2 = sht * sht;
      };
      m.jet_eval = bundle_eval(vw);
      m.symmetry.kind = SymmetryKind::Axisymmetric2D;
      m.symmetry.polar_index = 2;
      m.symmetry.orbit_factor = (4 * kPi) * (2 * kPi);
      m.symmetry.base_point = {0.0, 0.4, 1.1, 0.8};
      m.symmetry.radial_min = 0.0;
      m.symmetry.radial_max = inf;
      // stay off the center points (on-axis) and the axis itself
      const double guard = m.radial_guard;
      m.extra_domain_check = [centers, guard](const Vec4& x) {
        for (double dj : centers) {
          const double cj = std::cosh(dj) * std::cosh(x[0]) -
                            std::sinh(dj) * std::sinh(x[0]) * std::cos(x[2]);
          if (std::acosh(std::max(1.0, cj)) < guard) return false;
        }
        return true;
      };
    }
    m.symmetry.outer_map = {EndpointMap::EdgeExp, 1.0 / std::min(1.0, beta)};
    m.symmetry.decay = DecayClass::ExponentialTail;
    m.orientation = d.orientation ? d.orientation : -1;  // W₋ ≡ 0 in this chart
    m.psi_period = 4 * kPi;
    m.euler_characteristic = n + 2;
    m.euler_known = true;
    cm.topology = {true, n + 2, n, 2, n, beta != 1.0};
    m.calibration = {{"sigma_scale", 0.5}, {"psi_period", 4 * kPi}, {"n_centers", double(n)}};
    return cm;
  }

  if (d.family == "eguchi_hanson") {
    double psi = d.psi_period > 0 ? d.psi_period : 2 * kPi;
    require(std::fabs(psi - 2 * kPi) < 1e-12 || std::fabs(psi - 4 * kPi) < 1e-12,
            "eguchi_hanson: psi_period must be 2π (instanton) or 4π (branched double cover)");
    m.jet_eval = biaxial_eval([](const Jet4& t, Jet4& A, Jet4& B, Jet4& C) {
      const Jet4 delta = 1.0 - pow(t, -4.0);
      A = inv(delta);
      B = 0.25 * (t * t);
      C = B * delta;
    });
    m.symmetry = cohom_one(psi, 2 * kPi, 1.0, inf);
    m.symmetry.outer_map = {EndpointMap::AleInfinity, 0.0};
    m.symmetry.decay = DecayClass::ALE;
    m.orientation = d.orientation ? d.orientation : 1;
    m.psi_period = psi;
    const bool standard = std::fabs(psi - 2 * kPi) < 1e-12;
    m.euler_characteristic = 2;
    m.euler_known = standard;  // 4π cover carries a cone angle 4π along the bolt
    m.calibration = {{"sigma_scale", 0.5}, {"psi_period", psi}, {"bolt_radius", 1.0}};
    return cm;
  }

  if (d.family == "taub_nut" || d.family == "multi_taub_nut") {
    std::vector<double> centers = d.centers;
    if (centers.empty()) {
      if (d.family == "taub_nut") centers = {0.0};
      else centers = {-0.5, 0.5};
    }
    require(d.family == "multi_taub_nut" || centers == std::vector<double>{0.0},
            "taub_nut: takes no centers");
    const int n = int(centers.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        require(centers[i] != centers[j], "multi_taub_nut: centers must be pairwise distinct");

    if (n == 1 && centers[0] == 0.0) {
      m.jet_eval = biaxial_eval([](const Jet4& t, Jet4& A, Jet4& B, Jet4& C) {
        const Jet4 V = 1.0 + 0.5 * inv(t);
        A = V;
        B = V * (t * t);
        C = 0.25 * inv(V);
      });
      m.symmetry = cohom_one(4 * kPi, 2 * kPi, 0.0, inf);
    } else {
      auto vw = [centers](const Jet4& t, const Jet4& th, Jet4& V, Jet4& w, Jet4& R2) {
        const Jet4 cth = cos(th);
        V = Jet4(1.0);
        w = Jet4(0.0);
        for (double zj : centers) {
          const Jet4 rj = sqrt(t * t + zj * zj - (2.0 * zj) * (t * cth));
          V = V + 0.5 * inv(rj);
          w = w + (t * cth - zj) / rj;
        }
        R2 = t * t;
      };
      m.jet_eval = bundle_eval(vw);
      m.symmetry.kind = SymmetryKind::Axisymmetric2D;
      m.symmetry.polar_index = 2;
      m.symmetry.orbit_factor = (4 * kPi) * (2 * kPi);
      m.symmetry.base_point = {0.0, 0.4, 1.1, 0.8};
      m.symmetry.radial_min = 0.0;
      m.symmetry.radial_max = inf;
      const double guard = m.radial_guard;
      m.extra_domain_check = [centers, guard](const Vec4& x) {
        for (double zj : centers) {
          const double rj =
              std::sqrt(x[0] * x[0] + zj * zj - 2 * zj * x[0] * std::cos(x[2]));
          if (rj < guard) return false;
        }
        return true;
      };
    }
    m.symmetry.outer_map = {EndpointMap::AlfInfinity, 0.0};
    m.symmetry.decay = DecayClass::ALF;
    m.orientation = d.orientation ? d.orientation : -1;  // W₋ ≡ 0 in this chart
    m.psi_period = 4 * kPi;
    m.euler_characteristic = n;
    m.euler_known = true;
    m.calibration = {{"sigma_scale", 0.5}, {"psi_period", 4 * kPi}, {"nut_parameter", 0.25},
                     {"n_centers", double(n)}};
    return cm;
  }

  if (d.family == "flat") {
    m.jet_eval = biaxial_eval([](const Jet4& t, Jet4& A, Jet4& B, Jet4& C) {
      A = Jet4(1.0);
      B = 0.25 * (t * t);
      C = B;
    });
    m.symmetry = cohom_one(4 * kPi, 2 * kPi, 0.0, inf);
    m.orientation = d.orientation ? d.orientation : 1;
    m.psi_period = 4 * kPi;
    m.euler_characteristic = 1;
    m.euler_known = true;
    m.calibration = {{"sigma_scale", 0.5}, {"psi_period", 4 * kPi}};
    return cm;
  }

  if (d.family == "fubini_study") {
    // affine chart, Kähler potential log(1 + |z|²); coordinates (x₁,y₁,x₂,y₂)
    // with the complex orientation
    m.jet_eval = [](const Vec4& x, std::array<Jet4, 16>& g) {
      std::array<Jet4, 4> v;
      for (int i = 0; i < 4; ++i) v[i] = Jet4::variable(i, x[i]);
      const Jet4 w = 1.0 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
      const Jet4 w2 = inv(w * w);
      Jet4 reH[2][2], imH[2][2];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Jet4& xi = v[2 * i];
          const Jet4& yi = v[2 * i + 1];
          const Jet4& xj = v[2 * j];
          const Jet4& yj = v[2 * j + 1];
          Jet4 del = (i == j) ? w : Jet4(0.0);
          reH[i][j] = (del - (xi * xj + yi * yj)) * w2;
          imH[i][j] = (Jet4(0.0) - (xi * yj - yi * xj)) * w2;
        }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          g[(2 * i) * 4 + (2 * j)] = 2.0 * reH[i][j];
          g[(2 * i + 1) * 4 + (2 * j + 1)] = 2.0 * reH[i][j];
          g[(2 * i) * 4 + (2 * j + 1)] = 2.0 * imH[i][j];
          g[(2 * i + 1) * 4 + (2 * j)] = Jet4(0.0) - 2.0 * imH[i][j];
        }
    };
    m.symmetry.kind = SymmetryKind::NoReduction;
    m.symmetry.radial_min = -std::numeric_limits<double>::infinity();
    m.extra_domain_check = [](const Vec4& x) {
      return std::fabs(x[0]) < 50 && std::fabs(x[1]) < 50 && std::fabs(x[2]) < 50 &&
             std::fabs(x[3]) < 50;
    };
    m.orientation = d.orientation ? d.orientation : 1;
    m.euler_characteristic = 3;
    m.euler_known = true;
    cm.topology = {true, 3, 1, 2, 1, false};
    m.calibration = {{"kahler_potential_scale", 1.0}};
    return cm;
  }

  fail(errc::unsupported_parameters, "unknown metric family: " + d.family);
}

std::optional<double> exact_prediction(const CatalogMetric& m, Invariant which) {
  const std::string& f = m.descriptor.family;
  const double beta = m.descriptor.beta;
  const double pi2 = kPi * kPi;

  if (m.topology.known && (f == "edge_s4" || f == "pedersen_abreu" ||
                           f == "lebrun_gibbons_hawking" || f == "fubini_study")) {
    const auto& t = m.topology;
    const double gb = t.chi_m - (1 - beta) * t.chi_sigma;
    const double sig = t.tau_m - (1.0 / 3.0) * (1 - beta * beta) * t.sigma_sq;
    switch (which) {
      case Invariant::GaussBonnet: return gb;
      case Invariant::Signature: return sig;
      case Invariant::WplusTotal: return 12 * pi2 * sig;  // W₋ ≡ 0 for these families
      default: return std::nullopt;
    }
  }
  if (f == "eguchi_hanson") {
    const double cover = m.field.psi_period / (2 * kPi);
    if (which == Invariant::RiemTotal || which == Invariant::WplusTotal) return 12 * pi2 * cover;
    return std::nullopt;
  }
  if (f == "taub_nut" || f == "multi_taub_nut") {
    const double n = double(m.field.euler_characteristic);
    if (which == Invariant::RiemTotal || which == Invariant::WplusTotal) return 8 * pi2 * n;
    return std::nullopt;
  }
  if (f == "flat") {
    if (which == Invariant::GaussBonnet || which == Invariant::Signature) return 0.0;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> catalog_family_names() {
  return {"edge_s4",   "pedersen_abreu", "lebrun_gibbons_hawking", "eguchi_hanson",
          "taub_nut",  "multi_taub_nut", "fubini_study",           "flat"};
}

}  // namespace edgecone
