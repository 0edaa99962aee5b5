#include "edgecone/edgecone.h"

#include <cmath>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "../core/cone_profile.hpp"
#include "../core/geometry_catalog.hpp"
#include "../core/metric_engine.hpp"
#include "../core/quadrature.hpp"
#include "../core/status.hpp"
#include "../core/topology.hpp"

using nlohmann::json;
namespace ec = edgecone;

struct edgecone_metric {
  ec::CatalogMetric cm;
};

namespace {

edgecone_status map_code(ec::errc c) {
  switch (c) {
    case ec::errc::ok: return EDGECONE_OK;
    case ec::errc::invalid_argument: return EDGECONE_EINVAL;
    case ec::errc::unsupported_parameters: return EDGECONE_EUNSUPPORTED;
    case ec::errc::domain_violation: return EDGECONE_EDOMAIN;
    case ec::errc::non_positive_definite: return EDGECONE_ENONPOSDEF;
    case ec::errc::asymmetry_exceeded: return EDGECONE_EASYMMETRY;
    case ec::errc::derivative_noise: return EDGECONE_EDERIVNOISE;
    case ec::errc::budget_exceeded: return EDGECONE_EBUDGET;
    case ec::errc::quadrature_failure: return EDGECONE_EQUADFAIL;
    case ec::errc::tail_bound_unavailable: return EDGECONE_ETAILBOUND;
    case ec::errc::no_alf_for_e_type: return EDGECONE_ENOALF;
    case ec::errc::non_integral_signature: return EDGECONE_ENONINTEGRAL;
    case ec::errc::internal: return EDGECONE_EINTERNAL;
  }
  return EDGECONE_EINTERNAL;
}

template <typename Fn>
edgecone_status guarded(Fn&& fn) {
  try {
    fn();
    return EDGECONE_OK;
  } catch (const ec::Error& e) {
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    return EDGECONE_EINTERNAL;
  } catch (const std::exception&) {
    return EDGECONE_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill_report(const ec::IntegralReport& r, edgecone_integral_report* out) {
  std::memset(out, 0, sizeof(*out));
  out->value = r.value;
  out->abs_error = r.abs_error_estimate;
  out->has_predicted = r.predicted.has_value();
  out->predicted = r.predicted.value_or(0.0);
  out->residual = r.residual();
  out->n_evals = r.n_evals;
  out->budget_exhausted = r.budget_exhausted;
  std::string subs;
  for (const auto& s : r.substitutions_used) {
    if (!subs.empty()) subs += ",";
    subs += s;
  }
  std::snprintf(out->substitutions, sizeof(out->substitutions), "%s", subs.c_str());
}

ec::EdgeConeTopology convert_topology(const edgecone_edge_topology* t) {
  ec::EdgeConeTopology out;
  out.chi_m = t->chi_m;
  out.tau_m = t->tau_m;
  out.chi_sigma = t->chi_sigma;
  out.sigma_sq = t->sigma_sq;
  out.totally_real = t->totally_real != 0;
  if (t->beta_is_exact)
    out.beta = ec::BetaValue::from_rational(t->beta.num, t->beta.den);
  else
    out.beta = ec::BetaValue::from_double(t->beta_value);
  return out;
}

void fill_scalar(const ec::ScalarResult& s, edgecone_scalar_result* out) {
  out->value = s.value;
  out->is_exact = s.is_exact;
  out->exact = {s.exact.num, s.exact.den};
}

}  // namespace

extern "C" {

const char* edgecone_status_str(edgecone_status s) {
  switch (s) {
    case EDGECONE_OK: return "ok";
    case EDGECONE_EINVAL: return ec::errc_name(ec::errc::invalid_argument);
    case EDGECONE_EUNSUPPORTED: return ec::errc_name(ec::errc::unsupported_parameters);
    case EDGECONE_EDOMAIN: return ec::errc_name(ec::errc::domain_violation);
    case EDGECONE_ENONPOSDEF: return ec::errc_name(ec::errc::non_positive_definite);
    case EDGECONE_EASYMMETRY: return ec::errc_name(ec::errc::asymmetry_exceeded);
    case EDGECONE_EDERIVNOISE: return ec::errc_name(ec::errc::derivative_noise);
    case EDGECONE_EBUDGET: return ec::errc_name(ec::errc::budget_exceeded);
    case EDGECONE_EQUADFAIL: return ec::errc_name(ec::errc::quadrature_failure);
    case EDGECONE_ETAILBOUND: return ec::errc_name(ec::errc::tail_bound_unavailable);
    case EDGECONE_ENOALF: return ec::errc_name(ec::errc::no_alf_for_e_type);
    case EDGECONE_ENONINTEGRAL: return ec::errc_name(ec::errc::non_integral_signature);
    case EDGECONE_EINTERNAL: return ec::errc_name(ec::errc::internal);
  }
  return "unknown";
}

const char* edgecone_version(void) { return "0.1.0"; }

void edgecone_string_free(char* s) { delete[] s; }

edgecone_status edgecone_metric_create(const edgecone_metric_params* params,
                                       edgecone_metric** out) {
  if (!params || !params->family || !out) return EDGECONE_EINVAL;
  return guarded([&] {
    ec::FamilyDescriptor d;
    d.family = params->family;
    d.beta = params->beta > 0 ? params->beta : 1.0;
    d.psi_period = params->psi_period;
    d.orientation = params->orientation;
    d.numeric_derivatives = params->numeric_derivatives != 0;
    if (params->centers && params->n_centers > 0)
      d.centers.assign(params->centers, params->centers + params->n_centers);
    auto* handle = new edgecone_metric{ec::make_metric(d)};
    *out = handle;
  });
}

void edgecone_metric_free(edgecone_metric* m) { delete m; }

edgecone_status edgecone_metric_info_json(const edgecone_metric* m, char** out) {
  if (!m || !out) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::CatalogMetric& cm = m->cm;
    json j;
    j["family"] = cm.descriptor.family;
    j["beta"] = cm.field.beta;
    if (cm.field.psi_period > 0) j["psi_period"] = cm.field.psi_period;
    if (!cm.descriptor.centers.empty()) j["centers"] = cm.descriptor.centers;
    j["orientation"] = cm.field.orientation;
    j["deriv_mode"] = cm.field.deriv_mode == ec::DerivMode::Analytic ? "analytic" : "numeric_fd";
    switch (cm.field.symmetry.kind) {
      case ec::SymmetryKind::CohomogeneityOne: j["symmetry"] = "cohomogeneity_one"; break;
      case ec::SymmetryKind::Axisymmetric2D: j["symmetry"] = "axisymmetric_2d"; break;
      case ec::SymmetryKind::NoReduction: j["symmetry"] = "none"; break;
    }
    if (cm.field.euler_known) j["euler_characteristic"] = cm.field.euler_characteristic;
    if (cm.topology.known) {
      j["topology"] = {{"chi_m", cm.topology.chi_m},
                       {"tau_m", cm.topology.tau_m},
                       {"chi_sigma", cm.topology.chi_sigma},
                       {"sigma_sq", cm.topology.sigma_sq}};
    }
    json cal = json::object();
    for (const auto& c : cm.field.calibration) cal[c.name] = c.value;
    j["calibration"] = cal;
    json pred = json::object();
    for (auto w : {ec::Invariant::GaussBonnet, ec::Invariant::Signature,
                   ec::Invariant::WplusTotal, ec::Invariant::RiemTotal}) {
      if (auto p = ec::exact_prediction(cm, w)) pred[ec::invariant_name(w)] = *p;
    }
    j["predictions"] = pred;
    *out = dup_string(j.dump());
  });
}

edgecone_status edgecone_metric_invariants(const edgecone_metric* m, const double point[4],
                                           edgecone_point_invariants* out) {
  if (!m || !point || !out) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::CurvatureData cd =
        ec::curvature_at(m->cm.field, {point[0], point[1], point[2], point[3]});
    out->scalar = cd.densities.s;
    out->ricci0_sq = cd.densities.ricci0_sq;
    out->wplus_sq = cd.densities.wplus_sq;
    out->wminus_sq = cd.densities.wminus_sq;
    out->riem_sq = cd.densities.riem_sq;
    out->vol_density = cd.densities.vol_density;
    out->symmetry_residual = cd.symmetry_residual;
    out->deriv_error = cd.deriv_error;
  });
}

edgecone_status edgecone_integrate(const edgecone_metric* m, const char* which,
                                   const edgecone_quad_options* opt,
                                   edgecone_integral_report* out) {
  if (!m || !which || !out) return EDGECONE_EINVAL;
  const auto inv = ec::invariant_from_name(which);
  if (!inv) return EDGECONE_EINVAL;
  ec::QuadratureSpec spec;
  if (opt) {
    spec.rel_tol = opt->rel_tol;
    spec.max_evals = opt->max_evals;
  }
  edgecone_status rc = guarded([&] {
    ec::IntegralReport r = ec::integrate_invariant(m->cm.field, *inv, spec);
    r.predicted = ec::exact_prediction(m->cm, *inv);
    fill_report(r, out);
  });
  if (rc == EDGECONE_OK && out->budget_exhausted) return EDGECONE_EBUDGET;
  return rc;
}

edgecone_status edgecone_boundary_term(const edgecone_metric* m, double radius,
                                       const edgecone_quad_options* opt,
                                       edgecone_integral_report* out) {
  if (!m || !out) return EDGECONE_EINVAL;
  ec::QuadratureSpec spec;
  if (opt) {
    spec.rel_tol = opt->rel_tol;
    spec.max_evals = opt->max_evals;
  }
  edgecone_status rc = guarded([&] {
    ec::IntegralReport r = ec::boundary_term(m->cm.field, radius, spec);
    fill_report(r, out);
  });
  if (rc == EDGECONE_OK && out->budget_exhausted) return EDGECONE_EBUDGET;
  return rc;
}

edgecone_status edgecone_gauss_bonnet_boundary(const edgecone_metric* m, double radius,
                                               const edgecone_quad_options* opt,
                                               edgecone_integral_report* out) {
  if (!m || !out) return EDGECONE_EINVAL;
  ec::QuadratureSpec spec;
  if (opt) {
    spec.rel_tol = opt->rel_tol;
    spec.max_evals = opt->max_evals;
  }
  edgecone_status rc = guarded([&] {
    ec::IntegralReport r = ec::gauss_bonnet_with_boundary(m->cm.field, radius, spec);
    fill_report(r, out);
  });
  if (rc == EDGECONE_OK && out->budget_exhausted) return EDGECONE_EBUDGET;
  return rc;
}

edgecone_status edgecone_cone_profile_unit_integral(double beta, double* out) {
  if (!out) return EDGECONE_EINVAL;
  return guarded([&] { *out = ec::cone_profile(beta).unit_integral(); });
}

edgecone_status edgecone_cone_profile_F(double beta, double t, double* F, double* Fprime) {
  if (!F || !Fprime) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::ConeProfile p = ec::cone_profile(beta);
    *F = p.F(t);
    *Fprime = p.Fprime(t);
  });
}

edgecone_status edgecone_smoothed_cone_total_curvature(double beta, double rel_tol,
                                                       edgecone_integral_report* out) {
  if (!out) return EDGECONE_EINVAL;
  return guarded([&] { fill_report(ec::smoothed_cone_total_curvature(beta, rel_tol), out); });
}

edgecone_status edgecone_defect(const edgecone_edge_topology* t, int sign,
                                edgecone_scalar_result* out) {
  if (!t || !out) return EDGECONE_EINVAL;
  return guarded([&] { fill_scalar(ec::defect(convert_topology(t), sign), out); });
}

edgecone_status edgecone_predicted_gauss_bonnet(const edgecone_edge_topology* t,
                                                edgecone_scalar_result* out) {
  if (!t || !out) return EDGECONE_EINVAL;
  return guarded([&] { fill_scalar(ec::predicted_gauss_bonnet(convert_topology(t)), out); });
}

edgecone_status edgecone_predicted_signature(const edgecone_edge_topology* t,
                                             edgecone_scalar_result* out) {
  if (!t || !out) return EDGECONE_EINVAL;
  return guarded([&] { fill_scalar(ec::predicted_signature(convert_topology(t)), out); });
}

edgecone_status edgecone_hitchin_thorpe(const edgecone_edge_topology* t,
                                        edgecone_ht_verdict* out) {
  if (!t || !out) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::HTVerdict v = ec::hitchin_thorpe_check(convert_topology(t));
    out->lhs_plus = v.lhs_plus;
    out->rhs_plus = v.rhs_plus;
    out->lhs_minus = v.lhs_minus;
    out->rhs_minus = v.rhs_minus;
    out->holds_plus = v.holds_plus;
    out->holds_minus = v.holds_minus;
    out->equality_plus = v.equality_plus;
    out->equality_minus = v.equality_minus;
    out->exact = v.exact;
  });
}

edgecone_status edgecone_large_beta_obstruction(int chi_sigma, int sigma_sq, int* obstructed,
                                                char reason[160]) {
  if (!obstructed) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::ObstructionVerdict v = ec::large_beta_obstruction(chi_sigma, sigma_sq);
    *obstructed = v.obstructed;
    if (reason) std::snprintf(reason, 160, "%s", v.reason.c_str());
  });
}

edgecone_status edgecone_csc_sum(int64_t p, double* direct, edgecone_rational* closed_form) {
  if (!direct) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::CscSumResult r = ec::csc_sum(p);
    *direct = r.direct;
    if (closed_form) *closed_form = {r.closed_form.num, r.closed_form.den};
  });
}

edgecone_status edgecone_g_signature_contribution(const double* alphas, const double* betas,
                                                  int n_isolated, const double* thetas,
                                                  const double* sigma_hat_sqs, int n_surfaces,
                                                  double* out) {
  if (!out || (n_isolated > 0 && (!alphas || !betas)) ||
      (n_surfaces > 0 && (!thetas || !sigma_hat_sqs)))
    return EDGECONE_EINVAL;
  return guarded([&] {
    std::vector<ec::IsolatedFixedPoint> pts;
    for (int i = 0; i < n_isolated; ++i) pts.push_back({alphas[i], betas[i]});
    std::vector<ec::FixedSurface> surfs;
    for (int i = 0; i < n_surfaces; ++i) surfs.push_back({thetas[i], sigma_hat_sqs[i]});
    *out = ec::g_signature_contribution(pts, surfs);
  });
}

edgecone_status edgecone_orbifold_signature_compute(int64_t tau_x,
                                                    edgecone_rational sigma_hat_sq, int64_t p,
                                                    edgecone_orbifold_signature* out) {
  if (!out) return EDGECONE_EINVAL;
  edgecone_status rc = guarded([&] {
    const ec::OrbifoldSignatureResult r =
        ec::orbifold_signature(tau_x, ec::Rational(sigma_hat_sq.num, sigma_hat_sq.den), p);
    out->tau_m = {r.tau_m.num, r.tau_m.den};
    out->integral = r.integral;
    out->rest2_lhs = {r.rest2_lhs.num, r.rest2_lhs.den};
    out->rest2_rhs = {r.rest2_rhs.num, r.rest2_rhs.den};
  });
  if (rc == EDGECONE_OK && !out->integral) return EDGECONE_ENONINTEGRAL;
  return rc;
}

edgecone_status edgecone_instanton_total(const char* name, const char* asym,
                                         edgecone_rational* coeff_8pi2, double* value) {
  if (!name || !value) return EDGECONE_EINVAL;
  const auto d = ec::parse_instanton_name(name, asym ? asym : "");
  if (!d) return EDGECONE_EINVAL;
  return guarded([&] {
    const ec::InstantonTotal t = ec::instanton_total(*d);
    if (coeff_8pi2) *coeff_8pi2 = {t.coeff_8pi2.num, t.coeff_8pi2.den};
    *value = t.value;
  });
}

edgecone_status edgecone_instanton_table_json(int a_max, int d_max, char** out) {
  if (!out) return EDGECONE_EINVAL;
  return guarded([&] {
    json rows = json::array();
    for (const auto& r : ec::instanton_table(a_max, d_max)) {
      json row;
      row["dynkin"] = r.dynkin;
      row["group"] = r.group_name;
      row["gamma_order"] = r.gamma_order;
      row["chi"] = r.chi;
      row["ale_coeff_8pi2"] = r.ale_coeff.str();
      row["ale_value"] = r.ale_coeff.value() * 8 * M_PI * M_PI;
      if (r.alf_coeff) {
        row["alf_coeff_8pi2"] = r.alf_coeff->str();
        row["alf_value"] = r.alf_coeff->value() * 8 * M_PI * M_PI;
      }
      rows.push_back(row);
    }
    *out = dup_string(rows.dump(2));
  });
}

edgecone_status edgecone_instanton_table_csv(int a_max, int d_max, char** out) {
  if (!out) return EDGECONE_EINVAL;
  return guarded([&] {
    std::ostringstream os;
    os << "dynkin,group,gamma_order,chi,ale_coeff_8pi2,ale_value,alf_coeff_8pi2,alf_value\n";
    for (const auto& r : ec::instanton_table(a_max, d_max)) {
      os << r.dynkin << ',' << r.group_name << ',' << r.gamma_order << ',' << r.chi << ','
         << r.ale_coeff.str() << ',' << r.ale_coeff.value() * 8 * M_PI * M_PI << ',';
      if (r.alf_coeff)
        os << r.alf_coeff->str() << ',' << r.alf_coeff->value() * 8 * M_PI * M_PI;
      else
        os << ',';
      os << '\n';
    }
    *out = dup_string(os.str());
  });
}

}  // extern "C"
