#include "metric_engine.hpp"

#include <cmath>

#include "status.hpp"

namespace edgecone {

namespace {

struct MetricJets {
  Mat4 g;
  std::array<Mat4, 4> dg;                  // dg[k](i,j) = ∂_k g_ij
  std::array<std::array<Mat4, 4>, 4> ddg;  // ddg[k][l](i,j) = ∂_k ∂_l g_ij
  double deriv_error = 0.0;
  double step_score = 0.0;  // truncation estimate + roundoff model, for step choice
};

MetricJets jets_analytic(const MetricField& m, const Vec4& x) {
  std::array<Jet4, 16> j;
  m.jet_eval(x, j);
  MetricJets out;
  for (int i = 0; i < 4; ++i)
    for (int n = 0; n < 4; ++n) {
      const Jet4& c = j[i * 4 + n];
      out.g(i, n) = c.v;
      for (int k = 0; k < 4; ++k) out.dg[k](i, n) = c.d[k];
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) out.ddg[k][l](i, n) = c.hess(k, l);
    }
  return out;
}

// Richardson-extrapolated central differences of the value path; two levels.
MetricJets jets_fd(const MetricField& m, const Vec4& x, double base_step) {
  auto value = [&m](const Vec4& p) { return m.eval(p); };

  auto first_at = [&](int k, double h) {
    Vec4 a = x, b = x;
    a[k] += h;
    b[k] -= h;
    const Mat4 gp = value(a), gm = value(b);
    Mat4 d;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) d(i, j) = (gp(i, j) - gm(i, j)) / (2 * h);
    return d;
  };
  auto second_diag_at = [&](int k, double h, const Mat4& g0) {
    Vec4 a = x, b = x;
    a[k] += h;
    b[k] -= h;
    const Mat4 gp = value(a), gm = value(b);
    Mat4 d;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) d(i, j) = (gp(i, j) - 2 * g0(i, j) + gm(i, j)) / (h * h);
    return d;
  };
  auto second_cross_at = [&](int k, int l, double h) {
    Vec4 pp = x, pm = x, mp = x, mm = x;
    pp[k] += h; pp[l] += h;
    pm[k] += h; pm[l] -= h;
    mp[k] -= h; mp[l] += h;
    mm[k] -= h; mm[l] -= h;
    const Mat4 a = value(pp), b = value(pm), c = value(mp), d = value(mm);
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        r(i, j) = (a(i, j) - b(i, j) - c(i, j) + d(i, j)) / (4 * h * h);
    return r;
  };
  // two extrapolation levels: D(h), D(h/2), D(h/4) combine to O(h⁶), and the
  // difference of the two O(h⁴) extrapolants estimates the remaining error
  auto richardson6 = [](const Mat4& dh, const Mat4& dh2, const Mat4& dh4, double& err) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double e1 = (4 * dh2(i, j) - dh(i, j)) / 3.0;
        const double e2 = (4 * dh4(i, j) - dh2(i, j)) / 3.0;
        r(i, j) = (16 * e2 - e1) / 15.0;
        err = std::max(err, std::fabs(e2 - e1));
      }
    return r;
  };

  MetricJets out;
  out.g = value(x);
  const double scale = std::max(1.0, std::fabs(x[0]));
  const double h = base_step * scale;
  for (int k = 0; k < 4; ++k)
    out.dg[k] = richardson6(first_at(k, h), first_at(k, h / 2), first_at(k, h / 4),
                            out.deriv_error);
  for (int k = 0; k < 4; ++k) {
    out.ddg[k][k] = richardson6(second_diag_at(k, h, out.g), second_diag_at(k, h / 2, out.g),
                                second_diag_at(k, h / 4, out.g), out.deriv_error);
    for (int l = k + 1; l < 4; ++l) {
      out.ddg[k][l] = richardson6(second_cross_at(k, l, h), second_cross_at(k, l, h / 2),
                                  second_cross_at(k, l, h / 4), out.deriv_error);
      out.ddg[l][k] = out.ddg[k][l];
    }
  }
  // roundoff in a centered second difference is ~ eps·|g|/h², worst at the
  // innermost level h/4; together with the truncation estimate this ranks
  // the candidate steps on the adaptation ladder
  out.step_score = out.deriv_error + 8.0 * 2.2e-16 * out.g.max_abs() / (h * h / 16.0);
  return out;
}

CurvatureData curvature_from_jets(const MetricJets& mj, const MetricField& m) {
  CurvatureData cd;
  cd.g = mj.g;
  cd.g_inv = spd_inverse(mj.g);
  cd.deriv_error = mj.deriv_error;

  // lowered Christoffels Γ_{k,ij}, then Γ^k_{ij}
  std::array<Mat4, 4> gamma_low;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        gamma_low[k](i, j) = 0.5 * (mj.dg[i](j, k) + mj.dg[j](i, k) - mj.dg[k](i, j));
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (int l = 0; l < 4; ++l) s += cd.g_inv(k, l) * gamma_low[l](i, j);
        cd.gamma[k](i, j) = s;
      }

  // R_ρσμν = ½(∂μ∂σ g_νρ + ∂ν∂ρ g_μσ − ∂μ∂ρ g_νσ − ∂ν∂σ g_μρ)
  //        + g^{κτ}(Γ_{κ,μσ}Γ_{τ,νρ} − Γ_{κ,νσ}Γ_{τ,μρ})
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double v = 0.5 * (mj.ddg[mu][s](nu, r) + mj.ddg[nu][r](mu, s) - mj.ddg[mu][r](nu, s) -
                            mj.ddg[nu][s](mu, r));
          for (int ka = 0; ka < 4; ++ka)
            for (int ta = 0; ta < 4; ++ta)
              v += cd.g_inv(ka, ta) * (gamma_low[ka](mu, s) * gamma_low[ta](nu, r) -
                                       gamma_low[ka](nu, s) * gamma_low[ta](mu, r));
          cd.riemann(r, s, mu, nu) = v;
        }

  for (int s = 0; s < 4; ++s)
    for (int nu = 0; nu < 4; ++nu) {
      double v = 0;
      for (int r = 0; r < 4; ++r)
        for (int mu = 0; mu < 4; ++mu) v += cd.g_inv(r, mu) * cd.riemann(r, s, mu, nu);
      cd.ricci(s, nu) = v;
    }

  // magnitude of the terms that cancel in R; floors the residual scale so
  // that flat metrics in curvilinear charts are not flagged as noisy
  double max_ddg = 0, max_glow = 0, max_ginv = 0;
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) max_ddg = std::max(max_ddg, mj.ddg[k][l].max_abs());
  for (int k = 0; k < 4; ++k) max_glow = std::max(max_glow, gamma_low[k].max_abs());
  max_ginv = cd.g_inv.max_abs();
  const double formula_scale = max_ddg + 16.0 * max_glow * max_glow * max_ginv;

  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          worst = std::max(worst, std::fabs(cd.riemann(i, j, k, l) + cd.riemann(j, i, k, l)));
          worst = std::max(worst, std::fabs(cd.riemann(i, j, k, l) + cd.riemann(i, j, l, k)));
          worst = std::max(worst, std::fabs(cd.riemann(i, j, k, l) - cd.riemann(k, l, i, j)));
          worst = std::max(worst, std::fabs(cd.riemann(i, j, k, l) + cd.riemann(i, k, l, j) +
                                            cd.riemann(i, l, j, k)));
        }
  cd.symmetry_residual = worst / std::max(cd.riemann.max_abs(), std::max(formula_scale, 1e-300));

  cd.frame = orthonormal_frame(cd.g, m.orientation);
  cd.op = curvature_operator(cd.riemann, cd.frame, 1e-6, formula_scale);
  const double vol = std::sqrt(sym_det(cd.g));
  cd.densities = invariant_densities(cd.op, cd.ricci, cd.g, cd.g_inv, vol);
  cd.densities.riem_sq = riemann_full_contraction(cd.riemann, cd.g_inv);
  return cd;
}

}  // namespace

double riemann_full_contraction(const Riem4& r, const Mat4& g_inv) {
  // raise one index at a time
  static thread_local Riem4 t1, t2, t3, t4;
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = 0;
          for (int i = 0; i < 4; ++i) s += g_inv(a, i) * r(i, j, k, l);
          t1(a, j, k, l) = s;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = 0;
          for (int j = 0; j < 4; ++j) s += g_inv(b, j) * t1(a, j, k, l);
          t2(a, b, k, l) = s;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int l = 0; l < 4; ++l) {
          double s = 0;
          for (int k = 0; k < 4; ++k) s += g_inv(c, k) * t2(a, b, k, l);
          t3(a, b, c, l) = s;
        }
  double total = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0;
          for (int l = 0; l < 4; ++l) s += g_inv(d, l) * t3(a, b, c, l);
          total += s * r(a, b, c, d);
        }
  return total;
}

CurvatureData curvature_at(const MetricField& m, const Vec4& x) {
  if (!m.in_domain(x)) fail(errc::domain_violation, m.name + ": point outside chart domain");

  if (m.deriv_mode == DerivMode::Analytic) {
    CurvatureData cd = curvature_from_jets(jets_analytic(m, x), m);
    if (cd.symmetry_residual > 1e-7)
      fail(errc::derivative_noise, m.name + ": riemann symmetry residual above 1e-7");
    return cd;
  }

  // NumericFD: pick the step on a ladder by the estimated total derivative
  // error (the antisymmetry cancellations are structural in the assembly, so
  // the residual alone cannot see finite-difference noise), then gate on the
  // symmetry residual as specified.
  const double ladder[6] = {1.0, 2.0, 4.0, 8.0, 16.0, 0.5};
  MetricJets best_jets;
  double best_score = std::numeric_limits<double>::infinity();
  for (double f : ladder) {
    MetricJets mj = jets_fd(m, x, m.fd_base_step * f);
    if (mj.step_score < best_score) {
      best_score = mj.step_score;
      best_jets = mj;
    }
  }
  CurvatureData cd = curvature_from_jets(best_jets, m);
  if (cd.symmetry_residual > 1e-7)
    fail(errc::derivative_noise, m.name + ": finite-difference noise irreducible above tolerance");
  return cd;
}

HypersurfaceData hypersurface_at(const MetricField& m, double radial, const Vec4& angular) {
  Vec4 x = angular;
  x[0] = radial;
  const CurvatureData cd = curvature_at(m, x);

  // need ∂_i g^{00}; recover ∂g from the jets (value path suffices in FD mode
  // since curvature_at has already validated the derivatives)
  MetricJets mj = (m.deriv_mode == DerivMode::Analytic) ? jets_analytic(m, x)
                                                        : jets_fd(m, x, m.fd_base_step);

  const double g00_up = cd.g_inv(0, 0);
  const double nn = 1.0 / std::sqrt(g00_up);  // n_j = δ_j0 · nn, outward (+x0)

  // ∇_i n_j = ∂_i n_j − Γ^k_{ij} n_k
  Mat4 grad_n;
  for (int i = 0; i < 4; ++i) {
    double dg00_up = 0;  // ∂_i g^{00} = −g^{0a} g^{0b} ∂_i g_ab
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dg00_up -= cd.g_inv(0, a) * cd.g_inv(0, b) * mj.dg[i](a, b);
    const double dnn = -0.5 * std::pow(g00_up, -1.5) * dg00_up;
    for (int j = 0; j < 4; ++j) grad_n(i, j) = (j == 0 ? dnn : 0.0) - cd.gamma[0](i, j) * nn;
  }

  HypersurfaceData out;
  for (int i = 0; i < 4; ++i) out.unit_normal[i] = cd.g_inv(i, 0) * nn;

  // orthonormal tangent frame from the coordinate vectors ∂_1, ∂_2, ∂_3
  auto inner = [&cd](const Vec4& a, const Vec4& b) {
    double s = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += cd.g(i, j) * a[i] * b[j];
    return s;
  };
  for (int a = 0; a < 3; ++a) {
    Vec4 v{};
    v[a + 1] = 1.0;
    for (int b = 0; b < a; ++b) {
      const double c = inner(v, out.tangent_frame[b]);
      for (int i = 0; i < 4; ++i) v[i] -= c * out.tangent_frame[b][i];
    }
    const double n = std::sqrt(inner(v, v));
    for (int i = 0; i < 4; ++i) v[i] /= n;
    out.tangent_frame[a] = v;
  }

  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double s = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          s += out.tangent_frame[a][i] * out.tangent_frame[b][j] * grad_n(i, j);
      out.second_fundamental_form(a, b) = s;
    }
  // symmetrize away roundoff
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double s = 0.5 * (out.second_fundamental_form(a, b) + out.second_fundamental_form(b, a));
      out.second_fundamental_form(a, b) = s;
      out.second_fundamental_form(b, a) = s;
    }

  out.rhat = boundary_rhat(cd.riemann, out.tangent_frame);

  // induced 3-metric determinant in chart coordinates x1..x3
  Mat3 h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = cd.g(i + 1, j + 1);
  out.area_density = std::sqrt(h.det());
  return out;
}

}  // namespace edgecone
