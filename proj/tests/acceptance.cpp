// Acceptance suite: one integration check per shipped guarantee, each with a
// pinned tolerance and runtime budget, driven through the public C API.
//
// Usage: acceptance [N ...]   (run criteria N; default all)
// Output: one PASS/FAIL line per criterion; exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "edgecone/edgecone.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  int id;
  std::string label;
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Handle {
  edgecone_metric* m = nullptr;
  ~Handle() { edgecone_metric_free(m); }
};

bool make(const char* family, double beta, Handle& h, double psi_period = 0.0,
          const std::vector<double>& centers = {}, int orientation = 0) {
  edgecone_metric_params p{};
  p.family = family;
  p.beta = beta;
  p.psi_period = psi_period;
  p.centers = centers.empty() ? nullptr : centers.data();
  p.n_centers = int(centers.size());
  p.orientation = orientation;
  return edgecone_metric_create(&p, &h.m) == EDGECONE_OK;
}

void note(Criterion& c, bool ok, const std::string& msg) {
  if (!ok) c.pass = false;
  if (!ok || c.detail.empty()) {
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += (ok ? "" : "FAILED: ") + msg;
  }
}

// --- criterion 1: edge Gauss-Bonnet equals 2β -------------------------------
void criterion_1(Criterion& c) {
  for (double beta : {0.3, 0.5, 1.0, 1.5}) {
    const double t0 = now_s();
    Handle h;
    if (!make("edge_s4", beta, h)) return note(c, false, "metric creation failed");
    edgecone_integral_report r{};
    if (edgecone_integrate(h.m, "gauss_bonnet", nullptr, &r) != EDGECONE_OK)
      return note(c, false, "integration failed");
    const double dev = std::fabs(r.value - 2 * beta);
    const double dt = now_s() - t0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "beta=%.2f |I-2beta|=%.2e (tol 1e-6) in %.1fs", beta, dev, dt);
    note(c, dev <= 1e-6 && dt < 10.0, buf);
  }
}

// --- criterion 2: edge signature equals (2+β²)/3 ----------------------------
void criterion_2(Criterion& c) {
  for (double beta : {0.25, 0.5, 1.0, 1.5, 1.9}) {
    const double t0 = now_s();
    Handle h;
    if (!make("pedersen_abreu", beta, h)) return note(c, false, "metric creation failed");
    edgecone_integral_report r{};
    if (edgecone_integrate(h.m, "signature", nullptr, &r) != EDGECONE_OK)
      return note(c, false, "integration failed");
    const double target = (2 + beta * beta) / 3.0;
    const double rel = std::fabs(r.value - target) / target;
    const double dt = now_s() - t0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "beta=%.2f rel=%.2e (tol 1e-4) in %.1fs", beta, rel, dt);
    note(c, rel <= 1e-4 && dt < 60.0, buf);
  }
}

// --- criterion 3: the Einstein property of the β-family ---------------------
void criterion_3(Criterion& c) {
  for (double beta : {0.25, 0.5, 1.0, 1.5, 1.9}) {
    Handle h;
    if (!make("pedersen_abreu", beta, h)) return note(c, false, "metric creation failed");
    const double s_expect = 6 * beta * beta * (2 - beta);
    double max_r0 = 0, max_s_rel = 0;
    for (int i = 0; i < 100; ++i) {
      const double a = (i + 0.5) / 100.0;
      const double b = std::fmod(0.754877666 * (i + 1), 1.0);
      const double pt[4] = {0.05 * std::pow(120.0, a), 2 * kPi * b,
                            0.2 + (kPi - 0.4) * std::fmod(a + b, 1.0), 1.1};
      edgecone_point_invariants inv{};
      if (edgecone_metric_invariants(h.m, pt, &inv) != EDGECONE_OK)
        return note(c, false, "pointwise evaluation failed");
      max_r0 = std::max(max_r0, std::sqrt(std::max(0.0, inv.ricci0_sq)));
      max_s_rel = std::max(max_s_rel, std::fabs(inv.scalar - s_expect) / s_expect);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "beta=%.2f max|r0|=%.1e (tol 1e-6) s_rel=%.1e (tol 1e-5)",
                  beta, max_r0, max_s_rel);
    note(c, max_r0 < 1e-6 && max_s_rel <= 1e-5, buf);
  }
}

// --- criterion 4: instanton curvature totals --------------------------------
void criterion_4(Criterion& c) {
  const double t0 = now_s();
  struct Row {
    const char* family;
    std::vector<double> centers;
    double target;
  };
  const Row rows[] = {{"eguchi_hanson", {}, 12 * kPi * kPi},
                      {"taub_nut", {}, 8 * kPi * kPi},
                      {"multi_taub_nut", {-0.5, 0.5}, 16 * kPi * kPi}};
  for (const Row& row : rows) {
    Handle h;
    if (!make(row.family, 1.0, h, 0.0, row.centers))
      return note(c, false, "metric creation failed");
    edgecone_quad_options q{};
    if (row.centers.size() > 1) q.rel_tol = 1e-4;  // 2D job; 1e-3 acceptance tolerance
    edgecone_integral_report r{};
    if (edgecone_integrate(h.m, "riem_total", &q, &r) != EDGECONE_OK)
      return note(c, false, std::string(row.family) + " integration failed");
    const double rel = std::fabs(r.value - row.target) / row.target;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s rel=%.2e (tol 1e-3)", row.family, rel);
    note(c, rel <= 1e-3, buf);
  }
  const double dt = now_s() - t0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "total %.1fs (budget 300s)", dt);
  note(c, dt < 300.0, buf);
}

// --- criterion 5: Gauss-Bonnet with boundary --------------------------------
void criterion_5(Criterion& c) {
  struct Row {
    const char* family;
    double radius, target, tol;
  };
  for (const Row& row : {Row{"flat", 1.0, 1.0, 1e-9}, Row{"eguchi_hanson", 20.0, 2.0, 1e-3},
                         Row{"taub_nut", 50.0, 1.0, 1e-3}}) {
    Handle h;
    if (!make(row.family, 1.0, h)) return note(c, false, "metric creation failed");
    edgecone_integral_report r{};
    if (edgecone_gauss_bonnet_boundary(h.m, row.radius, nullptr, &r) != EDGECONE_OK)
      return note(c, false, std::string(row.family) + " failed");
    const double dev = std::fabs(r.value - row.target);
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s r=%g |I-chi|=%.2e (tol %.0e)", row.family, row.radius,
                  dev, row.tol);
    note(c, dev <= row.tol, buf);
  }
}

// --- criterion 6: cosecant-squared identity ---------------------------------
void criterion_6(Criterion& c) {
  const double t0 = now_s();
  double worst = 0;
  std::int64_t worst_p = 2;
  for (std::int64_t p = 2; p <= 10000; ++p) {
    double direct = 0;
    edgecone_rational closed{};
    if (edgecone_csc_sum(p, &direct, &closed) != EDGECONE_OK)
      return note(c, false, "csc_sum failed");
    const double cf = double(closed.num) / double(closed.den);
    const double rel = std::fabs(direct - cf) / cf;
    if (rel > worst) {
      worst = rel;
      worst_p = p;
    }
  }
  const double dt = now_s() - t0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst rel %.2e at p=%lld (tol 1e-9), %.2fs (budget 5s)", worst,
                (long long)worst_p, dt);
  note(c, worst <= 1e-9 && dt < 5.0, buf);
}

// --- criterion 7: the instanton total table, exactly ------------------------
void criterion_7(Criterion& c) {
  struct Row {
    const char* name;
    const char* asym;
    long long num, den;
  };
  // closed forms: A_k ALE (k+1)−1/(k+1), ALF k+1; D_k ALE (k+1)−1/(4k−8),
  // ALF k+1; E6/E7/E8 ALE 7−1/24, 8−1/48, 9−1/120
  const Row rows[] = {
      {"A1", "ALE", 3, 2},     {"A1", "ALF", 2, 1},    {"A2", "ALE", 8, 3},
      {"A5", "ALF", 6, 1},     {"D3", "ALE", 15, 4},   {"D4", "ALF", 5, 1},
      {"D6", "ALE", 111, 16},  {"E6", "ALE", 167, 24}, {"E7", "ALE", 383, 48},
      {"E8", "ALE", 1079, 120}};
  for (const Row& row : rows) {
    edgecone_rational coeff{};
    double v = 0;
    if (edgecone_instanton_total(row.name, row.asym, &coeff, &v) != EDGECONE_OK)
      return note(c, false, std::string(row.name) + " lookup failed");
    const bool ok = coeff.num == row.num && coeff.den == row.den;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %s = (%lld/%lld)·8π² want (%lld/%lld)", row.name, row.asym,
                  (long long)coeff.num, (long long)coeff.den, row.num, row.den);
    note(c, ok, buf);
  }
  edgecone_rational coeff{};
  double v = 0;
  note(c, edgecone_instanton_total("E7", "ALF", &coeff, &v) == EDGECONE_ENOALF,
       "E-type ALF rejected");
}

// --- criterion 8: the edge Hitchin-Thorpe checker ---------------------------
void criterion_8(Criterion& c) {
  // k-point blow-up of the plane with a cubic edge: χ = 3+k, τ = 1−k
  for (int k = 0; k <= 3; ++k) {
    edgecone_edge_topology t{};
    t.chi_m = 3 + k;
    t.tau_m = 1 - k;
    t.chi_sigma = 0;
    t.sigma_sq = 9;
    t.beta = {1, 100};
    t.beta_is_exact = 1;
    edgecone_ht_verdict v{};
    if (edgecone_hitchin_thorpe(&t, &v) != EDGECONE_OK) return note(c, false, "ht failed");
    const bool expect = (k == 0);
    char buf[120];
    std::snprintf(buf, sizeof buf, "k=%d holds_plus=%d (want %d)", k, v.holds_plus, expect);
    note(c, v.holds_plus == int(expect), buf);
  }
  // β = 1 reduces to the classical inequality: rhs = 0 exactly
  edgecone_edge_topology t{};
  t.chi_m = 11;
  t.tau_m = -7;
  t.chi_sigma = 2;
  t.sigma_sq = 5;
  t.beta = {1, 1};
  t.beta_is_exact = 1;
  edgecone_ht_verdict v{};
  if (edgecone_hitchin_thorpe(&t, &v) != EDGECONE_OK) return note(c, false, "ht failed");
  note(c, v.rhs_plus == 0.0 && v.rhs_minus == 0.0 &&
              v.holds_plus == (2 * 11 - 21 >= 0) && v.holds_minus == (2 * 11 + 21 >= 0),
       "beta=1 reduces to 2χ±3τ ≥ 0");
}

// --- criterion 9: property suites -------------------------------------------
void criterion_9(Criterion& c) {
  // (a) Riemann symmetry residuals stay below 1e-7 across the catalog
  {
    const char* fams[] = {"edge_s4", "pedersen_abreu", "eguchi_hanson", "taub_nut",
                          "fubini_study"};
    double worst = 0;
    for (const char* fam : fams) {
      Handle h;
      if (!make(fam, 0.7, h)) return note(c, false, "metric creation failed");
      for (int i = 0; i < 25; ++i) {
        const double a = (i + 0.5) / 25.0;
        double pt[4] = {0.2 + 5 * a, 1.0, 0.3 + 2.4 * std::fmod(3 * a, 1.0), 2.0};
        if (std::string(fam) == "eguchi_hanson") pt[0] += 1.0;
        if (std::string(fam) == "fubini_study") {
          pt[1] = -1 + 2 * a;
          pt[0] = 1 - a;
        }
        edgecone_point_invariants inv{};
        if (edgecone_metric_invariants(h.m, pt, &inv) != EDGECONE_OK)
          return note(c, false, "pointwise evaluation failed");
        worst = std::max(worst, inv.symmetry_residual);
      }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "symmetry residual max %.1e (tol 1e-7)", worst);
    note(c, worst < 1e-7, buf);
  }
  // (b) orientation reversal swaps the Weyl halves
  {
    Handle plus, minus;
    if (!make("eguchi_hanson", 1.0, plus, 0, {}, +1) ||
        !make("eguchi_hanson", 1.0, minus, 0, {}, -1))
      return note(c, false, "metric creation failed");
    const double pt[4] = {1.8, 0.4, 1.1, 0.8};
    edgecone_point_invariants a{}, b{};
    edgecone_metric_invariants(plus.m, pt, &a);
    edgecone_metric_invariants(minus.m, pt, &b);
    const double scale = std::max(a.wplus_sq, 1e-300);
    const bool ok = std::fabs(a.wplus_sq - b.wminus_sq) <= 1e-12 * scale &&
                    std::fabs(a.wminus_sq - b.wplus_sq) <= 1e-12 * scale;
    note(c, ok, "orientation reversal swaps |W+|^2 and |W-|^2");
  }
  // (c) conformal invariance of the |W+|^2 total across the conformal pair
  {
    for (double beta : {0.5, 1.3}) {
      Handle g0, ge;
      if (!make("lebrun_gibbons_hawking", beta, g0, 0, {0.0}) ||
          !make("pedersen_abreu", beta, ge))
        return note(c, false, "metric creation failed");
      edgecone_integral_report a{}, b{};
      if (edgecone_integrate(g0.m, "wplus_total", nullptr, &a) != EDGECONE_OK ||
          edgecone_integrate(ge.m, "wplus_total", nullptr, &b) != EDGECONE_OK)
        return note(c, false, "integration failed");
      const double gap = std::fabs(a.value - b.value);
      const double budget = std::max(a.abs_error + b.abs_error, 1e-6 * std::fabs(a.value));
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "conformal pair beta=%.1f gap=%.1e within combined error %.1e", beta, gap,
                    budget);
      note(c, gap <= budget, buf);
    }
  }
  // (d) self-duality of the Gibbons-Hawking-type members
  {
    struct Row {
      const char* fam;
      std::vector<double> centers;
    };
    for (const Row& row : {Row{"lebrun_gibbons_hawking", {0.0}},
                           Row{"lebrun_gibbons_hawking", {-0.4, 0.9}},
                           Row{"taub_nut", {}},
                           Row{"multi_taub_nut", {-0.5, 0.5}}}) {
      Handle h;
      if (!make(row.fam, 0.6, h, 0, row.centers)) return note(c, false, "metric failed");
      double worst = 0;
      for (int i = 0; i < 20; ++i) {
        const double pt[4] = {0.3 + 0.35 * i, 0.4, 0.5 + 0.1 * (i % 9), 0.8};
        edgecone_point_invariants inv{};
        if (edgecone_metric_invariants(h.m, pt, &inv) != EDGECONE_OK)
          return note(c, false, "pointwise evaluation failed");
        worst = std::max(worst, inv.wminus_sq / std::max(inv.wplus_sq, 1e-300));
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s(n=%zu) max |W-|^2/|W+|^2 = %.1e (tol 1e-8)", row.fam,
                    row.centers.size(), worst);
      note(c, worst < 1e-8, buf);
    }
  }
  // (e) curvature decay slopes over r in [10,100], pinned at the generic
  // ALE/ALF envelopes -4 / -3 with a ±0.1 window
  {
    auto slope = [&](const char* fam) {
      Handle h;
      make(fam, 1.0, h);
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int n = 20;
      for (int i = 0; i < n; ++i) {
        const double r = 10 * std::pow(10.0, double(i) / (n - 1));
        const double pt[4] = {r, 0.4, 1.1, 0.8};
        edgecone_point_invariants inv{};
        edgecone_metric_invariants(h.m, pt, &inv);
        const double x = std::log(r), y = 0.5 * std::log(inv.riem_sq);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double s_ale = slope("eguchi_hanson");
    const double s_alf = slope("taub_nut");
    char buf[200];
    std::snprintf(buf, sizeof buf, "ALF slope %.3f vs -3±0.1", s_alf);
    note(c, std::fabs(s_alf + 3.0) <= 0.1, buf);
    std::snprintf(buf, sizeof buf,
                  "ALE slope measured %.3f vs pinned -4±0.1 — the Eguchi-Hanson "
                  "instanton decays like r^-6, faster than the generic ALE envelope, "
                  "so this pinned window cannot be met (see notes/decisions ledger)",
                  s_ale);
    note(c, std::fabs(s_ale + 4.0) <= 0.1, buf);
  }
}

// --- criterion 10: the 2D cone profile --------------------------------------
void criterion_10(Criterion& c) {
  for (double beta : {0.5, 1.0, 2.0}) {
    double unit = 0;
    if (edgecone_cone_profile_unit_integral(beta, &unit) != EDGECONE_OK)
      return note(c, false, "profile failed");
    const double unit_dev = std::fabs(unit - 1.0 / beta);
    edgecone_integral_report r{};
    if (edgecone_smoothed_cone_total_curvature(beta, 1e-9, &r) != EDGECONE_OK)
      return note(c, false, "total curvature failed");
    const double dev = std::fabs(r.value - 2 * kPi * (1 - beta));
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "beta=%.1f |∫f-1/β|=%.1e (tol 1e-10), |∫K dA - 2π(1-β)|=%.1e (tol 1e-6)", beta,
                  unit_dev, dev);
    note(c, unit_dev <= 1e-10 && dev <= 1e-6, buf);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const struct {
    int id;
    const char* label;
    void (*fn)(Criterion&);
  } table[] = {
      {1, "edge Gauss-Bonnet: edge_s4(beta) integral = 2beta", criterion_1},
      {2, "edge signature: pedersen_abreu(beta) integral = (2+beta^2)/3", criterion_2},
      {3, "Einstein property: max|r0|<1e-6 and s = 6beta^2(2-beta)", criterion_3},
      {4, "instanton totals: EH 12pi^2, TN 8pi^2, mTN(2) 16pi^2", criterion_4},
      {5, "Gauss-Bonnet with boundary: flat ball, EH(20), TN(50)", criterion_5},
      {6, "csc^2 identity = (p^2-1)/3 for all p in [2,10^4]", criterion_6},
      {7, "instanton table rows match the closed forms exactly", criterion_7},
      {8, "Hitchin-Thorpe edge checker on the blown-up plane/cubic family", criterion_8},
      {9, "property suites: symmetries, orientation, conformal, self-dual, decay", criterion_9},
      {10, "2D cone profile: unit integral and total curvature", criterion_10},
  };

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& entry : table) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), entry.id) == wanted.end())
      continue;
    Criterion c{entry.id, entry.label};
    const double t0 = now_s();
    entry.fn(c);
    c.seconds = now_s() - t0;
    std::printf("[%2d] %s  %-68s (%.1fs)%s%s\n", c.id, c.pass ? "PASS" : "FAIL",
                entry.label, c.seconds, c.detail.empty() ? "" : "\n      ",
                c.detail.c_str());
    if (!c.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
