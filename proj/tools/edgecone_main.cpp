// edgecone CLI: batch driver over the C API. Parses job configs, runs
// verification suites, emits JSON/CSV reports with pass/fail per tolerance.
//
// Exit codes: 0 all checks passed; 1 a tolerance failed; 2 bad config/usage;
// 3 a computation failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgecone/edgecone.h"

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void config_error(const std::string& msg) { throw CliError{2, msg}; }
[[noreturn]] void compute_error(const std::string& msg) { throw CliError{3, msg}; }

void check(edgecone_status rc, const std::string& what) {
  if (rc != EDGECONE_OK) compute_error(what + ": " + edgecone_status_str(rc));
}

// ------------------------------------------------------------------ config

// Key-value config with '#' comments; nesting via dotted keys. Values are
// scalars, "p/q" rationals, or whitespace/comma-separated lists.
struct Config {
  std::map<std::string, std::string> kv;

  static Config parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open config file: " + path);
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        config_error("line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty())
        config_error("line " + std::to_string(lineno) + ": empty key or value");
      if (c.kv.count(key)) config_error("duplicate key: " + key);
      c.kv[key] = value;
    }
    return c;
  }

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  std::string get(const std::string& k, const std::string& dflt = "") const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
  double get_double(const std::string& k, double dflt) const {
    if (!has(k)) return dflt;
    try {
      size_t pos = 0;
      const double v = std::stod(kv.at(k), &pos);
      if (pos != kv.at(k).size()) config_error("bad number for " + k);
      return v;
    } catch (const CliError&) {
      throw;
    } catch (...) {
      config_error("bad number for " + k);
    }
  }
  long long get_int(const std::string& k, long long dflt) const {
    if (!has(k)) return dflt;
    try {
      return std::stoll(kv.at(k));
    } catch (...) {
      config_error("bad integer for " + k);
    }
  }
  std::vector<double> get_list(const std::string& k) const {
    std::vector<double> out;
    if (!has(k)) return out;
    std::string s = kv.at(k);
    for (char& c : s)
      if (c == ',') c = ' ';
    std::istringstream is(s);
    double v;
    while (is >> v) out.push_back(v);
    if (!is.eof()) config_error("bad list for " + k);
    return out;
  }
};

// beta as exact rational "p/q" when written that way
struct BetaArg {
  double value = 1.0;
  edgecone_rational rational{1, 1};
  bool exact = false;

  static BetaArg parse(const std::string& s) {
    BetaArg b;
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      try {
        b.rational.num = std::stoll(s.substr(0, slash));
        b.rational.den = std::stoll(s.substr(slash + 1));
      } catch (...) {
        config_error("bad rational beta: " + s);
      }
      if (b.rational.den == 0) config_error("beta denominator is zero");
      b.value = double(b.rational.num) / double(b.rational.den);
      b.exact = true;
    } else {
      try {
        b.value = std::stod(s);
      } catch (...) {
        config_error("bad beta: " + s);
      }
    }
    if (!(b.value > 0)) config_error("beta must be positive");
    return b;
  }
};

// ------------------------------------------------------------------ metrics

struct MetricHandle {
  edgecone_metric* m = nullptr;
  ~MetricHandle() { edgecone_metric_free(m); }
};

void make_metric(const std::string& family, double beta, const std::vector<double>& centers,
                 double psi_period, MetricHandle& out) {
  edgecone_metric_params p{};
  p.family = family.c_str();
  p.beta = beta;
  p.psi_period = psi_period;
  p.centers = centers.empty() ? nullptr : centers.data();
  p.n_centers = int(centers.size());
  check(edgecone_metric_create(&p, &out.m), "metric " + family);
}

json metric_info(const MetricHandle& h) {
  char* s = nullptr;
  check(edgecone_metric_info_json(h.m, &s), "metric info");
  json j = json::parse(s);
  edgecone_string_free(s);
  return j;
}

json report_row(const edgecone_integral_report& r) {
  json row;
  row["value"] = r.value;
  row["abs_error_estimate"] = r.abs_error;
  if (r.has_predicted) {
    row["predicted"] = r.predicted;
    row["residual"] = r.residual;
  }
  row["n_evals"] = r.n_evals;
  row["substitutions"] = r.substitutions;
  if (r.budget_exhausted) row["budget_exhausted"] = true;
  return row;
}

json topology_columns(const json& info, const BetaArg& beta) {
  json out = json::object();
  if (!info.contains("topology")) return out;
  edgecone_edge_topology t{};
  t.chi_m = info["topology"]["chi_m"];
  t.tau_m = info["topology"]["tau_m"];
  t.chi_sigma = info["topology"]["chi_sigma"];
  t.sigma_sq = info["topology"]["sigma_sq"];
  t.beta = beta.rational;
  t.beta_value = beta.value;
  t.beta_is_exact = beta.exact;
  edgecone_scalar_result dp{}, dm{};
  if (edgecone_defect(&t, +1, &dp) == EDGECONE_OK) out["defect_plus"] = dp.value;
  if (edgecone_defect(&t, -1, &dm) == EDGECONE_OK) out["defect_minus"] = dm.value;
  return out;
}

// deterministic interior sample points for the pointwise jobs
std::vector<std::array<double, 4>> sample_points(const std::string& family, int n) {
  double lo = 0.05, hi = 6.0;
  if (family == "eguchi_hanson") lo = 1.05, hi = 12.0;
  if (family == "fubini_study") lo = -1.3, hi = 1.3;
  std::vector<std::array<double, 4>> pts;
  for (int i = 0; i < n; ++i) {
    const double a = (i + 0.5) / n;
    const double b = std::fmod(0.754877666 * (i + 1), 1.0);  // low-discrepancy pair
    if (family == "fubini_study") {
      pts.push_back({lo + (hi - lo) * a, lo + (hi - lo) * b,
                     lo + (hi - lo) * std::fmod(a + 0.37, 1.0),
                     lo + (hi - lo) * std::fmod(b + 0.61, 1.0)});
    } else {
      const double t = lo * std::pow(hi / lo, a);
      pts.push_back({t, 2 * kPi * b, 0.2 + (kPi - 0.4) * std::fmod(a + b, 1.0), 1.1});
    }
  }
  return pts;
}

// --------------------------------------------------------------------- jobs

struct JobResult {
  json rows = json::array();
  json provenance = json::object();
  bool pass = true;
};

void run_integral_job(const std::string& job, const Config& cfg, JobResult& out) {
  const std::string family = cfg.get("family");
  if (family.empty()) config_error(job + " needs family = <name>");
  const BetaArg beta0 = BetaArg::parse(cfg.get("beta", "1"));
  const std::vector<double> centers = cfg.get_list("centers");
  const double psi_period = cfg.get_double("psi_period", 0.0);

  edgecone_quad_options q{cfg.get_double("rel_tol", 0.0), cfg.get_int("max_evals", 0)};

  std::vector<double> betas = cfg.get_list("sweep_beta");
  if (betas.empty()) betas = {beta0.value};
  std::vector<double> radii = cfg.get_list("sweep_radius");

  const char* selector = nullptr;
  double default_tol = 1e-6;
  bool tol_is_relative = false;
  if (job == "verify-gb") selector = "gauss_bonnet", default_tol = 1e-6;
  else if (job == "verify-sig") selector = "signature", default_tol = 1e-4, tol_is_relative = true;
  else if (job == "instanton") selector = "riem_total", default_tol = 1e-3, tol_is_relative = true;
  const double tol = cfg.get_double("tolerance", default_tol);

  for (double b : betas) {
    BetaArg beta = beta0;
    if (betas.size() > 1 || !cfg.has("beta")) {
      beta.value = b;
      beta.exact = false;
    }
    MetricHandle h;
    make_metric(family, beta.value, centers, psi_period, h);
    const json info = metric_info(h);
    if (out.provenance["metric_info"].is_null()) out.provenance["metric_info"] = info;

    if (job == "boundary-gb") {
      std::vector<double> rs = radii;
      if (rs.empty()) rs = {cfg.get_double("radius", 10.0)};
      for (double r : rs) {
        edgecone_integral_report rep{};
        check(edgecone_gauss_bonnet_boundary(h.m, r, &q, &rep), "gauss-bonnet with boundary");
        json row = report_row(rep);
        row["family"] = family;
        row["beta"] = beta.value;
        row["radius"] = r;
        row["tolerance"] = tol;
        bool ok = true;
        if (rep.has_predicted) ok = std::fabs(rep.residual) <= tol;
        row["pass"] = ok;
        out.pass = out.pass && ok;
        out.rows.push_back(row);
      }
      continue;
    }

    if (job == "verify-einstein") {
      const int n = int(cfg.get_int("samples", 100));
      double max_r0 = 0, s_min = 0, s_max = 0;
      bool first = true;
      for (const auto& pt : sample_points(family, n)) {
        edgecone_point_invariants inv{};
        check(edgecone_metric_invariants(h.m, pt.data(), &inv), "pointwise invariants");
        max_r0 = std::max(max_r0, std::sqrt(std::max(0.0, inv.ricci0_sq)));
        s_min = first ? inv.scalar : std::min(s_min, inv.scalar);
        s_max = first ? inv.scalar : std::max(s_max, inv.scalar);
        first = false;
      }
      json row;
      row["family"] = family;
      row["beta"] = beta.value;
      row["samples"] = n;
      row["max_traceless_ricci"] = max_r0;
      row["scalar_min"] = s_min;
      row["scalar_max"] = s_max;
      const double einstein_tol = cfg.get_double("tolerance", 1e-6);
      bool ok = max_r0 < einstein_tol;
      if (family == "pedersen_abreu") {
        const double s_expect = 6 * beta.value * beta.value * (2 - beta.value);
        row["scalar_expected"] = s_expect;
        ok = ok && std::fabs(s_min - s_expect) <= 1e-5 * std::fabs(s_expect) &&
             std::fabs(s_max - s_expect) <= 1e-5 * std::fabs(s_expect);
      }
      row["tolerance"] = einstein_tol;
      row["pass"] = ok;
      out.pass = out.pass && ok;
      const json tcols = topology_columns(info, beta);
      for (auto& [k, v] : tcols.items()) row[k] = v;
      out.rows.push_back(row);
      continue;
    }

    edgecone_integral_report rep{};
    check(edgecone_integrate(h.m, selector, &q, &rep), std::string("integrate ") + selector);
    json row = report_row(rep);
    row["family"] = family;
    row["beta"] = beta.value;
    row["selector"] = selector;
    row["tolerance"] = tol;
    bool ok = true;
    if (rep.has_predicted) {
      const double scale = tol_is_relative ? std::max(1e-300, std::fabs(rep.predicted)) : 1.0;
      ok = std::fabs(rep.residual) <= tol * scale;
    }
    row["pass"] = ok;
    out.pass = out.pass && ok;
    const json tcols = topology_columns(info, beta);
    for (auto& [k, v] : tcols.items()) row[k] = v;
    out.rows.push_back(row);
  }
}

void run_ht_job(const Config& cfg, JobResult& out) {
  edgecone_edge_topology t{};
  if (!cfg.has("chi") || !cfg.has("tau") || !cfg.has("chi_sigma") || !cfg.has("sigma_sq"))
    config_error("ht-check needs chi, tau, chi_sigma, sigma_sq");
  t.chi_m = int(cfg.get_int("chi", 0));
  t.tau_m = int(cfg.get_int("tau", 0));
  t.chi_sigma = int(cfg.get_int("chi_sigma", 0));
  t.sigma_sq = int(cfg.get_int("sigma_sq", 0));
  t.totally_real = cfg.get("totally_real", "false") == "true";
  const BetaArg beta = BetaArg::parse(cfg.get("beta", "1"));
  t.beta = beta.rational;
  t.beta_value = beta.value;
  t.beta_is_exact = beta.exact;

  edgecone_ht_verdict v{};
  check(edgecone_hitchin_thorpe(&t, &v), "hitchin-thorpe check");
  edgecone_scalar_result dp{}, dm{}, gb{}, sig{};
  check(edgecone_defect(&t, +1, &dp), "defect+");
  check(edgecone_defect(&t, -1, &dm), "defect-");
  check(edgecone_predicted_gauss_bonnet(&t, &gb), "predicted gauss-bonnet");
  check(edgecone_predicted_signature(&t, &sig), "predicted signature");

  json row;
  row["beta"] = beta.value;
  row["beta_exact"] = beta.exact;
  row["lhs_plus"] = v.lhs_plus;
  row["rhs_plus"] = v.rhs_plus;
  row["lhs_minus"] = v.lhs_minus;
  row["rhs_minus"] = v.rhs_minus;
  row["holds_plus"] = bool(v.holds_plus);
  row["holds_minus"] = bool(v.holds_minus);
  if (v.exact) {
    row["equality_plus"] = bool(v.equality_plus);
    row["equality_minus"] = bool(v.equality_minus);
  }
  row["defect_plus"] = dp.value;
  row["defect_minus"] = dm.value;
  row["predicted_gauss_bonnet"] = gb.value;
  row["predicted_signature"] = sig.value;
  int obstructed = 0;
  char reason[160] = {0};
  check(edgecone_large_beta_obstruction(t.chi_sigma, t.sigma_sq, &obstructed, reason),
        "large-beta obstruction");
  row["large_beta_obstructed"] = bool(obstructed);
  row["large_beta_reason"] = reason;
  row["pass"] = true;  // ht-check reports verdicts; it has no tolerance to fail
  out.rows.push_back(row);
}

void run_csc_job(const Config& cfg, JobResult& out) {
  const long long p = cfg.get_int("p", 0);
  if (p < 2) config_error("csc-sum needs p >= 2");
  double direct = 0;
  edgecone_rational closed{};
  check(edgecone_csc_sum(p, &direct, &closed), "csc-sum");
  const double closed_v = double(closed.num) / double(closed.den);
  const double tol = cfg.get_double("tolerance", 1e-9);
  json row;
  row["p"] = p;
  row["direct"] = direct;
  row["closed_form"] = std::to_string(closed.num) + "/" + std::to_string(closed.den);
  row["closed_form_value"] = closed_v;
  row["rel_error"] = std::fabs(direct - closed_v) / closed_v;
  row["tolerance"] = tol;
  const bool ok = std::fabs(direct - closed_v) <= tol * closed_v;
  row["pass"] = ok;
  out.pass = out.pass && ok;
  out.rows.push_back(row);
}

void run_cone2d_job(const Config& cfg, JobResult& out) {
  std::vector<double> betas = cfg.get_list("sweep_beta");
  if (betas.empty()) betas = {BetaArg::parse(cfg.get("beta", "1")).value};
  const double tol = cfg.get_double("tolerance", 1e-6);
  for (double b : betas) {
    double unit = 0;
    check(edgecone_cone_profile_unit_integral(b, &unit), "cone profile");
    edgecone_integral_report rep{};
    check(edgecone_smoothed_cone_total_curvature(b, cfg.get_double("rel_tol", 1e-9), &rep),
          "smoothed cone curvature");
    json row = report_row(rep);
    row["beta"] = b;
    row["unit_integral"] = unit;
    row["unit_integral_expected"] = 1.0 / b;
    row["tolerance"] = tol;
    const bool ok =
        std::fabs(unit - 1.0 / b) <= 1e-10 && std::fabs(rep.residual) <= tol;
    row["pass"] = ok;
    out.pass = out.pass && ok;
    out.rows.push_back(row);
  }
}

void run_table_job(const Config& cfg, JobResult& out) {
  char* s = nullptr;
  check(edgecone_instanton_table_json(int(cfg.get_int("a_max", 8)),
                                      int(cfg.get_int("d_max", 8)), &s),
        "instanton table");
  out.rows = json::parse(s);
  edgecone_string_free(s);
}

// ------------------------------------------------------------------ output

std::string rows_to_csv(const json& rows) {
  // union of keys over all rows, in first-seen order
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto& [k, v] : row.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  std::ostringstream os;
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ",";
      if (row.contains(cols[i])) {
        const auto& v = row[cols[i]];
        if (v.is_string())
          os << v.get<std::string>();
        else
          os << v.dump();
      }
    }
    os << "\n";
  }
  return os.str();
}

int emit_report(const json& report, bool pass, const std::string& out_path,
                const std::string& format) {
  std::string text;
  if (format == "csv")
    text = rows_to_csv(report["results"]);
  else
    text = report.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) config_error("cannot write: " + out_path);
    f << text;
    std::cerr << "report written to " << out_path << "\n";
  }
  return pass ? 0 : 1;
}

int run_config(const Config& cfg, std::string out_path, std::string format) {
  static const std::vector<std::string> known = {
      "job",       "family",    "beta",        "centers",   "psi_period", "rel_tol",
      "max_evals", "tolerance", "sweep_beta",  "sweep_radius", "radius",  "samples",
      "chi",       "tau",       "chi_sigma",   "sigma_sq",  "totally_real", "p",
      "a_max",     "d_max",     "out",         "format"};
  for (auto& [k, v] : cfg.kv)
    if (std::find(known.begin(), known.end(), k) == known.end())
      config_error("unknown config key: " + k);

  const std::string job = cfg.get("job");
  if (job.empty()) config_error("config needs job = <kind>");
  if (out_path.empty()) out_path = cfg.get("out");
  if (format.empty()) format = cfg.get("format", "json");
  if (format != "json" && format != "csv") config_error("format must be json or csv");

  const auto t0 = std::chrono::steady_clock::now();
  JobResult res;
  if (job == "verify-gb" || job == "verify-sig" || job == "verify-einstein" ||
      job == "instanton" || job == "boundary-gb")
    run_integral_job(job, cfg, res);
  else if (job == "ht-check")
    run_ht_job(cfg, res);
  else if (job == "csc-sum")
    run_csc_job(cfg, res);
  else if (job == "cone2d")
    run_cone2d_job(cfg, res);
  else if (job == "table")
    run_table_job(cfg, res);
  else
    config_error("unknown job kind: " + job);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json report;
  report["job"] = json::object();
  for (auto& [k, v] : cfg.kv) report["job"][k] = v;
  report["results"] = res.rows;
  res.provenance["tool"] = {{"name", "edgecone"}, {"version", edgecone_version()}};
  res.provenance["wall_time_ms"] = ms;
  report["provenance"] = res.provenance;
  report["pass"] = res.pass;
  return emit_report(report, res.pass, out_path, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edgecone — curvature integrals and characteristic-number checks for explicit "
               "edge-cone 4-metrics and gravitational instantons"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  double run_rel_tol = 0.0;
  long long run_max_evals = 0;
  auto* run = app.add_subcommand("run", "run a job config file");
  run->add_option("config", config_path, "job config (key = value lines)")->required();
  run->add_option("--out", out_path, "output path (default stdout)");
  run->add_option("--format", format, "json|csv");
  run->add_option("--rel-tol", run_rel_tol, "quadrature tolerance override");
  run->add_option("--max-evals", run_max_evals, "quadrature budget override");

  int table_a_max = 8, table_d_max = 8;
  std::string table_out, table_format = "json";
  auto* table = app.add_subcommand("table", "total squared curvature of ALE/ALF instantons");
  table->add_option("--a-max", table_a_max, "largest A_k node count");
  table->add_option("--d-max", table_d_max, "largest D_k node count");
  table->add_option("--out", table_out, "output path (default stdout)");
  table->add_option("--format", table_format, "json|csv");

  long long csc_p = 0;
  std::string csc_out, csc_format = "json";
  auto* csc = app.add_subcommand("csc-sum", "direct vs closed-form cosecant-squared sum");
  csc->add_option("--p", csc_p, "order p >= 2")->required();
  csc->add_option("--out", csc_out, "output path");
  csc->add_option("--format", csc_format, "json|csv");

  std::string ht_beta = "1";
  int ht_chi = 0, ht_tau = 0, ht_chi_sigma = 0, ht_sigma_sq = 0;
  bool ht_totally_real = false;
  std::string ht_out, ht_format = "json";
  auto* ht = app.add_subcommand("ht-check", "edge-cone Hitchin-Thorpe inequality check");
  ht->add_option("--chi", ht_chi, "Euler characteristic of M")->required();
  ht->add_option("--tau", ht_tau, "signature of M")->required();
  ht->add_option("--chi-sigma", ht_chi_sigma, "Euler characteristic of the edge surface")
      ->required();
  ht->add_option("--sigma-sq", ht_sigma_sq, "self-intersection of the edge surface")->required();
  ht->add_option("--beta", ht_beta, "cone angle / 2π, float or exact p/q");
  ht->add_flag("--totally-real", ht_totally_real, "use the totally-real signature variant");
  ht->add_option("--out", ht_out, "output path");
  ht->add_option("--format", ht_format, "json|csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      Config cfg = Config::parse_file(config_path);
      if (run_rel_tol > 0) cfg.kv["rel_tol"] = std::to_string(run_rel_tol);
      if (run_max_evals > 0) cfg.kv["max_evals"] = std::to_string(run_max_evals);
      return run_config(cfg, out_path, format);
    }

    Config cfg;
    std::string o, f;
    if (table->parsed()) {
      cfg.kv = {{"job", "table"},
                {"a_max", std::to_string(table_a_max)},
                {"d_max", std::to_string(table_d_max)}};
      o = table_out;
      f = table_format;
    } else if (csc->parsed()) {
      cfg.kv = {{"job", "csc-sum"}, {"p", std::to_string(csc_p)}};
      o = csc_out;
      f = csc_format;
    } else {
      cfg.kv = {{"job", "ht-check"},
                {"chi", std::to_string(ht_chi)},
                {"tau", std::to_string(ht_tau)},
                {"chi_sigma", std::to_string(ht_chi_sigma)},
                {"sigma_sq", std::to_string(ht_sigma_sq)},
                {"beta", ht_beta}};
      if (ht_totally_real) cfg.kv["totally_real"] = "true";
      o = ht_out;
      f = ht_format;
    }
    return run_config(cfg, o, f);
  } catch (const CliError& e) {
    std::cerr << "edgecone: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "edgecone: " << e.what() << "\n";
    return 3;
  }
}
