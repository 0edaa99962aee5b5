/* edgecone — curvature integrals and characteristic-number checks for
 * explicit 4-metrics with conical edge singularities.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns an edgecone_status, with results written through out-pointers.
 * Strings returned through char** are heap-allocated; release them with
 * edgecone_string_free.
 *
 * Thread safety: metric handles are immutable after creation and may be
 * shared freely; all computations are pure. Internal quadrature parallelism
 * is controlled by the EDGECONE_WORKERS environment variable and results are
 * bit-identical for any worker count.
 */
#ifndef EDGECONE_H
#define EDGECONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EDGECONE_API __declspec(dllexport)
#else
#define EDGECONE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edgecone_status {
  EDGECONE_OK = 0,
  EDGECONE_EINVAL = 1,            /* invalid argument */
  EDGECONE_EUNSUPPORTED = 2,      /* unsupported family/parameters */
  EDGECONE_EDOMAIN = 3,           /* point outside the chart domain */
  EDGECONE_ENONPOSDEF = 4,        /* metric not positive definite */
  EDGECONE_EASYMMETRY = 5,        /* curvature symmetry residual exceeded */
  EDGECONE_EDERIVNOISE = 6,       /* irreducible finite-difference noise */
  EDGECONE_EBUDGET = 7,           /* evaluation budget exhausted (partial result) */
  EDGECONE_EQUADFAIL = 8,         /* quadrature could not be set up */
  EDGECONE_ETAILBOUND = 9,        /* no decay class for a noncompact total */
  EDGECONE_ENOALF = 10,           /* E-type diagram has no ALF partner */
  EDGECONE_ENONINTEGRAL = 11,     /* non-integral signature from given data */
  EDGECONE_EINTERNAL = 12
} edgecone_status;

EDGECONE_API const char* edgecone_status_str(edgecone_status s);
EDGECONE_API const char* edgecone_version(void);
EDGECONE_API void edgecone_string_free(char* s);

/* ---------------------------------------------------------------- metrics */

typedef struct edgecone_metric edgecone_metric;

typedef struct edgecone_metric_params {
  const char* family;    /* edge_s4 | pedersen_abreu | lebrun_gibbons_hawking |
                          * eguchi_hanson | taub_nut | multi_taub_nut |
                          * fubini_study | flat */
  double beta;           /* cone angle / 2π; ignored by families without an edge */
  double psi_period;     /* 0 = family default; eguchi_hanson accepts 2π or 4π */
  const double* centers; /* collinear center offsets along the symmetry axis */
  int n_centers;         /* 0 = family default */
  int orientation;       /* 0 = family default, else ±1 */
  int numeric_derivatives; /* nonzero: Richardson finite differences instead of
                            * exact derivatives of the closed form */
} edgecone_metric_params;

EDGECONE_API edgecone_status edgecone_metric_create(const edgecone_metric_params* params,
                                                    edgecone_metric** out);
EDGECONE_API void edgecone_metric_free(edgecone_metric* m);

/* family, parameters, calibration constants, declared symmetry — as JSON */
EDGECONE_API edgecone_status edgecone_metric_info_json(const edgecone_metric* m, char** json);

typedef struct edgecone_point_invariants {
  double scalar;            /* s */
  double ricci0_sq;         /* |r̊|² */
  double wplus_sq;          /* |W₊|² */
  double wminus_sq;         /* |W₋|² */
  double riem_sq;           /* R_ijkl R^ijkl, full contraction */
  double vol_density;       /* √det g */
  double symmetry_residual; /* Riemann symmetry residual, relative */
  double deriv_error;       /* derivative error estimate (0 for exact mode) */
} edgecone_point_invariants;

EDGECONE_API edgecone_status edgecone_metric_invariants(const edgecone_metric* m,
                                                        const double point[4],
                                                        edgecone_point_invariants* out);

/* ------------------------------------------------------------- quadrature */

typedef struct edgecone_quad_options {
  double rel_tol;       /* 0 = default: 1e-7 (1D reduction) / 1e-5 (2D) */
  long long max_evals;  /* 0 = default: 1e6 / 5e7 */
} edgecone_quad_options;

typedef struct edgecone_integral_report {
  double value;
  double abs_error;
  double predicted;      /* valid when has_predicted */
  double residual;       /* value − predicted */
  long long n_evals;
  int has_predicted;
  int budget_exhausted;
  char substitutions[128]; /* comma-separated endpoint substitutions used */
} edgecone_integral_report;

/* which: gauss_bonnet | signature | wplus_total | riem_total | volume.
 * gauss_bonnet and signature include their 1/8π², 1/12π² normalizations.
 * The predicted field carries the family's closed-form target when known. */
EDGECONE_API edgecone_status edgecone_integrate(const edgecone_metric* m, const char* which,
                                                const edgecone_quad_options* opt,
                                                edgecone_integral_report* out);

/* (1/4π²) ∮ [2 det(II) + <II, R̂>] over the level set {radial = radius} */
EDGECONE_API edgecone_status edgecone_boundary_term(const edgecone_metric* m, double radius,
                                                    const edgecone_quad_options* opt,
                                                    edgecone_integral_report* out);

/* interior Gauss-Bonnet integral over {radial ≤ radius} plus boundary term;
 * predicted = Euler characteristic when the family knows it */
EDGECONE_API edgecone_status edgecone_gauss_bonnet_boundary(const edgecone_metric* m,
                                                            double radius,
                                                            const edgecone_quad_options* opt,
                                                            edgecone_integral_report* out);

/* ------------------------------------------------------ 2D cone profile */

/* ∫₀¹ f for the smoothed cone profile (equals 1/β by construction) */
EDGECONE_API edgecone_status edgecone_cone_profile_unit_integral(double beta, double* out);

/* profile antiderivative data: F(t) (normalized so F = t^β/β² on the cone)
 * and F'(t) = (1/t)∫₀ᵗ f */
EDGECONE_API edgecone_status edgecone_cone_profile_F(double beta, double t, double* F,
                                                     double* Fprime);

/* ∫ K dA over the smoothed cone; predicted = 2π(1−β) */
EDGECONE_API edgecone_status edgecone_smoothed_cone_total_curvature(double beta, double rel_tol,
                                                                    edgecone_integral_report* out);

/* ---------------------------------------------------------------- topology */

typedef struct edgecone_rational {
  int64_t num;
  int64_t den;
} edgecone_rational;

typedef struct edgecone_edge_topology {
  int chi_m, tau_m;        /* χ(M), τ(M) */
  int chi_sigma, sigma_sq; /* χ(Σ), [Σ]² (normal Euler number if non-orientable) */
  edgecone_rational beta;  /* used when beta_is_exact */
  double beta_value;       /* used otherwise */
  int beta_is_exact;
  int totally_real;
} edgecone_edge_topology;

typedef struct edgecone_scalar_result {
  double value;
  edgecone_rational exact; /* valid when is_exact */
  int is_exact;
} edgecone_scalar_result;

/* D±(Σ,β) = 2(1−β)χ(Σ) ± (1−β²)[Σ]²; sign = ±1 */
EDGECONE_API edgecone_status edgecone_defect(const edgecone_edge_topology* t, int sign,
                                             edgecone_scalar_result* out);
/* χ(M) − (1−β)χ(Σ) */
EDGECONE_API edgecone_status edgecone_predicted_gauss_bonnet(const edgecone_edge_topology* t,
                                                             edgecone_scalar_result* out);
/* τ(M) − (1/3)(1−β²)[Σ]², or τ(M) + (1/3)(1−β²)χ(Σ) when totally_real */
EDGECONE_API edgecone_status edgecone_predicted_signature(const edgecone_edge_topology* t,
                                                          edgecone_scalar_result* out);

typedef struct edgecone_ht_verdict {
  double lhs_plus, rhs_plus, lhs_minus, rhs_minus;
  int holds_plus, holds_minus;
  int equality_plus, equality_minus; /* meaningful only when exact */
  int exact;
} edgecone_ht_verdict;

/* (2χ ± 3τ)(M) ≥ (1−β)[2χ(Σ) ± (1+β)[Σ]²] */
EDGECONE_API edgecone_status edgecone_hitchin_thorpe(const edgecone_edge_topology* t,
                                                     edgecone_ht_verdict* out);

EDGECONE_API edgecone_status edgecone_large_beta_obstruction(int chi_sigma, int sigma_sq,
                                                             int* obstructed, char reason[160]);

/* direct compensated sum of csc²(kπ/p) against the closed form (p²−1)/3 */
EDGECONE_API edgecone_status edgecone_csc_sum(int64_t p, double* direct,
                                              edgecone_rational* closed_form);

/* fixed-point signature contribution:
 * −Σ cot(αⱼ/2)cot(βⱼ/2) + Σ csc²(θₖ/2)[Σ̂ₖ]², angles in (0,2π) */
EDGECONE_API edgecone_status edgecone_g_signature_contribution(
    const double* alphas, const double* betas, int n_isolated, const double* thetas,
    const double* sigma_hat_sqs, int n_surfaces, double* out);

typedef struct edgecone_orbifold_signature {
  edgecone_rational tau_m;
  int integral; /* zero signals inconsistent input data */
  edgecone_rational rest2_lhs, rest2_rhs;
} edgecone_orbifold_signature;

/* τ(M) = (1/p)[τ(X) + ((p²−1)/3)[Σ̂]²] with the downstairs identity echoed */
EDGECONE_API edgecone_status edgecone_orbifold_signature_compute(
    int64_t tau_x, edgecone_rational sigma_hat_sq, int64_t p, edgecone_orbifold_signature* out);

/* name: A<k> | D<k> | E6|E7|E8 | taub_nut | atiyah_hitchin | atiyah_hitchin_cover;
 * asym: "ALE" | "ALF" | "" (default). Total is coeff × 8π². */
EDGECONE_API edgecone_status edgecone_instanton_total(const char* name, const char* asym,
                                                      edgecone_rational* coeff_8pi2,
                                                      double* value);

/* full table (A/D rows up to the given node counts plus the E rows) */
EDGECONE_API edgecone_status edgecone_instanton_table_json(int a_max, int d_max, char** json);
EDGECONE_API edgecone_status edgecone_instanton_table_csv(int a_max, int d_max, char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDGECONE_H */
