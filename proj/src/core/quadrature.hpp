#pragma once

#include <functional>

#include "metric_field.hpp"
#include "quadrature_types.hpp"

namespace edgecone {

// Symmetry-reduced adaptive integration of an invariant density over the
// metric's declared domain. Improper endpoints are handled by the metric's
// declared substitution maps. Throws on missing reduction; a blown budget
// returns the partial value with budget_exhausted set (the C layer picks the
// error code off the flag).
IntegralReport integrate_invariant(const MetricField& m, Invariant which,
                                   const QuadratureSpec& spec);

// Noncompact total: integrates over radial ≤ C and certifies the remainder
// with an envelope from the declared decay class (ALE: |R| ~ r⁻⁴, ALF: r⁻³),
// fitted constant × safety 10. C grows until the tail bound is below
// 0.1 · rel_tol · |value|; the bound is folded into the error estimate.
IntegralReport integrate_noncompact(const MetricField& m, Invariant which,
                                    const QuadratureSpec& spec);

// (1/4π²) ∫ [2 det(II) + <II, R̂>] over the level set {radial = radius}.
IntegralReport boundary_term(const MetricField& m, double radius, const QuadratureSpec& spec);

// χ(Y) estimate: interior Gauss-Bonnet over {radial ≤ radius} plus boundary
// term; predicted = χ when the family knows it.
IntegralReport gauss_bonnet_with_boundary(const MetricField& m, double radius,
                                          const QuadratureSpec& spec);

// Scalar adaptive Gauss-Kronrod on [a,b] (shared helper; also used by the
// cone-profile module and tests).
double adaptive_gk(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   double* abs_err = nullptr, long long* n_evals = nullptr);

}  // namespace edgecone
