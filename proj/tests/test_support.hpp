#pragma once

#include <cmath>
#include <cstdint>

#include "core/geometry_catalog.hpp"
#include "core/metric_engine.hpp"

namespace edgecone::testing {

// deterministic generator for property-style sampling (splitmix64)
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  double uniform() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return double(z >> 11) * 0x1.0p-53;
  }
  double in(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline CatalogMetric metric(const std::string& family, double beta = 1.0,
                            std::vector<double> centers = {}, double psi_period = 0.0) {
  FamilyDescriptor d;
  d.family = family;
  d.beta = beta;
  d.centers = std::move(centers);
  d.psi_period = psi_period;
  return make_metric(d);
}

// generic interior sample point for a family chart
inline Vec4 sample_point(const CatalogMetric& cm, Rng& rng) {
  if (cm.descriptor.family == "fubini_study")
    return {rng.in(-1.4, 1.4), rng.in(-1.4, 1.4), rng.in(-1.4, 1.4), rng.in(-1.4, 1.4)};
  const double lo = cm.field.symmetry.radial_min + 0.05;
  const double hi = lo + (cm.descriptor.family == "eguchi_hanson" ? 8.0 : 5.0);
  return {rng.in(lo, hi), rng.in(0, 2 * M_PI), rng.in(0.15, M_PI - 0.15), rng.in(0, 2 * M_PI)};
}

// least-squares slope of log|R| against log r over [r0, r1]
inline double curvature_decay_slope(const MetricField& m, double r0, double r1, int n = 20) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double r = r0 * std::pow(r1 / r0, double(i) / (n - 1));
    const CurvatureData cd = curvature_at(m, {r, 0.4, 1.1, 0.8});
    const double x = std::log(r);
    const double y = 0.5 * std::log(cd.densities.riem_sq);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace edgecone::testing
