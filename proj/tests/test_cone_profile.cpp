#include <doctest.h>

#include <cmath>

#include "core/cone_profile.hpp"
#include "core/quadrature.hpp"
#include "core/status.hpp"

using namespace edgecone;

namespace {

// independent oracle: K of the rotationally symmetric profile from the
// radial closed form K·f = −2 d/dt [t f'/f], evaluated with the profile's
// own derivative data but none of the tensor machinery
double radial_gauss_curvature(const ConeProfile& p, double t) {
  double f0, f1, f2;
  p.f_derivs(t, f0, f1, f2);
  const double d = f1 / f0 + t * (f2 * f0 - f1 * f1) / (f0 * f0);
  return -2.0 * d / f0;
}

}  // namespace

TEST_SUITE("cone_profile") {
  TEST_CASE("two-regime profile with exact unit integral") {
    for (double beta : {0.3, 0.5, 1.0, 1.7, 2.0}) {
      const ConeProfile p = cone_profile(beta);
      CHECK(p.f(0.2) == doctest::Approx(1 / beta).epsilon(1e-15));
      CHECK(p.f(0.5) == doctest::Approx(1 / beta).epsilon(1e-15));
      CHECK(p.f(1.0) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(p.f(2.0) == doctest::Approx(std::pow(2.0, beta - 1)).epsilon(1e-15));
      CHECK(p.unit_integral() == doctest::Approx(1 / beta).epsilon(1e-12));
      CHECK(std::fabs(p.unit_integral() - 1 / beta) < 1e-10);
    }
  }

  TEST_CASE("beta = 1 admits the trivial profile") {
    const ConeProfile p = cone_profile(1.0);
    for (double t : {0.1, 0.6, 0.8, 1.5}) CHECK(p.f(t) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.F(0.7) == doctest::Approx(0.7).epsilon(1e-9));
  }

  TEST_CASE("antiderivative normalization: F(t) = t^β/β² on the cone region") {
    const ConeProfile p = cone_profile(0.5);
    CHECK(p.F(4.0) == doctest::Approx(8.0).epsilon(1e-12));  // 4^0.5 / 0.25
    CHECK(p.F(1.0) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(p.Fprime(0.3) == doctest::Approx(2.0).epsilon(1e-13));  // 1/β below the blend
    // F solves (t F')' = f
    const double h = 1e-5;
    for (double t : {0.3, 0.7, 0.9, 1.4}) {
      const double lhs =
          ((t + h) * p.Fprime(t + h) - (t - h) * p.Fprime(t - h)) / (2 * h);
      CHECK(lhs == doctest::Approx(p.f(t)).epsilon(1e-6));
    }
  }

  TEST_CASE("profile is C² across the blend boundaries") {
    const ConeProfile p = cone_profile(0.5);
    for (double t0 : {0.5, 1.0}) {
      double fl, f1l, f2l, fr, f1r, f2r;
      p.f_derivs(t0 - 1e-9, fl, f1l, f2l);
      p.f_derivs(t0 + 1e-9, fr, f1r, f2r);
      CHECK(fl == doctest::Approx(fr).epsilon(1e-6));
      CHECK(f1l == doctest::Approx(f1r).epsilon(1e-4));
      CHECK(std::fabs(f2l - f2r) < 1e-3 * (1 + std::fabs(f2l)));
    }
  }

  TEST_CASE("tensor-pipeline curvature matches the radial closed form") {
    for (double beta : {0.5, 1.4}) {
      const ConeProfile p = cone_profile(beta);
      for (double r : {0.75, 0.85, 0.95}) {
        const double k_pipeline = smoothed_cone_gauss_curvature(p, r);
        const double k_radial = radial_gauss_curvature(p, r * r);
        CHECK(k_pipeline == doctest::Approx(k_radial).epsilon(1e-9));
      }
      // flat outside the blend annulus
      CHECK(std::fabs(smoothed_cone_gauss_curvature(p, 0.3)) < 1e-12);
      CHECK(std::fabs(smoothed_cone_gauss_curvature(p, 1.8)) < 1e-10);
    }
  }

  TEST_CASE("total curvature of the smoothed cone equals 2π(1−β)") {
    // oracle besides the closed form: 1D quadrature of the radial K formula
    for (double beta : {0.5, 1.0, 2.0}) {
      const ConeProfile p = cone_profile(beta);
      const double oracle =
          2 * M_PI *
          adaptive_gk(
              [&](double r) { return radial_gauss_curvature(p, r * r) * p.f(r * r) * r; },
              std::sqrt(0.5), 1.0, 1e-11);
      CHECK(std::fabs(oracle - 2 * M_PI * (1 - beta)) < 1e-8);
      const IntegralReport rep = smoothed_cone_total_curvature(beta, 1e-9);
      CHECK(std::fabs(rep.value - 2 * M_PI * (1 - beta)) < 1e-6);
      CHECK(std::fabs(rep.value - oracle) < 1e-7);
      CHECK(rep.n_evals > 0);
    }
  }

  TEST_CASE("rejects non-positive cone angles") {
    CHECK_THROWS_AS(cone_profile(0.0), Error);
    CHECK_THROWS_AS(cone_profile(-1.0), Error);
  }
}
