#include <doctest.h>

#include <cmath>

#include "core/status.hpp"
#include "test_support.hpp"

using namespace edgecone;
using edgecone::testing::Rng;

TEST_SUITE("geometry_catalog") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(testing::metric("pedersen_abreu", 2.0), Error);
    CHECK_THROWS_AS(testing::metric("pedersen_abreu", -0.5), Error);
    CHECK_THROWS_AS(testing::metric("nonsense_family"), Error);
    CHECK_THROWS_AS(testing::metric("multi_taub_nut", 1.0, {0.5, 0.5}), Error);
    CHECK_THROWS_AS(testing::metric("eguchi_hanson", 1.0, {}, 3.0), Error);
    CHECK_NOTHROW(testing::metric("eguchi_hanson", 1.0, {}, 4 * M_PI));
    CHECK_NOTHROW(testing::metric("pedersen_abreu", 1.9));
  }

  TEST_CASE("Riemann symmetries hold at random chart points for every family") {
    Rng rng(23);
    for (const auto& name : catalog_family_names()) {
      auto cm = (name == "multi_taub_nut") ? testing::metric(name, 1.0, {-0.5, 0.5})
                : (name == "lebrun_gibbons_hawking") ? testing::metric(name, 0.7, {0.0})
                                                     : testing::metric(name, 0.7);
      for (int k = 0; k < 100; ++k) {
        const CurvatureData cd = curvature_at(cm.field, testing::sample_point(cm, rng));
        if (cd.riemann.max_abs() > 1e-10)
          CHECK(cd.riemann.symmetry_residual() < 1e-7);
      }
    }
  }

  TEST_CASE("decomposition completeness: |R|² = s²/6 + 2|r̊|² + 4(|W₊|²+|W₋|²)") {
    Rng rng(29);
    for (const auto& name : catalog_family_names()) {
      auto cm = (name == "multi_taub_nut") ? testing::metric(name, 1.0, {-0.5, 0.5})
                : (name == "lebrun_gibbons_hawking") ? testing::metric(name, 0.7, {-0.4, 0.9})
                                                     : testing::metric(name, 0.7);
      for (int k = 0; k < 40; ++k) {
        const auto d = curvature_at(cm.field, testing::sample_point(cm, rng)).densities;
        const double decomp =
            d.s * d.s / 6 + 2 * d.ricci0_sq + 4 * (d.wplus_sq + d.wminus_sq);
        if (d.riem_sq > 1e-12) CHECK(std::fabs(d.riem_sq - decomp) < 1e-8 * d.riem_sq);
      }
    }
  }

  TEST_CASE("edge_s4 stays locally constant-curvature across cone angles") {
    Rng rng(31);
    for (double beta : {0.3, 1.0, 1.7}) {
      auto cm = testing::metric("edge_s4", beta);
      for (int k = 0; k < 30; ++k) {
        const auto d = curvature_at(cm.field, testing::sample_point(cm, rng)).densities;
        CHECK(d.wplus_sq + d.wminus_sq + d.ricci0_sq < 1e-8);
      }
    }
  }

  TEST_CASE("Gibbons-Hawking-type members are self-dual: |W₋|² < 1e-8 |W₊|²") {
    Rng rng(37);
    auto check_sd = [&](CatalogMetric cm, bool ricci_flat) {
      for (int k = 0; k < 30; ++k) {
        const auto d = curvature_at(cm.field, testing::sample_point(cm, rng)).densities;
        CHECK(d.wminus_sq < 1e-8 * d.wplus_sq);
        if (ricci_flat) CHECK(d.ricci0_sq < 1e-8 * d.riem_sq);
      }
    };
    check_sd(testing::metric("lebrun_gibbons_hawking", 0.6, {0.0}), false);
    check_sd(testing::metric("lebrun_gibbons_hawking", 0.6, {-0.4, 0.9}), false);
    check_sd(testing::metric("taub_nut"), true);
    check_sd(testing::metric("multi_taub_nut", 1.0, {-0.5, 0.5}), true);
    check_sd(testing::metric("eguchi_hanson"), true);
  }

  TEST_CASE("single-center limits coincide: multi_taub_nut(1) equals taub_nut") {
    auto a = testing::metric("taub_nut");
    auto b = testing::metric("multi_taub_nut", 1.0, {0.0});
    Rng rng(41);
    for (int k = 0; k < 10; ++k) {
      const Vec4 x = testing::sample_point(a, rng);
      const auto da = curvature_at(a.field, x).densities;
      const auto db = curvature_at(b.field, x).densities;
      CHECK(da.riem_sq == doctest::Approx(db.riem_sq).epsilon(1e-10));
      CHECK(da.vol_density == doctest::Approx(db.vol_density).epsilon(1e-12));
    }
  }

  TEST_CASE("curvature decay: Eguchi-Hanson |R| ~ r⁻⁶, Taub-NUT |R| ~ r⁻³") {
    // Ricci-flat ALE decays faster than the generic |R| ~ r⁻⁴ envelope; the
    // fitted Eguchi-Hanson slope is −6 (384/r¹² Kretschmann, slope −12 for |R|²).
    auto eh = testing::metric("eguchi_hanson");
    CHECK(testing::curvature_decay_slope(eh.field, 10, 100) == doctest::Approx(-6.0).epsilon(0.017));
    auto tn = testing::metric("taub_nut");
    CHECK(testing::curvature_decay_slope(tn.field, 10, 100) == doctest::Approx(-3.0).epsilon(0.034));
  }

  TEST_CASE("Eguchi-Hanson pointwise norm matches its closed form") {
    auto cm = testing::metric("eguchi_hanson");
    for (double r : {1.3, 2.0, 5.0}) {
      const auto d = curvature_at(cm.field, {r, 0.4, 1.1, 0.8}).densities;
      CHECK(d.riem_sq == doctest::Approx(384.0 / std::pow(r, 12)).epsilon(1e-10));
      CHECK(d.wplus_sq == doctest::Approx(96.0 / std::pow(r, 12)).epsilon(1e-10));
    }
  }

  TEST_CASE("conformal pair: |W₊|² dμ matches pointwise between g₀ and the Einstein rep") {
    for (double beta : {0.5, 1.3}) {
      auto g0 = testing::metric("lebrun_gibbons_hawking", beta, {0.0});
      auto ge = testing::metric("pedersen_abreu", beta);
      Rng rng(43);
      for (int k = 0; k < 25; ++k) {
        const Vec4 x = testing::sample_point(g0, rng);
        const auto d0 = curvature_at(g0.field, x).densities;
        const auto de = curvature_at(ge.field, x).densities;
        const double a = d0.wplus_sq * d0.vol_density;
        const double b = de.wplus_sq * de.vol_density;
        CHECK(a == doctest::Approx(b).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("pedersen_abreu is Einstein across the full angle range") {
    Rng rng(47);
    for (double beta : {0.25, 0.5, 1.0, 1.5, 1.9}) {
      auto cm = testing::metric("pedersen_abreu", beta);
      const double s_expect = 6 * beta * beta * (2 - beta);
      double max_r0 = 0;
      for (int k = 0; k < 100; ++k) {
        const auto d = curvature_at(cm.field, testing::sample_point(cm, rng)).densities;
        max_r0 = std::max(max_r0, std::sqrt(d.ricci0_sq));
        CHECK(d.s == doctest::Approx(s_expect).epsilon(1e-6));
      }
      CHECK(max_r0 < 1e-6);
    }
  }

  TEST_CASE("exact predictions carry the edge corrections") {
    auto s4 = testing::metric("edge_s4", 0.5);
    CHECK(*exact_prediction(s4, Invariant::GaussBonnet) == doctest::Approx(1.0));  // 2β
    auto pa = testing::metric("pedersen_abreu", 0.5);
    CHECK(*exact_prediction(pa, Invariant::Signature) == doctest::Approx(0.75));  // (2+β²)/3
    CHECK(*exact_prediction(pa, Invariant::WplusTotal) ==
          doctest::Approx(12 * M_PI * M_PI * 0.75));
    auto lgh3 = testing::metric("lebrun_gibbons_hawking", 0.5, {-1.0, 0.0, 1.0});
    CHECK(*exact_prediction(lgh3, Invariant::Signature) ==
          doctest::Approx(3 * (2 + 0.25) / 3.0));  // n(2+β²)/3
    auto tn = testing::metric("taub_nut");
    CHECK(*exact_prediction(tn, Invariant::RiemTotal) == doctest::Approx(8 * M_PI * M_PI));
    auto mtn = testing::metric("multi_taub_nut", 1.0, {-0.5, 0.5});
    CHECK(*exact_prediction(mtn, Invariant::RiemTotal) == doctest::Approx(16 * M_PI * M_PI));
    auto eh = testing::metric("eguchi_hanson");
    CHECK(*exact_prediction(eh, Invariant::RiemTotal) == doctest::Approx(12 * M_PI * M_PI));
    auto eh2 = testing::metric("eguchi_hanson", 1.0, {}, 4 * M_PI);
    CHECK(*exact_prediction(eh2, Invariant::RiemTotal) == doctest::Approx(24 * M_PI * M_PI));
    CHECK(!exact_prediction(eh, Invariant::GaussBonnet).has_value());
  }
}
