#include <doctest.h>

#include <cmath>

#include "core/status.hpp"
#include "core/tensor_core.hpp"
#include "test_support.hpp"

using namespace edgecone;
using edgecone::testing::Rng;

namespace {

// constant-curvature oracle: R_ijkl = K (g_ik g_jl − g_il g_jk)
Riem4 constant_curvature_riemann(const Mat4& g, double K) {
  Riem4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          r(i, j, k, l) = K * (g(i, k) * g(j, l) - g(i, l) * g(j, k));
  return r;
}

Mat4 ricci_from_riemann(const Riem4& r, const Mat4& g_inv) {
  Mat4 ric;
  for (int s = 0; s < 4; ++s)
    for (int n = 0; n < 4; ++n) {
      double v = 0;
      for (int i = 0; i < 4; ++i)
        for (int m = 0; m < 4; ++m) v += g_inv(i, m) * r(i, s, m, n);
      ric(s, n) = v;
    }
  return ric;
}

}  // namespace

TEST_SUITE("tensor_core") {
  TEST_CASE("orthonormal frame: identity metric reproduces the coordinate basis") {
    const Frame4 f = orthonormal_frame(Mat4::identity(), 1);
    for (int a = 0; a < 4; ++a)
      for (int i = 0; i < 4; ++i) CHECK(f.vectors[a][i] == (a == i ? 1.0 : 0.0));
    CHECK(f.orientation_sign == 1);
  }

  TEST_CASE("orthonormal frame: diagonal rescale") {
    Mat4 g;
    g(0, 0) = 4;
    g(1, 1) = g(2, 2) = g(3, 3) = 1;
    const Frame4 f = orthonormal_frame(g, 1);
    CHECK(f.vectors[0][0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f.vectors[0][1] == 0.0);
  }

  TEST_CASE("orthonormal frame: Fubini-Study chart metric, direct multiplication check") {
    auto cm = testing::metric("fubini_study");
    const Mat4 g = cm.field.eval({0.31, -0.22, 0.45, 0.17});
    const Frame4 f = orthonormal_frame(g, 1);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) s += g(i, j) * f.vectors[a][i] * f.vectors[b][j];
        CHECK(std::fabs(s - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
  }

  TEST_CASE("orthonormal frame rejects indefinite input") {
    Mat4 g = Mat4::identity();
    g(2, 2) = -1.0;
    CHECK_THROWS_AS(orthonormal_frame(g, 1), Error);
  }

  TEST_CASE("curvature operator: flat space vanishes") {
    const Riem4 r{};
    const auto op = curvature_operator(r, orthonormal_frame(Mat4::identity(), 1));
    CHECK(op.A.frob_sq() == 0.0);
    CHECK(op.B.frob_sq() == 0.0);
    CHECK(op.D.frob_sq() == 0.0);
    CHECK(op.scalar == 0.0);
  }

  TEST_CASE("curvature operator: unit round sphere gives the identity on 2-forms") {
    // sectional curvature 1 in a skewed chart metric, exercising the frame
    Mat4 g = Mat4::identity();
    g(0, 1) = g(1, 0) = 0.3;
    g(2, 2) = 2.0;
    const Riem4 r = constant_curvature_riemann(g, 1.0);
    const Frame4 f = orthonormal_frame(g, 1);
    const auto op = curvature_operator(r, f);
    CHECK(op.scalar == doctest::Approx(12.0).epsilon(1e-12));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(op.A(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-11));
        CHECK(op.D(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-11));
        CHECK(std::fabs(op.B(i, j)) < 1e-12);
      }
    CHECK(op.A.trace() == doctest::Approx(op.scalar / 4).epsilon(1e-12));
    CHECK(op.D.trace() == doctest::Approx(op.scalar / 4).epsilon(1e-12));
  }

  TEST_CASE("curvature operator flags broken pair symmetry") {
    Riem4 r = constant_curvature_riemann(Mat4::identity(), 1.0);
    r(0, 1, 2, 3) += 1e-3;  // violate antisymmetry
    CHECK_THROWS_AS(curvature_operator(r, orthonormal_frame(Mat4::identity(), 1), 1e-9), Error);
  }

  TEST_CASE("invariant densities: round S4 anchors the Euler integrand") {
    const Mat4 g = Mat4::identity();
    const Riem4 r = constant_curvature_riemann(g, 1.0);
    const Frame4 f = orthonormal_frame(g, 1);
    const auto op = curvature_operator(r, f);
    const auto d = invariant_densities(op, ricci_from_riemann(r, g), g, g, 1.0);
    CHECK(d.s == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(d.wplus_sq < 1e-24);
    CHECK(d.wminus_sq < 1e-24);
    CHECK(d.ricci0_sq < 1e-24);
    // (1/8π²) (s²/24) Vol(S⁴) = 2 with Vol = 8π²/3
    const double vol = 8 * M_PI * M_PI / 3;
    CHECK((d.s * d.s / 24.0) * vol / (8 * M_PI * M_PI) == doctest::Approx(2.0).epsilon(1e-14));
  }

  TEST_CASE("invariant densities: Kähler anchor |W+|² = s²/24 on Fubini-Study") {
    auto cm = testing::metric("fubini_study");
    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
      const CurvatureData cd = curvature_at(cm.field, testing::sample_point(cm, rng));
      const double s = cd.densities.s;
      CHECK(std::fabs(cd.densities.wplus_sq - s * s / 24.0) < 1e-9 * s * s / 24.0);
      CHECK(cd.densities.wminus_sq < 1e-20);
      CHECK(cd.densities.ricci0_sq < 1e-20);
      // A has eigenvalues {s/4, 0, 0}: trace and Frobenius norm pin them
      CHECK(cd.op.A.trace() == doctest::Approx(s / 4).epsilon(1e-12));
      CHECK(cd.op.A.frob_sq() == doctest::Approx(s * s / 16).epsilon(1e-12));
      // D = (s/12) Id
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(cd.op.D(i, j) == doctest::Approx(i == j ? s / 12 : 0.0).epsilon(1e-10));
    }
  }

  TEST_CASE("boundary rhat: flat space vanishes, round S4 boundary is the identity") {
    const Riem4 flat{};
    const std::array<Vec4, 3> frame = {Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}};
    CHECK(boundary_rhat(flat, frame).frob_sq() == 0.0);

    const Riem4 round = constant_curvature_riemann(Mat4::identity(), 1.0);
    const Mat3 rh = boundary_rhat(round, frame);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(rh(a, b) == doctest::Approx(a == b ? 1.0 : 0.0));
  }

  TEST_CASE("boundary rhat: Eguchi-Hanson at radius 2 is symmetric") {
    auto cm = testing::metric("eguchi_hanson");
    const HypersurfaceData hs = hypersurface_at(cm.field, 2.0, {0, 0.4, 1.1, 0.8});
    CHECK(hs.rhat.max_asymmetry() < 1e-10);
    CHECK(hs.second_fundamental_form.max_asymmetry() < 1e-10);
  }

  TEST_CASE("operator blocks are self-adjoint: A and D symmetric within 1e-10") {
    Rng rng(13);
    for (const char* fam : {"taub_nut", "pedersen_abreu", "fubini_study", "eguchi_hanson"}) {
      auto cm = testing::metric(fam, 0.8);
      for (int k = 0; k < 15; ++k) {
        const CurvatureData cd = curvature_at(cm.field, testing::sample_point(cm, rng));
        const double scale = std::max(1.0, cd.riemann.max_abs());
        CHECK(cd.op.A.max_asymmetry() < 1e-10 * scale);
        CHECK(cd.op.D.max_asymmetry() < 1e-10 * scale);
        CHECK(cd.op.A.trace() == doctest::Approx(cd.op.scalar / 4).epsilon(1e-9));
        CHECK(cd.op.D.trace() == doctest::Approx(cd.op.scalar / 4).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("orientation reversal swaps the Weyl halves") {
    for (const char* fam : {"eguchi_hanson", "taub_nut", "fubini_study"}) {
      FamilyDescriptor d;
      d.family = fam;
      auto plus = make_metric(d);
      d.orientation = -plus.field.orientation;
      auto minus = make_metric(d);
      Rng rng(7);
      for (int k = 0; k < 10; ++k) {
        const Vec4 x = testing::sample_point(plus, rng);
        const CurvatureData a = curvature_at(plus.field, x);
        const CurvatureData b = curvature_at(minus.field, x);
        // equal to rounding; a vanishing Weyl half is itself squared noise,
        // so the comparison needs the matching absolute floor
        const double tol = 1e-13 * (a.densities.wplus_sq + a.densities.wminus_sq) +
                           1e-18 * (1.0 + a.densities.riem_sq);
        CHECK(std::fabs(a.densities.wplus_sq - b.densities.wminus_sq) <= tol);
        CHECK(std::fabs(a.densities.wminus_sq - b.densities.wplus_sq) <= tol);
      }
    }
  }
}
