#include <doctest.h>

#include <cmath>
#include <vector>

#include "revolve/analysis.hpp"
#include "revolve/bodies.hpp"
#include "revolve/radon.hpp"

using namespace revolve;

TEST_CASE("ball modulus has the circular closed form") {
  const auto ball = bodies::make_ball();
  CHECK(analysis::modulus_equator(ball, 0.6) == doctest::Approx(0.2).epsilon(1e-10));
  CHECK(analysis::modulus_equator(ball, 0.8) ==
        doctest::Approx(1.0 - 0.6).epsilon(1e-10));
  // eps = 1 pins the boundary point to the pole, where the height cos(theta)
  // is quadratically flat: the root carries sqrt(ulp) ~ 1.5e-8 of angle, so
  // the modulus lands within ~1e-8 of 1 and no tighter.
  CHECK(analysis::modulus_equator(ball, 1.0) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("pball modulus scales like eps^p / p") {
  const auto k = bodies::make_pbody(3.0);
  const double eps = 0.1;
  const double d = analysis::modulus_equator(k, eps);
  CHECK(std::fabs(d / (std::pow(eps, 3.0) / 3.0) - 1.0) < 1e-2);
}

TEST_CASE("modulus is invariant under uniform dilation") {
  const auto k = bodies::make_pbody(3.0);
  const auto big = bodies::dilate(k, 2.5, 2.5);
  for (double eps : {0.02, 0.05, 0.1})
    CHECK(analysis::modulus_equator(big, eps) ==
          doctest::Approx(analysis::modulus_equator(k, eps)).epsilon(1e-9));
}

TEST_CASE("modulus grows with the height") {
  const auto k = bodies::make_pbody(4.0);
  double prev = 0.0;
  for (double eps : {0.01, 0.03, 0.1, 0.3}) {
    const double d = analysis::modulus_equator(k, eps);
    CHECK(d >= prev);
    prev = d;
  }
}

TEST_CASE("modulus rejects bad inputs") {
  const auto ball = bodies::make_ball();
  CHECK_THROWS_AS(analysis::modulus_equator(ball, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(analysis::modulus_equator(ball, 1.2), std::invalid_argument);
  // profile with no height at the axis cannot anchor the equation
  CHECK_THROWS_AS(analysis::modulus_equator(bodies::make_capped_cylinder(0.3), 0.5),
                  analysis::AnalysisError);
}

TEST_CASE("power fit recovers quadratic and cubic types") {
  const auto ball_fit =
      analysis::power_type_fit(bodies::make_ball(), analysis::default_eps_grid());
  CHECK(ball_fit.p == doctest::Approx(2.0).epsilon(5e-3));
  CHECK(ball_fit.c == doctest::Approx(0.5).epsilon(2e-2));
  CHECK(ball_fit.residual < 1e-2);

  const auto p3_fit =
      analysis::power_type_fit(bodies::make_pbody(3.0), analysis::default_eps_grid());
  CHECK(p3_fit.p == doctest::Approx(3.0).epsilon(5e-3));
  CHECK(p3_fit.c == doctest::Approx(1.0 / 3.0).epsilon(2e-2));
}

TEST_CASE("a flat equator band yields the infinite-type sentinel") {
  const auto fit =
      analysis::power_type_fit(bodies::make_cylinder(), analysis::default_eps_grid());
  CHECK(std::isinf(fit.p));
  CHECK(fit.c == 0.0);
  CHECK(fit.residual == 0.0);
}

TEST_CASE("power fit validates its grid") {
  const auto ball = bodies::make_ball();
  using analysis::power_type_fit;
  CHECK_THROWS_AS(power_type_fit(ball, {0.1, 0.05, 0.01}), std::invalid_argument);
  CHECK_THROWS_AS(power_type_fit(ball, {0.2, 0.1, 0.05, 0.02, 0.01, 0.005}),
                  std::invalid_argument);
  CHECK_THROWS_AS(power_type_fit(ball, {0.1, 0.05, 0.02, 0.01, 0.005, 5e-5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(power_type_fit(ball, {0.1, 0.1, 0.05, 0.02, 0.01, 0.005}),
                  std::invalid_argument);
  CHECK(analysis::default_eps_grid().size() == 8);
}

TEST_CASE("ball margin is its radius") {
  const auto rep = analysis::equator_convexity(bodies::make_ball());
  CHECK(rep.rho_eq == doctest::Approx(1.0));
  CHECK(rep.margin == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(std::fabs(rep.rho_pp) < 1e-6);
  CHECK(rep.verdict == "strictly-convex");
}

TEST_CASE("harmonic caps read as locally flat") {
  // rho = h / sin(theta) near the equator has rho'' = rho exactly there
  const auto rep = analysis::equator_convexity(bodies::make_two_cylinder_union(0.5));
  CHECK(rep.verdict == "locally-convex-flat");
  CHECK(std::fabs(rep.margin) < 1e-6);
}

TEST_CASE("an equatorial dimple reads as non-convex") {
  std::vector<double> theta(2048), rho(2048);
  for (int i = 0; i < 2048; ++i) {
    theta[i] = M_PI_2 * i / 2047;
    rho[i] = 1.0 - 0.3 * std::cos(4.0 * theta[i]);
  }
  const auto k = bodies::profile_from_samples(theta, rho);
  const auto rep = analysis::equator_convexity(k);
  CHECK(rep.verdict == "non-convex");
  CHECK(rep.rho_eq == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(rep.rho_pp == doctest::Approx(4.8).epsilon(1e-3));
  CHECK(rep.margin == doctest::Approx(0.7 - 4.8).epsilon(1e-3));
}

TEST_CASE("ball distance is the unit of the scale-free gauge") {
  const auto bm = analysis::bm_ball(bodies::make_ball());
  CHECK(bm.distance == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bm.s_opt == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(bm.ratio_curve.size() == 64);
}

TEST_CASE("axial stretches are undone exactly") {
  const auto bm = analysis::bm_ball(bodies::dilate(bodies::make_ball(), 3.0, 1.0));
  CHECK(bm.distance == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bm.s_opt == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("cylinder sits at sqrt(2) from the ball") {
  const auto bm = analysis::bm_ball(bodies::make_cylinder());
  CHECK(bm.distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  CHECK(bm.s_opt == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("ball distance ignores uniform dilation") {
  const auto a = analysis::bm_ball(bodies::make_cylinder());
  const auto b = analysis::bm_ball(bodies::dilate(bodies::make_cylinder(), 2.0, 2.0));
  CHECK(b.distance == doctest::Approx(a.distance).epsilon(1e-9));
}

TEST_CASE("vanishing profiles have no ball distance") {
  CHECK_THROWS_AS(analysis::bm_ball(bodies::make_capped_cylinder(0.3)),
                  analysis::AnalysisError);
}

TEST_CASE("dimension scan emits one row per (body, n) pair") {
  const auto rows = analysis::uniformity_scan({bodies::make_ball()}, {4, 5},
                                              analysis::default_eps_grid());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].body == "ball");
  CHECK(rows[0].n == 4);
  CHECK(rows[1].n == 5);
  for (const auto& r : rows) {
    CHECK(r.p == doctest::Approx(2.0).epsilon(1e-2));
    CHECK(r.c == doctest::Approx(0.5).epsilon(5e-2));
  }
  CHECK_THROWS_AS(analysis::uniformity_scan({bodies::make_ball()}, {3},
                                            analysis::default_eps_grid()),
                  std::invalid_argument);
  CHECK_THROWS_AS(analysis::uniformity_scan({bodies::make_ball()}, {},
                                            analysis::default_eps_grid()),
                  std::invalid_argument);
}
