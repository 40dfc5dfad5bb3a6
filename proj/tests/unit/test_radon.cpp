#include <doctest.h>

#include <cmath>
#include <vector>

#include "revolve/bodies.hpp"
#include "revolve/quadrature.hpp"
#include "revolve/radon.hpp"

using namespace revolve;

TEST_CASE("cylinder equatorial radius is (n-1)/(n-2)") {
  const auto cyl = bodies::make_cylinder();
  for (int n : {3, 4, 5, 8, 12}) {
    const double want = (n - 1.0) / (n - 2.0);
    CHECK(radon::ik_radial(cyl, n, M_PI_2) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("the ball maps to a ball of the wallis radius") {
  for (int n : {3, 5, 7, 10}) {
    const double want = wallis(n - 3);
    for (double t : {0.0, 0.37, 1.1, M_PI_2}) {
      CHECK(radon::ik_radial(bodies::make_ball(), n, t) ==
            doctest::Approx(want).epsilon(1e-10));
    }
    CHECK(radon::ik_axis(bodies::make_ball(), n) == doctest::Approx(want).epsilon(1e-14));
    // axis weight identity behind the closed-form axis value
    const radon::NormalizationConstants nc{n, false};
    CHECK(wallis(n - 3) ==
          doctest::Approx(nc.d_n() * std::sqrt(M_PI / (2.0 * n))).epsilon(1e-12));
  }
}

TEST_CASE("double cone at n=3 has unit equatorial value") {
  CHECK(radon::ik_radial(bodies::make_double_cone(), 3, M_PI_2) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(radon::psi_ik(bodies::make_double_cone(), 3, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("profile is continuous into the closed-form axis value") {
  for (const auto& k : {bodies::make_cylinder(), bodies::make_pbody(3.0)}) {
    for (int n : {4, 5}) {
      const double axis = radon::ik_axis(k, n);
      CHECK(radon::ik_radial(k, n, 1e-13) == axis); // dispatches to the closed form
      CHECK(radon::ik_radial(k, n, 1e-4) == doctest::Approx(axis).epsilon(1e-6));
    }
  }
}

TEST_CASE("psi of the intersection body agrees with the polar route") {
  const auto k = bodies::make_pbody(3.0);
  for (int n : {4, 5, 7}) {
    for (double x : {0.0, 0.3, 1.0, 2.5}) {
      const double via_rho = radon::ik_radial(k, n, std::atan2(1.0, x)) /
                             std::hypot(1.0, x);
      CHECK(radon::psi_ik(k, n, x) == doctest::Approx(via_rho).epsilon(2e-10));
    }
  }
}

TEST_CASE("psi route stays regular at n=3") {
  const auto cone = bodies::make_double_cone();
  for (double x : {0.1, 0.9, 2.0}) {
    const double via_rho = radon::ik_radial(cone, 3, std::atan2(1.0, x)) /
                           std::hypot(1.0, x);
    CHECK(radon::psi_ik(cone, 3, x) == doctest::Approx(via_rho).epsilon(2e-9));
  }
}

TEST_CASE("operator grid spans the quadrant and reports its error") {
  const auto step = radon::intersection_body(bodies::make_cylinder(), 4);
  CHECK(step.theta.size() == 1024);
  CHECK(step.rho.size() == 1024);
  CHECK(step.theta.front() == 0.0);
  CHECK(step.theta.back() == doctest::Approx(M_PI_2).epsilon(1e-15));
  CHECK(step.rho.back() == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(step.err_est < 1e-8);
  CHECK(step.n == 4);
  // the attached profile interpolates the same samples
  CHECK(step.profile.radial(step.theta[700]) ==
        doctest::Approx(step.rho[700]).epsilon(1e-12));
}

TEST_CASE("ball profiles stay constant under the operator") {
  const auto step = radon::intersection_body(bodies::make_ball(), 6);
  for (size_t i = 0; i < step.rho.size(); i += 101)
    CHECK(step.rho[i] == doctest::Approx(wallis(3)).epsilon(1e-10));
}

TEST_CASE("iteration renormalizes between steps") {
  const auto steps = radon::iterate_intersection(bodies::make_ball(), 5, 3);
  CHECK(steps.size() == 3);
  for (const auto& st : steps) {
    // each step sees a unit ball, so each output is the wallis radius;
    // renormalization noise compounds through rho^(n-1), hence the slack
    CHECK(st.rho.front() == doctest::Approx(wallis(2)).epsilon(1e-8));
    CHECK(st.rho.back() == doctest::Approx(wallis(2)).epsilon(1e-8));
  }
}

TEST_CASE("a single iteration equals one operator application") {
  const auto one = radon::iterate_intersection(bodies::make_pbody(4.0), 5, 1);
  const auto direct = radon::intersection_body(bodies::make_pbody(4.0), 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].rho == direct.rho);
}

TEST_CASE("iteration bounds and degenerate inputs are rejected") {
  const auto ball = bodies::make_ball();
  CHECK_THROWS_AS(radon::iterate_intersection(ball, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(radon::iterate_intersection(ball, 5, 17), std::invalid_argument);
  CHECK_THROWS_AS(radon::ik_radial(ball, 2, 0.5), std::invalid_argument);

  std::vector<double> theta, rho;
  for (int i = 0; i < 65; ++i) {
    theta.push_back(M_PI_2 * i / 64);
    rho.push_back(0.0);
  }
  const auto zero = bodies::profile_from_samples(theta, rho);
  CHECK_THROWS_AS(radon::intersection_view(zero, 4), bodies::ProfileError);
}

TEST_CASE("uniform dilation scales the output by its (n-1) power") {
  const auto big = bodies::dilate(bodies::make_ball(), 1.3, 1.3);
  CHECK(radon::ik_radial(big, 4, 0.8) ==
        doctest::Approx(std::pow(1.3, 3.0)).epsilon(1e-10));
}

TEST_CASE("true normalization multiplies by c_n") {
  const auto cyl = bodies::make_cylinder();
  const radon::NormalizationConstants nc{5, true};
  CHECK(radon::ik_radial(cyl, 5, 1.0, {}, true) ==
        doctest::Approx(nc.c_n() * radon::ik_radial(cyl, 5, 1.0)).epsilon(1e-12));
  // c_5 = (3/4) * 2 pi^(3/2) / Gamma(5/2): spot value
  const double g52 = 0.75 * std::sqrt(M_PI); // Gamma(5/2) = 3/4 sqrt(pi)
  CHECK(nc.c_n() == doctest::Approx(0.75 * 2.0 * std::pow(M_PI, 1.5) / g52).epsilon(1e-13));
}

TEST_CASE("a starved panel budget surfaces as QuadratureError") {
  QuadratureConfig cfg;
  cfg.panels = 1;
  CHECK_THROWS_AS(radon::ik_radial(bodies::make_random_star(7, 0.6), 5, 1.0, cfg),
                  QuadratureError);
}
