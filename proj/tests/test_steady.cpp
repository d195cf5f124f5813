#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "eelbm/closures.hpp"
#include "eelbm/steady.hpp"

using namespace eelbm;
using doctest::Approx;

TEST_CASE("bubble column velocity") {
  CHECK(bubble_column_velocity(1e-2, 2.0, 1e-6, 1e-2) == Approx(9.94987e-4).epsilon(1e-6));
  CHECK(bubble_column_velocity(0.3, 1.0, 1e-6, 1e-2) == 0.0);
  // The reported 2.1859e-3 at alpha = 0.950 is a rounded display value.
  CHECK(bubble_column_velocity(0.950, 2.0, 1e-6, 1e-2) == Approx(2.1859e-3).epsilon(5e-3));
  CHECK_THROWS_AS(bubble_column_velocity(0.0, 2.0, 1e-6, 1e-2), std::domain_error);
}

TEST_CASE("steady liquid velocity") {
  CHECK(steady_liquid_velocity(0.008, 0.002, 0.0) == Approx(0.006).epsilon(1e-14));
  CHECK(steady_liquid_velocity(8.4237e-3, 2.1859e-3, 0.9496) == Approx(3.9754e-3).epsilon(2e-4));
  CHECK(steady_liquid_velocity(8.4237e-3, 2.1859e-3, 1.0) == Approx(3.9282e-3).epsilon(2e-4));
  CHECK_THROWS_AS(steady_liquid_velocity(0.001, 0.002, 0.5), std::domain_error);
  CHECK_THROWS_AS(steady_liquid_velocity(0.004, 0.002, -0.1), std::domain_error);
}

TEST_CASE("steady liquid velocity satisfies the defining balance") {
  for (double r : {0.0, 0.2, 0.9496, 1.0, 1.7, 3.0}) {
    const double ug = 8.4e-3, u0 = 2.2e-3;
    const double ul = steady_liquid_velocity(ug, u0, r);
    const double res = r * ul * ul - (ug - ul) * (ug - ul) + u0 * u0;
    if (r == 1.0) continue;  // approximate branch
    CHECK(std::abs(res) <= 1e-12 * ug * ug);
  }
}

TEST_CASE("r = 1 branch is continuous") {
  const double ug = 8.4e-3, u0 = 2.2e-3;
  const double at = steady_liquid_velocity(ug, u0, 1.0);
  for (double r : {1.0 - 1e-6, 1.0 + 1e-6}) {
    CHECK(steady_liquid_velocity(ug, u0, r) == Approx(at).epsilon(1e-8));
  }
}

TEST_CASE("steady regime from outlet state") {
  const SteadyRegime s = steady_regime(8.4237e-3, 0.95, 2.0, 1e-6, 1e-2, 1e-2);
  CHECK(s.r == Approx(0.95));
  CHECK(s.alpha_l_bar == Approx(0.05));
  CHECK(s.u_g0_bar == Approx(bubble_column_velocity(0.95, 2.0, 1e-6, 1e-2)));
  CHECK(s.u_l_bar < s.u_g_bar);
}

TEST_CASE("similarity scale") {
  const SimilarityScale s = similarity_scale(9.81, 247.5, 1.2e-9, 1.45e-4);
  CHECK(s.c_over_tau == Approx(8.175e9).epsilon(1e-3));
  CHECK(s.c_times_tau == Approx(5.86e-7).epsilon(1e-3));
  CHECK(s.c == Approx(69.2).epsilon(5e-3));
  CHECK(s.c == Approx(std::sqrt(s.c_over_tau * s.c_times_tau)).epsilon(1e-15));
  CHECK(s.tau * s.c == Approx(s.c_times_tau));
  const SimilarityScale one = similarity_scale(2.0, 3.0, 2.0, 3.0);
  CHECK(one.c == Approx(1.0));
  CHECK(0.3 / s.c == Approx(0.0043).epsilon(1e-2));
  CHECK_THROWS_AS(similarity_scale(0.0, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("momentum ratio") {
  // Reference state of the water/air column.
  const double R = 833.3, g = 9.81, kappa = 247.5;
  const double M = momentum_ratio(kappa, 0.1, 0.3, 0.075, R, g);
  CHECK(M == Approx(1.04).epsilon(1e-2));
  CHECK(momentum_ratio(kappa, 0.1, 0.2, 0.2, R, g) == 0.0);

  // Same ratio in lattice units.
  const SimilarityScale s = similarity_scale(g, kappa, 1.2e-9, 1.45e-4);
  const double M_hat = momentum_ratio(1.45e-4, 0.1, 0.3 / s.c, 0.075 / s.c, R, 1.2e-9);
  CHECK(M_hat == Approx(M).epsilon(1e-12));
}
