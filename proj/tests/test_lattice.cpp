#include <cmath>
#include <random>

#include "doctest.h"
#include "eelbm/lattice.hpp"

using namespace eelbm;
using doctest::Approx;

namespace {

void check_dist(const Dist3& f, const Dist3& want, double tol) {
  for (int q = 0; q < 3; ++q) CHECK(f[q] == Approx(want[q]).epsilon(tol));
}

}  // namespace

TEST_CASE("lattice weights and velocities") {
  const auto& w = LatticeSpec::weights;
  const auto& v = LatticeSpec::velocities;
  CHECK(std::abs(w[0] + w[1] + w[2] - 1.0) <= 2.3e-16);
  CHECK(w[0] * v[0] + w[1] * v[1] + w[2] * v[2] == 0.0);
  CHECK(w[0] * v[0] * v[0] + w[1] * v[1] * v[1] + w[2] * v[2] * v[2] == Approx(kCs2).epsilon(1e-16));
  for (int q = 0; q < 3; ++q) CHECK(v[LatticeSpec::opposite(q)] == -v[q]);
}

TEST_CASE("standard equilibrium") {
  check_dist(equilibrium_standard(1.0, 0.0), {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}, 1e-15);
  const Dist3 z = equilibrium_standard(0.0, 0.5);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
  CHECK(z[2] == 0.0);
  const Dist3 f = equilibrium_standard(0.8, 0.01);
  check_dist(f, {0.533253, 0.137373, 0.129373}, 1e-6);
  const Moments m = moments(f);
  CHECK(m.m0 == Approx(0.8).epsilon(1e-15));
  CHECK(m.m1 == Approx(0.008).epsilon(1e-14));
  CHECK(m.m2 == Approx(0.8 * (kCs2 + 1e-4)).epsilon(1e-14));
}

TEST_CASE("incompressible equilibrium") {
  check_dist(equilibrium_incompressible(1.0, 1.0, 0.0), {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}, 1e-15);
  const Dist3 f = equilibrium_incompressible(1.0, 1.0, 0.01);
  check_dist(f, {0.666567, 0.171717, 0.161717}, 1e-6);
  CHECK(moments(f).m1 == Approx(0.01).epsilon(1e-14));
  CHECK(moments(equilibrium_incompressible(0.9, 1.3, 0.02)).m1 == Approx(0.02).epsilon(1e-14));
}

TEST_CASE("linearized equilibrium") {
  const Dist3 z = equilibrium_linearized(0.7, 0.0, 0.0);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == 0.0);
  CHECK(z[2] == 0.0);
  check_dist(equilibrium_linearized(0.0, 0.3, 0.02), {0.3, 0.01, -0.01}, 1e-15);
  const Dist3 f = equilibrium_linearized(1.0, 0.001, 0.0005);
  check_dist(f, {0.000666667, 0.000416667, -0.000083333}, 1e-5);
  const Moments m = moments(f);
  CHECK(m.m0 == Approx(0.001).epsilon(1e-14));
  CHECK(m.m1 == Approx(0.0005).epsilon(1e-14));
  CHECK(m.m2 == Approx(kCs2 * 0.001).epsilon(1e-14));
}

TEST_CASE("moments of simple vectors") {
  const Moments a = moments({2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0});
  CHECK(a.m0 == Approx(1.0));
  CHECK(a.m1 == 0.0);
  CHECK(a.m2 == Approx(kCs2));
  const Moments b = moments({0.0, 1.0, 0.0});
  CHECK(b.m0 == 1.0);
  CHECK(b.m1 == 1.0);
  CHECK(b.m2 == 1.0);
}

TEST_CASE("incompressible and standard agree at unit density") {
  for (double u : {-0.05, -0.001, 0.0, 0.003, 0.07}) {
    const Moments s = moments(equilibrium_standard(1.0, u));
    const Moments i = moments(equilibrium_incompressible(1.0, 1.0, u));
    CHECK(s.m0 == Approx(i.m0).epsilon(1e-15));
    CHECK(s.m1 == Approx(i.m1).epsilon(1e-15));
  }
}

TEST_CASE("eta weights sum to one") {
  for (double phi : {0.0, 0.3, 1.0, 1.7, 25.0}) {
    double sum = 0.0;
    for (int q = 0; q < 3; ++q) sum += LatticeSpec::weights[q] * eta(q, phi);
    CHECK(std::abs(sum - 1.0) <= 1e-14);
  }
}

TEST_CASE("randomized moment identities") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> U(-0.3, 0.3), A(0.0, 2.0), P(0.2, 3.0);
  double worst = 0.0;
  for (int k = 0; k < 20000; ++k) {
    const double a = A(rng), u = U(rng), phi = P(rng), s = U(rng), g = U(rng);
    const Moments ms = moments(equilibrium_standard(a, u));
    const Moments mi = moments(equilibrium_incompressible(phi, a, u));
    const Moments ml = moments(equilibrium_linearized(phi, s, g));
    const double errs[] = {ms.m0 - a,       ms.m1 - a * u,    ms.m2 - a * (kCs2 + u * u),
                           mi.m0 - a,       mi.m1 - u,        mi.m2 - (phi * kCs2 * a + u * u),
                           ml.m0 - s,       ml.m1 - g,        ml.m2 - phi * kCs2 * s};
    for (double e : errs) worst = std::max(worst, std::abs(e));
  }
  CHECK(worst <= 1e-14);
}
