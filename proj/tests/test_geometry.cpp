#include <stdexcept>
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "surfband/geometry.hpp"

using namespace surfband;

TEST_CASE("principal curvatures") {
  const auto cyl = principal_curvatures(SurfaceSpec::cylinder(1.0, 1.0));
  CHECK(cyl.kappa1 == -1.0);
  CHECK(cyl.kappa2 == 0.0);

  const auto sph = principal_curvatures(SurfaceSpec::sphere(2.0));
  CHECK(sph.kappa1 == -0.5);
  CHECK(sph.kappa2 == -0.5);

  const auto ring = principal_curvatures(SurfaceSpec::ring(3.0));
  CHECK(ring.kappa1 == doctest::Approx(-1.0 / 3.0));
  CHECK(ring.kappa2 == 0.0);

  const auto flat = principal_curvatures(SurfaceSpec::cylinder(1e6, 1.0));
  CHECK(flat.kappa1 == doctest::Approx(-1e-6));
  CHECK(std::abs(geometric_kinetic_energy(SurfaceSpec::cylinder(1e6, 1.0), {})) < 1e-12);
}

TEST_CASE("curvature data is consistent") {
  const auto c = curvature(SurfaceSpec::cylinder(0.5, 2.0));
  CHECK(c.mean == 0.5 * (c.kappa1 + c.kappa2));
  CHECK(c.gaussian == c.kappa1 * c.kappa2);
}

TEST_CASE("geometric kinetic energy") {
  const PhysicalConstants unit;
  CHECK(geometric_kinetic_energy(SurfaceSpec::cylinder(1.0, 1.0), unit) == -0.125);
  CHECK(geometric_kinetic_energy(SurfaceSpec::ring(1.0), unit) == -0.125);
  CHECK(geometric_kinetic_energy(SurfaceSpec::sphere(1.0), unit) == 0.0);
  CHECK(geometric_kinetic_energy(SurfaceSpec::sphere(7.5), unit) == 0.0);
}

TEST_CASE("geometric kinetic energy matches -hbar^2/8mR^2 for random parameters") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double R = testing_support::uniform(rng, 0.05, 50.0);
    const PhysicalConstants c{testing_support::uniform(rng, 0.1, 3.0),
                              testing_support::uniform(rng, 0.1, 3.0), 1.0};
    const double expected = -c.hbar * c.hbar / (8.0 * c.mass * R * R);
    CHECK(geometric_kinetic_energy(SurfaceSpec::cylinder(R, 1.0), c) ==
          doctest::Approx(expected).epsilon(1e-14));
    CHECK(geometric_kinetic_energy(SurfaceSpec::sphere(R), c) == 0.0);
  }
}

TEST_CASE("geometric kinetic energy is even in the curvature sign") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const double k1 = testing_support::uniform(rng, -5.0, 5.0);
    const double k2 = testing_support::uniform(rng, -5.0, 5.0);
    const CurvatureData a{k1, k2, 0.5 * (k1 + k2), k1 * k2};
    const CurvatureData b{-k1, -k2, -0.5 * (k1 + k2), k1 * k2};
    CHECK(geometric_kinetic_energy(a, {}) == geometric_kinetic_energy(b, {}));
  }
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(SurfaceSpec::cylinder(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::cylinder(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::sphere(0.0), std::invalid_argument);
  CHECK_THROWS_AS((PhysicalConstants{1.0, 1.0, 0.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW((PhysicalConstants{1.0, 1.0, -1.0}.validate()));
  CHECK(surface_kind_from_string("sphere") == SurfaceKind::Sphere);
  CHECK_THROWS(surface_kind_from_string("torus"));
}
