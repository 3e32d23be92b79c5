#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "surfband/grid.hpp"

using namespace surfband;
constexpr double pi = std::numbers::pi;

TEST_CASE("ring grid") {
  const Grid g = build_grid(SurfaceSpec::ring(1.0), 8);
  CHECK(g.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(g.weights()[i] == doctest::Approx(2.0 * pi / 8.0));
    CHECK(g.coord(i, 0) == doctest::Approx(2.0 * pi * i / 8.0));
  }
}

TEST_CASE("sphere polar nodes sit at half offsets") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 4, 4);
  const auto& nodes = g.axis(0).nodes;
  REQUIRE(nodes.size() == 4);
  CHECK(nodes[0] == doctest::Approx(pi / 8));
  CHECK(nodes[1] == doctest::Approx(3 * pi / 8));
  CHECK(nodes[2] == doctest::Approx(5 * pi / 8));
  CHECK(nodes[3] == doctest::Approx(7 * pi / 8));
}

TEST_CASE("weights sum to the surface area") {
  for (int n : {4, 7, 16, 33}) {
    const double R = 1.7, L = 0.6;
    const Grid ring = build_grid(SurfaceSpec::ring(R), n);
    CHECK(std::abs(ring.weights().sum() - 2 * pi * R) <= 1e-10 * 2 * pi * R);
    const Grid cyl = build_grid(SurfaceSpec::cylinder(R, L), n, n + 1);
    CHECK(std::abs(cyl.weights().sum() - 4 * pi * R * L) <= 1e-10 * 4 * pi * R * L);
    const Grid sph = build_grid(SurfaceSpec::sphere(R), n, 2 * n);
    CHECK(std::abs(sph.weights().sum() - 4 * pi * R * R) <= 1e-10 * 4 * pi * R * R);
    CHECK((sph.weights().array() > 0).all());
  }
}

TEST_CASE("cylinder z nodes exclude the walls") {
  const Grid g = build_grid(SurfaceSpec::cylinder(1.0, 2.0), 4, 8);
  const auto& z = g.axis(1).nodes;
  CHECK(z.front() > -2.0);
  CHECK(z.back() < 2.0);
  CHECK(z.front() + z.back() == doctest::Approx(0.0));
}

TEST_CASE("polar quadratures integrate cos^k exactly") {
  // int_0^pi cos^k(t) sin(t) dt = (1 + (-1)^k) / (k + 1)
  for (int n : {6, 9, 16}) {
    const auto fw = fejer_weights(n);
    const auto cc = clenshaw_curtis_weights(n);
    for (int k = 0; k < n; ++k) {
      const double exact = (1.0 + (k % 2 == 0 ? 1.0 : -1.0)) / (k + 1);
      double a = 0.0, b = 0.0;
      for (int j = 0; j < n; ++j) a += fw[j] * std::pow(std::cos((j + 0.5) * pi / n), k);
      for (int f = 0; f <= n; ++f) b += cc[f] * std::pow(std::cos(f * pi / n), k);
      CHECK(a == doctest::Approx(exact).epsilon(1e-13));
      CHECK(b == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_WITH_AS(build_grid(SurfaceSpec::ring(1.0), 2), doctest::Contains("grid too small"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_grid(SurfaceSpec::cylinder(1.0, 1.0), 8, 2),
                       doctest::Contains("grid too small"), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(SurfaceSpec::ring(1.0), 8, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(SurfaceSpec::sphere(1.0), 8, 7), std::invalid_argument);
}

TEST_CASE("extended indices follow the axis closures") {
  const Grid cyl = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 5, 4);
  CHECK(cyl.resolve(0, 2, -1).node == cyl.index(4, 2));
  CHECK(cyl.resolve(0, 2, 6).node == cyl.index(1, 2));
  const auto wall = cyl.resolve(1, 3, -2);
  CHECK(wall.node == cyl.index(3, 1));
  CHECK(wall.sign == -1.0);
  const auto top = cyl.resolve(1, 3, 4);
  CHECK(top.node == cyl.index(3, 3));
  CHECK(top.sign == -1.0);

  const Grid sph = build_grid(SurfaceSpec::sphere(1.0), 6, 8);
  const auto north = sph.resolve(0, 1, -1);
  CHECK(north.node == sph.index(0, 5));
  CHECK(north.sign == 1.0);
  CHECK(sph.resolve(0, 1, 7).node == sph.index(4, 5));
}
