#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "surfband/fields.hpp"

using namespace surfband;
constexpr double pi = std::numbers::pi;

TEST_CASE("analytic potentials") {
  const auto cyl = SurfaceSpec::cylinder(1.0, 1.0);
  const auto uni = GaugeFieldSpec::uniform_axial(2.0);
  for (double theta : {0.0, 1.0, 4.0}) CHECK(eval_potential(uni, cyl, theta, 0.3).c1 == 1.0);

  const auto zero = GaugeFieldSpec::ab_flux(0.0);
  const auto v = eval_potential(zero, cyl, 0.4, 0.1);
  CHECK(v.r == 0.0);
  CHECK(v.c1 == 0.0);
  CHECK(v.c2 == 0.0);

  const auto sph = SurfaceSpec::sphere(1.0);
  CHECK(eval_potential(GaugeFieldSpec::uniform_axial(1.0), sph, pi / 2, 0.0).c2 ==
        doctest::Approx(0.5));
  CHECK_THROWS_WITH(eval_potential(GaugeFieldSpec::ab_flux(1.0), sph, 0.0, 0.0),
                    "singular potential at pole");
}

TEST_CASE("magnetic fields of analytic potentials") {
  const auto cyl = SurfaceSpec::cylinder(1.0, 1.0);
  const auto b = magnetic_field_of(GaugeFieldSpec::uniform_axial(2.0), cyl, 0.3, 0.2);
  CHECK(b.r == 0.0);
  CHECK(b.c1 == 0.0);
  CHECK(b.c2 == 2.0);

  const auto ab = magnetic_field_of(GaugeFieldSpec::ab_flux(3.0), cyl, 0.3, 0.2);
  CHECK(ab.r == 0.0);
  CHECK(ab.c1 == 0.0);
  CHECK(ab.c2 == 0.0);

  // Uniform field on the sphere is B z-hat in every frame.
  const auto sph = SurfaceSpec::sphere(1.0);
  const auto bs = magnetic_field_of(GaugeFieldSpec::uniform_axial(1.5), sph, 0.7, 2.1);
  const auto xyz = to_cartesian(sph, 0.7, 2.1, bs);
  CHECK(std::abs(xyz[0]) < 1e-15);
  CHECK(std::abs(xyz[1]) < 1e-15);
  CHECK(xyz[2] == doctest::Approx(1.5));
}

TEST_CASE("sampled constant A_z has zero curl") {
  const Grid g = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 8, 6);
  std::vector<double> a1(g.size(), 0.0), a2(g.size(), 0.7);
  GaugeFieldSpec f;
  f.sampled = SampledPotential::from_nodes(g, a1, a2);
  for (const auto& b : magnetic_field_samples(f, g)) CHECK(std::abs(b.r) < 1e-14);
}

TEST_CASE("surface gradients") {
  const Grid ring = build_grid(SurfaceSpec::ring(1.0), 64);
  const auto zero = surface_gradient(GaugeFunction::constant(3.0), ring);
  for (double x : zero.c1) CHECK(x == 0.0);

  const auto sin1 = named_gauge_function("sin1", 1.0, ring.surface());
  for (int order : {2, 4}) {
    const auto g = surface_gradient(sin1, ring, order);
    double err = 0.0;
    for (int i = 0; i < ring.size(); ++i) err = std::max(err, std::abs(g.c1[i] - std::cos(ring.coord(i, 0))));
    const double h = 2 * pi / 64;
    CHECK(err < (order == 2 ? h * h / 6 : std::pow(h, 4) / 30) * 1.01);
  }

  const Grid cyl = build_grid(SurfaceSpec::cylinder(1.0, 2.0), 6, 9);
  const GaugeFunction z{"z", [](double, double z) { return z; }, {}};
  for (int order : {2, 4}) {
    const auto g = surface_gradient(z, cyl, order);
    for (int i = 0; i < cyl.size(); ++i) {
      CHECK(g.c2[i] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(g.c1[i]) < 1e-12);
    }
  }
}

TEST_CASE("multivalued gauge functions are rejected") {
  const Grid ring = build_grid(SurfaceSpec::ring(1.0), 16);
  const GaugeFunction winding{"theta", [](double t, double) { return t; }, {}};
  CHECK_THROWS_WITH(surface_gradient(winding, ring), "multivalued gauge function");
  CHECK_THROWS_WITH(add_gauge(GaugeFieldSpec::none(), winding, ring), "multivalued gauge function");

  const Grid sph = build_grid(SurfaceSpec::sphere(1.0), 8, 8);
  CHECK_THROWS_WITH(add_gauge(GaugeFieldSpec::none(),
                              named_gauge_function("sin1_times_c2", 1.0, sph.surface()), sph),
                    "multivalued gauge function");
  // phi-dependent values at a pole make lambda multivalued there.
  const GaugeFunction pole{"cos phi", [](double, double p) { return std::cos(p); }, {}};
  CHECK_THROWS_WITH(surface_gradient(pole, sph), "multivalued gauge function");
}

TEST_CASE("add_gauge keeps the field and is invertible") {
  const Grid g = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 12, 10);
  const auto lam = named_gauge_function("sin1_times_c2", 0.8, g.surface());
  const GaugeFieldSpec base = GaugeFieldSpec::uniform_axial(1.0);
  const GaugeFieldSpec shifted = add_gauge(base, lam, g);
  for (const auto& b : magnetic_field_samples(shifted, g)) {
    CHECK(std::abs(b.r) < 1e-12);
    CHECK(b.c2 == 1.0);
  }

  GaugeFunction neg = lam;
  neg.value = [lam](double a, double b) { return -lam(a, b); };
  const GaugeFieldSpec back = add_gauge(shifted, neg, g);
  const auto& s = *back.sampled;
  for (int i = 0; i < g.size(); ++i) {
    CHECK(std::abs(s.a1[i]) < 1e-14);
    CHECK(std::abs(s.a2[i]) < 1e-14);
    CHECK(std::abs(s.e1[i]) < 1e-14);
    CHECK(std::abs(s.e2[i]) < 1e-14);
  }

  const GaugeFieldSpec c = add_gauge(GaugeFieldSpec::none(), GaugeFunction::constant(2.0), g);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(c.sampled->a1[i] == 0.0);
    CHECK(c.sampled->e1[i] == 0.0);
  }
}

TEST_CASE("add_gauge composes like pointwise addition") {
  std::mt19937_64 rng(31);
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 8, 10);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = testing_support::uniform(rng, -2, 2), b = testing_support::uniform(rng, -2, 2);
    const auto l1 = named_gauge_function("cartesian_x", a, g.surface());
    const auto l2 = named_gauge_function("cos1", b, g.surface());
    const GaugeFunction sum{"sum", [&](double x, double y) { return l1(x, y) + l2(x, y); }, {}};
    const auto seq = add_gauge(add_gauge(GaugeFieldSpec::none(), l1, g), l2, g);
    const auto once = add_gauge(GaugeFieldSpec::none(), sum, g);
    for (int i = 0; i < g.size(); ++i) {
      CHECK(seq.sampled->e1[i] == doctest::Approx(once.sampled->e1[i]).epsilon(1e-12));
      CHECK(seq.sampled->e2[i] == doctest::Approx(once.sampled->e2[i]).epsilon(1e-12));
      CHECK(seq.sampled->a1[i] == doctest::Approx(once.sampled->a1[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("sphere gauge shift keeps the normal field") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 10, 12);
  const auto shifted =
      add_gauge(GaugeFieldSpec::uniform_axial(1.0), named_gauge_function("cartesian_x", 1.0, g.surface()), g);
  const auto b = magnetic_field_samples(shifted, g);
  for (int i = 0; i < g.size(); ++i)
    CHECK(b[i].r == doctest::Approx(std::cos(g.coord(i, 0))).epsilon(1e-12));
}

TEST_CASE("link phases carry e/hbar times the exact line integrals") {
  const double R = 1.3, flux = 0.9;
  const PhysicalConstants c{1.0, 1.0, -2.0};
  const Grid g = build_grid(SurfaceSpec::ring(R), 10);
  const auto links = link_phases(GaugeFieldSpec::ab_flux(flux), g, c);
  double total = 0.0;
  for (double t : links.axis[0]) total += t;
  CHECK(total == doctest::Approx(c.coupling() * flux));
}

TEST_CASE("CSV loader") {
  const Grid g = build_grid(SurfaceSpec::ring(1.0), 8);
  const auto s = load_sampled_potential_csv(SURFBAND_TEST_DATA "/ring_constant_field.csv", g);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(s.a1[i] == 0.25);
    CHECK(s.ar[i] == doctest::Approx(0.1 * std::cos(g.coord(i, 0))));
  }
  GaugeFieldSpec f;
  f.sampled = s;
  CHECK(eval_potential(f, g.surface(), g.coord(3, 0), 0.0).r == doctest::Approx(0.1 * std::cos(g.coord(3, 0))));
  CHECK_THROWS(eval_potential(f, g.surface(), 0.1, 0.0));

  const std::string missing = "/tmp/surfband_no_header.csv";
  {
    std::ofstream out(missing);
    out << "0,0,1,1\n";
  }
  CHECK_THROWS_WITH_AS(load_sampled_potential_csv(missing, g), doctest::Contains("header"),
                       std::invalid_argument);
  const Grid big = build_grid(SurfaceSpec::ring(1.0), 16);
  CHECK_THROWS_AS(load_sampled_potential_csv(SURFBAND_TEST_DATA "/ring_constant_field.csv", big),
                  std::invalid_argument);
}
