#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "surfband/analysis.hpp"

using namespace surfband;
constexpr double pi = std::numbers::pi;

namespace {

HamiltonianRequest request(const Grid& g, std::optional<GaugeFieldSpec> f = std::nullopt) {
  return HamiltonianRequest{g, std::move(f), false, {}, Variant::Correct, 2};
}

Eigen::VectorXcd smooth_state(const Grid& g) {
  Eigen::VectorXcd psi(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double t = g.coord(i, 0), z = g.coord(i, 1);
    psi[i] = cplx(1.0 + 0.5 * std::cos(t), 0.3 * std::sin(2 * t)) * std::cos(0.4 * z);
  }
  return psi / weighted_norm(psi, g.weights());
}

}  // namespace

TEST_CASE("spectrum of the identity") {
  const Grid g = build_grid(SurfaceSpec::ring(1.0), 6);
  const OperatorMatrix I(Eigen::MatrixXcd::Identity(6, 6), g.weights(), "I");
  const auto rep = spectrum(I, 3);
  REQUIRE(rep.eigenvalues.size() == 3);
  for (const auto& e : rep.eigenvalues) CHECK(std::abs(e - 1.0) < 1e-15);
  CHECK_THROWS_AS(spectrum(I, 7), std::invalid_argument);
}

TEST_CASE("ring spectrum matches the discrete symbol") {
  const int n = 64;
  const Grid g = build_grid(SurfaceSpec::ring(1.0), n);
  const auto rep = spectrum(free_ring(request(g)), 3);
  CHECK(rep.hermitian);
  const double h = 2 * pi / n;
  const double symbol1 = (1.0 - std::cos(h)) / (h * h) - 0.125;
  CHECK(std::abs(rep.eigenvalues[0].real() + 0.125) < 1e-12);
  const double eps = 0.375 - rep.eigenvalues[1].real();
  CHECK(eps > 0.0);
  CHECK(eps <= 1e-3);
  CHECK(std::abs(rep.eigenvalues[1].real() - symbol1) < 1e-12);
  CHECK(std::abs(rep.eigenvalues[2].real() - symbol1) < 1e-12);
}

TEST_CASE("eigenvectors satisfy H v = E v") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 8, 10);
  const auto H = magnetic_sphere(request(g, GaugeFieldSpec::uniform_axial(0.7)));
  const auto rep = spectrum(H, 4, true);
  for (int k = 0; k < 4; ++k) {
    const Eigen::VectorXcd v = rep.eigenvectors.col(k);
    CHECK((H.entries * v - rep.eigenvalues[k] * v).norm() < 1e-10 * v.norm());
  }
}

TEST_CASE("pragmatic spectrum acquires imaginary parts") {
  const double a = 0.8, R = 1.0;
  const Grid g = build_grid(SurfaceSpec::cylinder(R, 1.0), 10, 6);
  HamiltonianRequest req{g, GaugeFieldSpec::none().with_radial(a), false, {}, Variant::Pragmatic, 2};
  const auto rep = spectrum(pragmatic_cylinder(req), 8);
  CHECK_FALSE(rep.hermitian);
  double max_im = 0.0;
  for (const auto& e : rep.eigenvalues) max_im = std::max(max_im, std::abs(e.imag()));
  CHECK(max_im > 0.0);
  CHECK(max_im <= a / (2.0 * R) + 1e-12);
  for (std::size_t i = 1; i < rep.eigenvalues.size(); ++i)
    CHECK(rep.eigenvalues[i - 1].real() <= rep.eigenvalues[i].real());
}

TEST_CASE("anti-Hermitian part of correct Hamiltonians vanishes") {
  const Grid g = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 10, 8);
  CHECK(antihermitian_part(magnetic_cylinder(request(g, GaugeFieldSpec::uniform_axial(1.0)))).norm <= 1e-12);
}

TEST_CASE("gauge covariance with the stencil-consistent gradient") {
  const Grid ring = build_grid(SurfaceSpec::ring(1.0), 32);
  const auto req = request(ring, GaugeFieldSpec::uniform_axial(1.0));
  const auto psi = smooth_state(ring);
  CHECK(gauge_covariance_residual(req, GaugeFunction::constant(0.9), psi) <= 1e-12);
  CHECK(gauge_covariance_residual(req, named_gauge_function("sin1", 1.0, ring.surface()), psi) <= 1e-12);

  const Grid cyl = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 16, 10);
  const auto creq = request(cyl, GaugeFieldSpec::uniform_axial(1.0));
  const auto lam = named_gauge_function("sin1_times_c2", 1.0, cyl.surface());
  CHECK(unitary_equivalence_residual(creq, lam) <= 1e-10);
  CHECK(spectrum_gauge_invariance(creq, lam, 10) <= 1e-10);
}

TEST_CASE("sampled-gradient gauge residual converges at second order") {
  std::vector<double> res;
  for (int n : {32, 64, 128}) {
    const Grid g = build_grid(SurfaceSpec::ring(1.0), n);
    const auto req = request(g, GaugeFieldSpec::uniform_axial(1.0));
    res.push_back(gauge_covariance_residual(req, named_gauge_function("sin1", 1.0, g.surface()),
                                            smooth_state(g), GaugeRoute::SampledGradient));
  }
  CHECK(res[0] > 1e-8);
  CHECK(convergence_order(res[0], res[1]) == doctest::Approx(2.0).epsilon(0.15));
  CHECK(convergence_order(res[1], res[2]) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("flux periodicity on the ring") {
  const PhysicalConstants c;
  const Grid g = build_grid(SurfaceSpec::ring(1.0), 40);
  for (double flux : {0.0, 0.3, 1.1}) {
    const auto a = spectrum(magnetic_cylinder(request(g, GaugeFieldSpec::ab_flux(flux))), 8).eigenvalues;
    const auto b = spectrum(magnetic_cylinder(request(g, GaugeFieldSpec::ab_flux(flux + c.flux_quantum()))), 8).eigenvalues;
    CHECK(multiset_distance(a, b) <= 1e-10);
  }
}

TEST_CASE("analytic references") {
  const PhysicalConstants c;
  CHECK(analytic_ring_spectrum(1.0, 0.0, 0, 0, c)[0] == -0.125);
  const auto half = analytic_ring_spectrum(1.0, 0.5 * c.flux_quantum(), 0, 1, c);
  CHECK(half[0] == doctest::Approx(0.0));
  CHECK(half[1] == doctest::Approx(0.0));
  const auto a = analytic_ring_spectrum(1.0, 0.0, -5, 5, c);
  const auto b = analytic_ring_spectrum(1.0, c.flux_quantum(), -4, 6, c);
  CHECK(multiset_distance(a, b) < 1e-12);

  CHECK(analytic_cylinder_landau(1.0, 2.0, 1, 0.0, c) == -0.125);
  CHECK(analytic_cylinder_landau(1.3, 0.0, 2, 0.4, c) ==
        doctest::Approx(0.5 * 0.16 + 2.0 / (1.69) - 0.125 / 1.69));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const double R = 1.0;
    const int m = testing_support::uniform_int(rng, -4, 4);
    const double B = 2.0 * m;
    const int l = testing_support::uniform_int(rng, -6, 6);
    CHECK(analytic_cylinder_landau(R, B, l, 0.0, c) ==
          doctest::Approx(analytic_cylinder_landau(R, B, 2 * m - l, 0.0, c)));
  }
}

TEST_CASE("multiset distance ignores ordering") {
  CHECK(multiset_distance(std::vector<double>{3, 1, 2}, std::vector<double>{1, 2, 3}) == 0.0);
  CHECK(multiset_distance(std::vector<cplx>{{1, 1}, {1, -1}}, std::vector<cplx>{{1, -1}, {1, 1.5}}) == 0.5);
  CHECK_THROWS(multiset_distance(std::vector<double>{1}, std::vector<double>{1, 2}));
}
