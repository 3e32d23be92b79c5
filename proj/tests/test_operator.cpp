#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "surfband/operator.hpp"

using namespace surfband;
constexpr double pi = std::numbers::pi;

TEST_CASE("second derivative annihilates constants") {
  for (int order : {2, 4}) {
    const Grid g = build_grid(SurfaceSpec::ring(1.0), 12);
    const auto D2 = second_derivative_operator(g, 0, order);
    const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(g.size());
    CHECK((D2.entries * one).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("second derivative Fourier symbol on a ring") {
  const int n = 16;
  const Grid g = build_grid(SurfaceSpec::ring(1.0), n);
  const double h = 2 * pi / n;
  const auto D2 = second_derivative_operator(g, 0, 2);
  Eigen::VectorXcd mode(n);
  for (int j = 0; j < n; ++j) mode[j] = std::polar(1.0, g.coord(j, 0));
  const Eigen::VectorXcd out = D2.entries * mode;
  const double symbol = -2.0 * (1.0 - std::cos(h)) / (h * h);
  CHECK((out - symbol * mode).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("first derivative is exact on linear samples at interior nodes") {
  const Grid g = build_grid(SurfaceSpec::cylinder(1.0, 1.5), 3, 10);
  for (int order : {2, 4}) {
    const auto D = derivative_operator(g, 1, order);
    Eigen::VectorXcd z(g.size());
    for (int i = 0; i < g.size(); ++i) z[i] = g.coord(i, 1);
    const Eigen::VectorXcd dz = D.entries * z;
    const int reach = order / 2;
    for (int i = 0; i < g.size(); ++i) {
      const int j = g.coord_index(i, 1);
      if (j < reach || j >= g.extent(1) - reach) continue;
      CHECK(std::abs(dz[i] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("second derivative is symmetric under uniform weights") {
  const Grid ring = build_grid(SurfaceSpec::ring(2.0), 9);
  const Grid cyl = build_grid(SurfaceSpec::cylinder(1.0, 1.0), 6, 7);
  for (int order : {2, 4}) {
    const auto a = second_derivative_operator(ring, 0, order);
    CHECK((a.entries - a.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const auto b = second_derivative_operator(cyl, 1, order);
    CHECK((b.entries - b.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("polar flux-form operator is Hermitian under the sphere weights") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 16, 8);
  for (int order : {2, 4}) {
    const auto op = second_derivative_operator(g, 0, order);
    CHECK(hermiticity_residual(op) <= 1e-12);
  }
}

TEST_CASE("multiplication operators") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.0), 6, 4);
  std::vector<double> one(g.size(), 1.0), s(g.size()), c(g.size());
  for (int i = 0; i < g.size(); ++i) {
    s[i] = std::sin(g.coord(i, 0));
    c[i] = std::cos(g.coord(i, 1));
  }
  const auto I = multiplication_operator(g, one);
  CHECK(I.entries.isApprox(Eigen::MatrixXcd::Identity(g.size(), g.size())));
  const auto S = multiplication_operator(g, s);
  for (int i = 0; i < g.size(); ++i) CHECK(S.entries(i, i).real() == s[i]);
  const auto C = multiplication_operator(g, c);
  CHECK((S.entries * C.entries - C.entries * S.entries).cwiseAbs().maxCoeff() == 0.0);
  s[3] = std::nan("");
  CHECK_THROWS_AS(multiplication_operator(g, s), std::invalid_argument);
}

TEST_CASE("weighted adjoint examples") {
  const Grid g = build_grid(SurfaceSpec::sphere(1.3), 5, 6);
  const int n = g.size();
  const OperatorMatrix I(Eigen::MatrixXcd::Identity(n, n), g.weights(), "I");
  CHECK(weighted_adjoint(I).entries.isApprox(I.entries));

  Eigen::VectorXcd diag(n);
  for (int i = 0; i < n; ++i) diag[i] = cplx(0.0, 0.3 * (i + 1));
  const OperatorMatrix A(diag.asDiagonal().toDenseMatrix(), g.weights(), "iD");
  CHECK((weighted_adjoint(A).entries + A.entries).cwiseAbs().maxCoeff() == 0.0);

  Eigen::VectorXcd c(n);
  c.setConstant(cplx(0.0, 0.7));
  const OperatorMatrix B(c.asDiagonal().toDenseMatrix(), g.weights(), "ic");
  CHECK(hermiticity_residual(B) == doctest::Approx(1.4));

  Eigen::MatrixXd sym = Eigen::MatrixXd::Random(n, n);
  sym = (sym + sym.transpose()).eval();
  const OperatorMatrix S(sym.cast<cplx>(), Eigen::VectorXd::Ones(n), "sym");
  CHECK(hermiticity_residual(S) == 0.0);
}

TEST_CASE("weighted adjoint properties on random operators") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = testing_support::uniform_int(rng, 2, 20);
    Eigen::MatrixXcd m(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = testing_support::random_vector(rng, n);
    Eigen::VectorXd w(n);
    for (int i = 0; i < n; ++i) w[i] = testing_support::uniform(rng, 0.1, 3.0);
    const OperatorMatrix A(m, w, "random");
    const OperatorMatrix adj = weighted_adjoint(A);
    CHECK((weighted_adjoint(adj).entries - m).cwiseAbs().maxCoeff() < 1e-12);
    const auto u = testing_support::random_vector(rng, n);
    const auto v = testing_support::random_vector(rng, n);
    const cplx lhs = weighted_inner(u, m * v, w);
    const cplx rhs = weighted_inner(adj.entries * u, v, w);
    CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(OperatorMatrix(Eigen::MatrixXcd::Zero(2, 3), Eigen::VectorXd::Ones(2), "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(OperatorMatrix(Eigen::MatrixXcd::Zero(2, 2), Eigen::VectorXd::Zero(2), "x"),
                  std::invalid_argument);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(OperatorMatrix(bad, Eigen::VectorXd::Ones(2), "x"), std::invalid_argument);
}

TEST_CASE("covariant ring stiffness matches an explicit Peierls hopping matrix") {
  // Independent construction: K = (1/(R h)) sum_f |psi_f - e^{-i t_f} psi_{f-1}|^2 weights.
  std::mt19937_64 rng(5);
  const int n = 11;
  const double R = 1.4;
  const Grid g = build_grid(SurfaceSpec::ring(R), n);
  LinkPhases links = LinkPhases::zero(g);
  for (int j = 0; j < n; ++j) links.axis[0][j] = testing_support::uniform(rng, -1.0, 1.0);
  const Eigen::MatrixXcd K = covariant_stiffness(g, 0, links, 2);
  const double h = 2 * pi / n;
  Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const int next = (j + 1) % n;
    const cplx hop = std::polar(1.0, -links.axis[0][j]);
    ref(j, j) += 1.0;
    ref(next, next) += 1.0;
    ref(next, j) -= std::conj(hop);
    ref(j, next) -= hop;
  }
  ref *= 1.0 / (R * h);
  CHECK((K - ref).cwiseAbs().maxCoeff() < 1e-13);
}
