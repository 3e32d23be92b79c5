#include "surfband/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace surfband {

RadialGrid RadialGrid::uniform(double a, double b, int n, int s) {
  if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("radial grid needs 0 < a < b");
  if (n < 5) throw std::invalid_argument("radial grid too small");
  if (s != 1 && s != 2) throw std::invalid_argument("radial measure exponent must be 1 or 2");
  RadialGrid g;
  g.s = s;
  g.h = (b - a) / (n - 1);
  g.r = Eigen::VectorXd::LinSpaced(n, a, b);
  return g;
}

Eigen::VectorXd RadialGrid::weights() const {
  return h * r.array().pow(s).matrix();
}

Eigen::VectorXd RadialGrid::sample(const std::function<double(double)>& f) const {
  Eigen::VectorXd v(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) v[i] = f(r[i]);
  return v;
}

Eigen::MatrixXd radial_derivative(const RadialGrid& g) {
  const Eigen::Index n = g.r.size();
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i > 0) D(i, i - 1) = -0.5 / g.h;
    if (i + 1 < n) D(i, i + 1) = 0.5 / g.h;
  }
  return D;
}

Eigen::MatrixXcd hermitian_radial_momentum(const RadialGrid& g, double hbar) {
  const Eigen::VectorXd up = g.r.array().pow(0.5 * g.s);
  const Eigen::MatrixXd P = up.cwiseInverse().asDiagonal() * radial_derivative(g) * up.asDiagonal();
  return std::complex<double>(0.0, -hbar) * P.cast<std::complex<double>>();
}

Eigen::MatrixXcd naive_radial_momentum(const RadialGrid& g, double hbar) {
  return std::complex<double>(0.0, -hbar) * radial_derivative(g).cast<std::complex<double>>();
}

Eigen::MatrixXd radial_flux_laplacian(const RadialGrid& g, double hbar) {
  const Eigen::Index n = g.r.size();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  const double k = hbar * hbar / (g.h * g.h);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ri = std::pow(g.r[i], g.s);
    const double rp = std::pow(g.r[i] + 0.5 * g.h, g.s);
    const double rm = std::pow(g.r[i] - 0.5 * g.h, g.s);
    L(i, i) = k * (rp + rm) / ri;
    if (i > 0) L(i, i - 1) = -k * rm / ri;
    if (i + 1 < n) L(i, i + 1) = -k * rp / ri;
  }
  return L;
}

Eigen::MatrixXcd squared_momentum_form(const RadialGrid& g, double hbar) {
  const Eigen::MatrixXcd P = hermitian_radial_momentum(g, hbar);
  Eigen::MatrixXcd M = P * P;
  if (g.s == 1)
    for (Eigen::Index i = 0; i < M.rows(); ++i) M(i, i) -= hbar * hbar / (4.0 * g.r[i] * g.r[i]);
  return M;
}

Eigen::MatrixXd radial_position(const RadialGrid& g) { return g.r.asDiagonal(); }

}  // namespace surfband
