#include "surfband/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "surfband/eigensolvers.hpp"

namespace surfband {

namespace {

bool complex_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Eigen::VectorXd spin_weights(const Grid& grid, bool spin) {
  if (!spin) return grid.weights();
  Eigen::VectorXd w(2 * grid.size());
  w << grid.weights(), grid.weights();
  return w;
}

HamiltonianRequest with_field(const HamiltonianRequest& req, GaugeFieldSpec field) {
  HamiltonianRequest out = req;
  out.field = std::move(field);
  return out;
}

}  // namespace

std::vector<double> SpectrumReport::real_parts() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& e : eigenvalues) out.push_back(e.real());
  return out;
}

bool is_weighted_hermitian(const OperatorMatrix& h) {
  const double scale = std::max(1.0, h.entries.cwiseAbs().maxCoeff());
  return hermiticity_residual(h) <= 1e-10 * scale;
}

SpectrumReport spectrum(const OperatorMatrix& h, int k, bool want_vectors) {
  if (k < 1 || k > h.dim()) throw std::invalid_argument("k must lie in [1, dim]");
  SpectrumReport rep;
  rep.operator_label = h.label;
  rep.hermiticity_residual = hermiticity_residual(h);
  const double scale = std::max(1.0, h.entries.cwiseAbs().maxCoeff());
  rep.hermitian = rep.hermiticity_residual <= 1e-10 * scale;

  if (rep.hermitian) {
    const Eigen::VectorXd sw = h.weights.cwiseSqrt();
    Eigen::MatrixXcd S = sw.asDiagonal() * h.entries * sw.cwiseInverse().asDiagonal();
    S = (0.5 * (S + S.adjoint())).eval();
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
    if (S.imag().cwiseAbs().maxCoeff() == 0.0) {
      Eigen::MatrixXd rv;
      symmetric_lowest(S.real(), k, want_vectors, values, rv, h.label);
      if (want_vectors) vectors = rv.cast<cplx>();
    } else {
      hermitian_lowest(S, k, want_vectors, values, vectors, h.label);
    }
    for (Eigen::Index i = 0; i < values.size(); ++i) rep.eigenvalues.emplace_back(values[i], 0.0);
    if (want_vectors) rep.eigenvectors = sw.cwiseInverse().asDiagonal() * vectors;
    return rep;
  }

  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  general_eigen(h.entries, want_vectors, values, vectors, h.label);
  std::vector<Eigen::Index> order(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return complex_less(values[a], values[b]); });
  if (want_vectors) rep.eigenvectors.resize(h.dim(), k);
  for (int i = 0; i < k; ++i) {
    rep.eigenvalues.push_back(values[order[i]]);
    if (want_vectors) rep.eigenvectors.col(i) = vectors.col(order[i]);
  }
  return rep;
}

AntiHermitianPart antihermitian_part(const OperatorMatrix& h) {
  const OperatorMatrix adj = weighted_adjoint(h);
  Eigen::MatrixXcd part = 0.5 * (h.entries - adj.entries);
  const double norm = part.size() ? part.cwiseAbs().maxCoeff() : 0.0;
  return {OperatorMatrix(std::move(part), h.weights, "antihermitian(" + h.label + ")"), norm};
}

GaugeFieldSpec gauge_transformed(const GaugeFieldSpec& field, const GaugeFunction& lam,
                                 const Grid& grid, GaugeRoute route) {
  return route == GaugeRoute::StencilConsistent ? add_gauge(field, lam, grid)
                                                : add_gauge_sampled(field, lam, grid);
}

Eigen::VectorXcd gauge_phases(const GaugeFunction& lam, const Grid& grid,
                              const PhysicalConstants& c, bool spin) {
  const int n = grid.size();
  Eigen::VectorXcd u(spin ? 2 * n : n);
  for (int i = 0; i < n; ++i) {
    u[i] = std::polar(1.0, c.coupling() * lam(grid.coord(i, 0), grid.coord(i, 1)));
    if (spin) u[n + i] = u[i];
  }
  return u;
}

double gauge_covariance_residual(const HamiltonianRequest& req, const GaugeFunction& lam,
                                 const Eigen::VectorXcd& psi, GaugeRoute route,
                                 const Builder& builder) {
  const GaugeFieldSpec base = req.field.value_or(GaugeFieldSpec::none());
  const OperatorMatrix h0 = builder(with_field(req, base));
  const OperatorMatrix h1 = builder(with_field(req, gauge_transformed(base, lam, req.grid, route)));
  if (psi.size() != h0.dim()) throw std::invalid_argument("state dimension does not match the operator");
  const Eigen::VectorXcd u = gauge_phases(lam, req.grid, req.constants, req.spin);
  const Eigen::VectorXcd lhs = h1.entries * u.cwiseProduct(psi);
  const Eigen::VectorXcd rhs = u.cwiseProduct(h0.entries * psi);
  return weighted_norm(lhs - rhs, spin_weights(req.grid, req.spin));
}

double unitary_equivalence_residual(const HamiltonianRequest& req, const GaugeFunction& lam,
                                    GaugeRoute route, const Builder& builder) {
  const GaugeFieldSpec base = req.field.value_or(GaugeFieldSpec::none());
  const OperatorMatrix h0 = builder(with_field(req, base));
  const OperatorMatrix h1 = builder(with_field(req, gauge_transformed(base, lam, req.grid, route)));
  const Eigen::VectorXcd u = gauge_phases(lam, req.grid, req.constants, req.spin);
  const Eigen::MatrixXcd conj = u.asDiagonal() * h0.entries * u.conjugate().asDiagonal();
  return (h1.entries - conj).cwiseAbs().maxCoeff();
}

double spectrum_gauge_invariance(const HamiltonianRequest& req, const GaugeFunction& lam, int k,
                                 GaugeRoute route, const Builder& builder) {
  const GaugeFieldSpec base = req.field.value_or(GaugeFieldSpec::none());
  const auto e0 = spectrum(builder(with_field(req, base)), k).eigenvalues;
  const auto e1 =
      spectrum(builder(with_field(req, gauge_transformed(base, lam, req.grid, route))), k).eigenvalues;
  return multiset_distance(e0, e1);
}

std::vector<double> analytic_ring_spectrum(double R, double flux, int l_min, int l_max,
                                           const PhysicalConstants& c) {
  if (!(R > 0.0)) throw std::invalid_argument("radius must be positive");
  if (l_max < l_min) throw std::invalid_argument("empty angular momentum range");
  const double x = flux / c.flux_quantum();
  const double scale = c.hbar * c.hbar / (2.0 * c.mass * R * R);
  std::vector<double> out;
  for (int l = l_min; l <= l_max; ++l) out.push_back(scale * (l - x) * (l - x) - 0.25 * scale);
  std::sort(out.begin(), out.end());
  return out;
}

double analytic_cylinder_landau(double R, double B, int l, double kz, const PhysicalConstants& c) {
  if (!(R > 0.0)) throw std::invalid_argument("radius must be positive");
  const double p = c.hbar * l / R - 0.5 * c.charge * B * R;
  return (c.hbar * c.hbar * kz * kz + p * p) / (2.0 * c.mass) -
         c.hbar * c.hbar / (8.0 * c.mass * R * R);
}

double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("multisets differ in size");
  std::sort(a.begin(), a.end(), complex_less);
  std::sort(b.begin(), b.end(), complex_less);
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double multiset_distance(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("multisets differ in size");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double convergence_order(double e_coarse, double e_fine, double ratio) {
  return std::log(e_coarse / e_fine) / std::log(ratio);
}

}  // namespace surfband
