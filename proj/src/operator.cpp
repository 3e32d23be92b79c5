#include "surfband/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace surfband {

namespace {

struct StencilTap {
  int offset;  // relative to the face index f (nodes f-1 and f straddle it)
  double coeff;
};

std::vector<StencilTap> staggered_stencil(int order, double h) {
  if (order == 2) return {{-1, -1.0 / h}, {0, 1.0 / h}};
  const double s = 1.0 / (24.0 * h);
  return {{-2, s}, {-1, -27.0 * s}, {0, 27.0 * s}, {1, -s}};
}

std::vector<StencilTap> centred_stencil(int order, double h) {
  if (order == 2) return {{-1, -0.5 / h}, {1, 0.5 / h}};
  const double s = 1.0 / (12.0 * h);
  return {{-2, s}, {-1, -8.0 * s}, {1, 8.0 * s}, {2, -s}};
}

double cumulative(const std::vector<double>& edge, const Grid& grid, int a, int line, int j) {
  double theta = 0.0;
  for (int t = 0; t < j; ++t) theta += edge[grid.line_node(a, line, t)];
  return theta;
}

}  // namespace

void require_stencil_order(int order) {
  if (order != 2 && order != 4) throw std::invalid_argument("stencil order must be 2 or 4");
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd e, Eigen::VectorXd w, std::string l)
    : entries(std::move(e)), weights(std::move(w)), label(std::move(l)) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("operator must be square");
  if (weights.size() != entries.rows())
    throw std::invalid_argument("operator weights do not match its dimension");
  if ((weights.array() <= 0.0).any()) throw std::invalid_argument("weights must be positive");
  if (!entries.allFinite()) throw std::invalid_argument("operator '" + label + "' has non-finite entries");
}

LinkPhases LinkPhases::zero(const Grid& grid) {
  LinkPhases p;
  p.axis[0].assign(grid.size(), 0.0);
  p.axis[1].assign(grid.size(), 0.0);
  if (grid.surface().kind == SurfaceKind::Sphere) {
    p.pole_north.assign(grid.extent(1), 0.0);
    p.pole_south.assign(grid.extent(1), 0.0);
  }
  return p;
}

double line_phase(const Grid& grid, const LinkPhases& links, int a, int line, int j) {
  const Axis& ax = grid.axis(a);
  const int n = ax.size;
  const auto& edge = links.axis[a];
  switch (ax.topology) {
    case AxisTopology::Single:
      return 0.0;
    case AxisTopology::Periodic: {
      const int wraps = (j >= 0) ? j / n : -((-j + n - 1) / n);
      const int r = j - wraps * n;
      const double total = cumulative(edge, grid, a, line, n);
      return cumulative(edge, grid, a, line, r) + wraps * total;
    }
    case AxisTopology::Walls:
      // Ghosts mirror the node they reflect, so the wall link carries no phase.
      if (j < 0) return cumulative(edge, grid, a, line, -1 - j);
      if (j >= n) return cumulative(edge, grid, a, line, 2 * n - 1 - j);
      return cumulative(edge, grid, a, line, j);
    case AxisTopology::Polar: {
      if (j >= 0 && j < n) return cumulative(edge, grid, a, line, j);
      const int anti = grid.antipodal_line(line);
      const int k = grid.coord_index(grid.line_node(a, line, 0), 1);
      if (j < 0) {
        const int t = -1 - j;
        const double north = cumulative(edge, grid, a, line, 0) - links.pole_north.at(k);
        return north + cumulative(edge, grid, a, anti, t) - cumulative(edge, grid, a, anti, 0);
      }
      const int t = j - n;
      const double south = cumulative(edge, grid, a, line, n - 1) + links.pole_south.at(k);
      return south + cumulative(edge, grid, a, anti, n - 1 - t) -
             cumulative(edge, grid, a, anti, n - 1);
    }
  }
  return 0.0;
}

Eigen::MatrixXcd covariant_stiffness(const Grid& grid, int a, const LinkPhases& links, int order,
                                     bool physical_measure) {
  require_stencil_order(order);
  const Axis& ax = grid.axis(a);
  const int N = grid.size();
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(N, N);
  if (ax.topology == AxisTopology::Single) return K;

  const auto taps = staggered_stencil(order, ax.spacing);
  const int other = 1 - a;
  std::vector<int> nodes(taps.size());
  std::vector<cplx> g(taps.size());

  for (int line = 0; line < grid.line_count(a); ++line) {
    const int first = grid.line_node(a, line, 0);
    // Theta over the extended index range [-2, n + 1].
    std::vector<double> theta(ax.size + 4);
    for (int j = -2; j < ax.size + 2; ++j) theta[j + 2] = line_phase(grid, links, a, line, j);

    for (int f = 0; f < ax.face_count(); ++f) {
      double measure;
      if (physical_measure) {
        measure = grid.face_measure(a, first, f);
      } else {
        measure = ax.face_weights[f] *
                  grid.axis(other).node_weights[grid.coord_index(first, other)];
      }
      const int anchor = f - 1;
      for (std::size_t t = 0; t < taps.size(); ++t) {
        const int j = f + taps[t].offset;
        const ExtendedNode en = grid.resolve(a, line, j);
        const double phase = theta[j + 2] - theta[anchor + 2];
        nodes[t] = en.node;
        g[t] = taps[t].coeff * en.sign * std::polar(1.0, -phase);
      }
      for (std::size_t s = 0; s < taps.size(); ++s)
        for (std::size_t t = 0; t < taps.size(); ++t)
          K(nodes[s], nodes[t]) += measure * std::conj(g[s]) * g[t];
    }
  }
  return K;
}

OperatorMatrix derivative_operator(const Grid& grid, int a, int order) {
  require_stencil_order(order);
  const Axis& ax = grid.axis(a);
  const int N = grid.size();
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(N, N);
  if (ax.topology != AxisTopology::Single) {
    const auto taps = centred_stencil(order, ax.spacing);
    for (int line = 0; line < grid.line_count(a); ++line) {
      for (int j = 0; j < ax.size; ++j) {
        const int row = grid.line_node(a, line, j);
        for (const auto& tap : taps) {
          const int jj = j + tap.offset;
          if (ax.topology == AxisTopology::Walls && (jj < 0 || jj >= ax.size)) continue;
          const ExtendedNode en = grid.resolve(a, line, jj);
          D(row, en.node) += tap.coeff * en.sign;
        }
      }
    }
  }
  return OperatorMatrix(std::move(D), grid.weights(),
                        "d/dx" + std::to_string(a) + " (order " + std::to_string(order) + ")");
}

OperatorMatrix second_derivative_operator(const Grid& grid, int a, int order) {
  const Eigen::MatrixXcd K =
      covariant_stiffness(grid, a, LinkPhases::zero(grid), order, /*physical_measure=*/false);
  const int other = 1 - a;
  Eigen::VectorXd w1(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    w1[i] = grid.axis(a).node_weights[grid.coord_index(i, a)] *
            grid.axis(other).node_weights[grid.coord_index(i, other)];
  Eigen::MatrixXcd D2 = -(w1.cwiseInverse().asDiagonal() * K);
  // Same inner product up to a constant on every node row, so W^-1 D2^H W is
  // unaffected by which of w1 or the grid weights is attached.
  return OperatorMatrix(std::move(D2), w1,
                        "d2/dx" + std::to_string(a) + "^2 (order " + std::to_string(order) + ")");
}

OperatorMatrix multiplication_operator(const Grid& grid, std::span<const double> samples) {
  if (static_cast<int>(samples.size()) != grid.size())
    throw std::invalid_argument("sample count does not match the grid");
  Eigen::VectorXcd d(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(samples[i])) throw std::invalid_argument("non-finite sample in multiplication operator");
    d[i] = samples[i];
  }
  return OperatorMatrix(d.asDiagonal().toDenseMatrix(), grid.weights(), "multiplication");
}

OperatorMatrix weighted_adjoint(const OperatorMatrix& a) {
  const auto& w = a.weights;
  Eigen::MatrixXcd adj = a.entries.adjoint();
  for (Eigen::Index j = 0; j < adj.cols(); ++j)
    for (Eigen::Index i = 0; i < adj.rows(); ++i) adj(i, j) *= w[j] / w[i];
  return OperatorMatrix(std::move(adj), a.weights, "adjoint(" + a.label + ")");
}

double hermiticity_residual(const OperatorMatrix& a) {
  const auto& w = a.weights;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.dim(); ++j)
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      const cplx adj = std::conj(a.entries(j, i)) * (w[j] / w[i]);
      worst = std::max(worst, std::abs(a.entries(i, j) - adj));
    }
  return worst;
}

cplx weighted_inner(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v, const Eigen::VectorXd& w) {
  if (u.size() != v.size() || u.size() != w.size()) throw std::invalid_argument("dimension mismatch");
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) s += w[i] * std::conj(u[i]) * v[i];
  return s;
}

double weighted_norm(const Eigen::VectorXcd& u, const Eigen::VectorXd& w) {
  return std::sqrt(std::max(0.0, weighted_inner(u, u, w).real()));
}

}  // namespace surfband
