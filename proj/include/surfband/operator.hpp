#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "surfband/grid.hpp"

namespace surfband {

using cplx = std::complex<double>;

/// Dense complex operator on grid samples (optionally x2 for spin), paired
/// with the quadrature weights that define its inner product and adjoint.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  Eigen::VectorXd weights;
  std::string label;

  OperatorMatrix() = default;
  OperatorMatrix(Eigen::MatrixXcd entries, Eigen::VectorXd weights, std::string label);

  Eigen::Index dim() const { return entries.rows(); }
};

/// Phases e/hbar * integral of A.dl along every grid edge.
///
/// `axis[a][flat]` is the phase from node `flat` to its +1 neighbour along
/// axis a (the last node of a periodic line owns the wrap edge; on walled and
/// polar axes the last entry is unused). On the sphere `pole_north[k]` is the
/// phase from (0, k') across the north pole to (0, k), k' the antipodal line,
/// and `pole_south[k]` the phase from (n-1, k) across the south pole to
/// (n-1, k').
struct LinkPhases {
  std::vector<double> axis[2];
  std::vector<double> pole_north;
  std::vector<double> pole_south;

  static LinkPhases zero(const Grid& grid);
};

/// Cumulative phase Theta(j) along a line, for extended indices j, with the
/// axis closure applied. The transport factor from node a to node b is
/// exp(-i (Theta(b) - Theta(a))).
double line_phase(const Grid& grid, const LinkPhases& links, int axis, int line, int j);

/// Hermitian stiffness K_axis with psi^H K psi = sum over faces of
/// measure * |covariant difference|^2 along `axis`.
///
/// Differences are second- or fourth-order staggered stencils whose
/// off-anchor samples are parallel-transported with the link phases, so
/// K(A + grad lambda) = U K(A) U^H exactly for U = diag(exp(i e lambda / hbar)).
/// With `physical_measure` the face measure includes the surface metric; with
/// it off, the one-dimensional axis quadrature is used (pure derivative).
Eigen::MatrixXcd covariant_stiffness(const Grid& grid, int axis, const LinkPhases& links,
                                     int order, bool physical_measure = true);

/// Centred first derivative d/dcoord along `axis`. Periodic wraparound,
/// Dirichlet truncation on walls, antipodal continuation through poles.
OperatorMatrix derivative_operator(const Grid& grid, int axis, int order = 2);

/// Second derivative along `axis` in flux form: d^2/dcoord^2 on periodic and
/// walled axes, (1/sin) d/dtheta (sin d/dtheta) on the polar axis.
OperatorMatrix second_derivative_operator(const Grid& grid, int axis, int order = 2);

/// Diagonal matrix of samples; rejects non-finite values.
OperatorMatrix multiplication_operator(const Grid& grid, std::span<const double> samples);

/// W^-1 A^H W with W = diag(weights).
OperatorMatrix weighted_adjoint(const OperatorMatrix& a);

/// max_ij |A - W^-1 A^H W|.
double hermiticity_residual(const OperatorMatrix& a);

/// <u, v>_W = sum_i w_i conj(u_i) v_i.
cplx weighted_inner(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v,
                    const Eigen::VectorXd& w);
double weighted_norm(const Eigen::VectorXcd& u, const Eigen::VectorXd& w);

void require_stencil_order(int order);

}  // namespace surfband
