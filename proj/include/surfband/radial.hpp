#pragma once

#include <Eigen/Dense>

#include <functional>

namespace surfband {

/// Uniform auxiliary radial grid r_i = a + i h, i = 0..n-1, carrying the
/// measure r^s dr (s = 1 cylinder, s = 2 sphere).
struct RadialGrid {
  Eigen::VectorXd r;
  double h = 0.0;
  int s = 1;

  static RadialGrid uniform(double a, double b, int n, int s);
  Eigen::VectorXd weights() const;
  Eigen::VectorXd sample(const std::function<double(double)>& f) const;
};

/// Centred first difference, truncated at both ends.
Eigen::MatrixXd radial_derivative(const RadialGrid& g);

/// -i hbar r^{-s/2} D r^{s/2}: the measure-corrected radial momentum
/// -i hbar (d/dr + s/2r). Exactly Hermitian in the r^s dr inner product.
Eigen::MatrixXcd hermitian_radial_momentum(const RadialGrid& g, double hbar);

/// -i hbar D, Hermitian only for the flat measure.
Eigen::MatrixXcd naive_radial_momentum(const RadialGrid& g, double hbar);

/// -hbar^2 r^{-s} d/dr (r^s d/dr) in flux form with arithmetic face radii;
/// rows at the ends use zero values beyond the grid.
Eigen::MatrixXd radial_flux_laplacian(const RadialGrid& g, double hbar);

/// p_r^2 - hbar^2/(4 r^2) for s = 1 and p_r^2 for s = 2; equal to the flux
/// Laplacian up to truncation error.
Eigen::MatrixXcd squared_momentum_form(const RadialGrid& g, double hbar);

/// Multiplication by r.
Eigen::MatrixXd radial_position(const RadialGrid& g);

}  // namespace surfband
