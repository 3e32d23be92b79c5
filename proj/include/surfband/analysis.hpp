#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "surfband/fields.hpp"
#include "surfband/hamiltonians.hpp"
#include "surfband/operator.hpp"

namespace surfband {

struct SpectrumReport {
  /// Ascending for Hermitian input; sorted by (Re, Im) otherwise.
  std::vector<cplx> eigenvalues;
  /// Columns are eigenvectors in the grid basis (empty unless requested).
  Eigen::MatrixXcd eigenvectors;
  bool hermitian = true;
  double hermiticity_residual = 0.0;
  std::string operator_label;

  std::vector<double> real_parts() const;
};

/// True if hermiticity_residual(H) <= 1e-10 * max(1, max |H_ij|).
bool is_weighted_hermitian(const OperatorMatrix& h);

/// Lowest k eigenpairs. Hermitian operators are solved as the symmetric
/// similarity W^{1/2} H W^{-1/2} (real solver when H is real); others with a
/// general complex solver.
SpectrumReport spectrum(const OperatorMatrix& h, int k, bool want_vectors = false);

struct AntiHermitianPart {
  OperatorMatrix part;
  double norm = 0.0;
};
/// (H - H^dagger_W) / 2 and its max-abs entry.
AntiHermitianPart antihermitian_part(const OperatorMatrix& h);

using Builder = std::function<OperatorMatrix(const HamiltonianRequest&)>;

/// How grad lambda is added to the potential.
///  - StencilConsistent: edge integrals gain lambda(b) - lambda(a) exactly.
///  - SampledGradient: the analytic gradient sampled at nodes (O(h^2)).
enum class GaugeRoute { StencilConsistent, SampledGradient };

GaugeFieldSpec gauge_transformed(const GaugeFieldSpec& field, const GaugeFunction& lam,
                                 const Grid& grid, GaugeRoute route);

/// Diagonal of U = exp(i e lambda / hbar), repeated for both spin blocks.
Eigen::VectorXcd gauge_phases(const GaugeFunction& lam, const Grid& grid,
                              const PhysicalConstants& c, bool spin);

/// ||H(A + grad lambda) U psi - U H(A) psi||_W.
double gauge_covariance_residual(const HamiltonianRequest& req, const GaugeFunction& lam,
                                 const Eigen::VectorXcd& psi,
                                 GaugeRoute route = GaugeRoute::StencilConsistent,
                                 const Builder& builder = build_hamiltonian);

/// max_ij |H(A + grad lambda) - U H(A) U^dagger|.
double unitary_equivalence_residual(const HamiltonianRequest& req, const GaugeFunction& lam,
                                    GaugeRoute route = GaugeRoute::StencilConsistent,
                                    const Builder& builder = build_hamiltonian);

/// Largest change among the lowest k eigenvalues under A -> A + grad lambda.
double spectrum_gauge_invariance(const HamiltonianRequest& req, const GaugeFunction& lam, int k,
                                 GaugeRoute route = GaugeRoute::StencilConsistent,
                                 const Builder& builder = build_hamiltonian);

/// (hbar^2/2mR^2)(l - Phi/Phi_0)^2 - hbar^2/(8mR^2) for l in [l_min, l_max],
/// sorted ascending.
std::vector<double> analytic_ring_spectrum(double R, double flux, int l_min, int l_max,
                                           const PhysicalConstants& c);

/// hbar^2 kz^2/2m + (hbar l/R - e B R/2)^2/2m - hbar^2/(8mR^2).
double analytic_cylinder_landau(double R, double B, int l, double kz, const PhysicalConstants& c);

/// Max distance between index-matched entries after sorting by (Re, Im).
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b);
double multiset_distance(std::vector<double> a, std::vector<double> b);

/// log(e_coarse / e_fine) / log(ratio).
double convergence_order(double e_coarse, double e_fine, double ratio = 2.0);

}  // namespace surfband
