#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfband/geometry.hpp"
#include "surfband/grid.hpp"
#include "surfband/operator.hpp"

namespace surfband {

struct NoField {};
/// Uniform B along the symmetry axis: A_theta = B r / 2 (cylinder),
/// A_phi = B r sin(theta) / 2 (sphere).
struct UniformAxial {
  double B = 0.0;
};
/// Flux line on the symmetry axis: A_theta = Phi / (2 pi r).
struct ABFlux {
  double flux = 0.0;
};
using AnalyticPotential = std::variant<NoField, UniformAxial, ABFlux>;

/// Grid-bound potential samples.
///
/// Node components are physical (orthonormal-frame) components along axis 0
/// and axis 1. Edge integrals hold the line integral of A along every grid
/// edge with the layout of LinkPhases (so gauge shifts can be applied
/// exactly); radial samples feed only the pragmatic Hamiltonian.
struct SampledPotential {
  Grid grid;
  std::vector<double> a1, a2;
  std::vector<double> ar, dr_ar;  // empty means zero
  std::vector<double> e1, e2;
  std::vector<double> pole_north, pole_south;

  explicit SampledPotential(Grid g);

  /// Builds from node components; edges by the trapezoid rule.
  static SampledPotential from_nodes(Grid g, std::vector<double> a1, std::vector<double> a2,
                                     std::vector<double> ar = {},
                                     std::vector<double> dr_ar = {});

  /// Throws unless every array matches the grid and is finite.
  void validate() const;
};

/// A vector potential: an analytic part plus an optional sampled overlay.
struct GaugeFieldSpec {
  AnalyticPotential analytic = NoField{};
  std::optional<SampledPotential> sampled;
  /// On-surface A_r and d(A_r)/dr as functions of the surface coordinates,
  /// used when the overlay carries no radial samples.
  std::function<double(double, double)> radial;
  std::function<double(double, double)> radial_derivative;
  /// Names of the gauge functions added so far.
  std::vector<std::string> gauge_history;

  static GaugeFieldSpec none() { return {}; }
  static GaugeFieldSpec uniform_axial(double B);
  static GaugeFieldSpec ab_flux(double flux);

  /// Same field with constant on-surface A_r = a and d(A_r)/dr = da.
  GaugeFieldSpec with_radial(double a, double da = 0.0) const;
};

/// Physical components at a point: (A_r, A_1, A_2), with axes (theta, z) on
/// ring and cylinder and (theta, phi) on the sphere.
struct SurfaceVector {
  double r = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Potential at (c1, c2). A sampled overlay is only defined at its grid
/// nodes. Throws "singular potential at pole" for a flux line evaluated at
/// a sphere pole.
SurfaceVector eval_potential(const GaugeFieldSpec& spec, const SurfaceSpec& surface, double c1,
                             double c2);

/// eval_potential at every node of `grid`, as three arrays.
struct PotentialSamples {
  std::vector<double> ar, dr_ar, a1, a2;
};
PotentialSamples sample_potential(const GaugeFieldSpec& spec, const Grid& grid);

/// (e / hbar) times the line integrals of A along the grid edges.
LinkPhases link_phases(const GaugeFieldSpec& spec, const Grid& grid, const PhysicalConstants& c);

/// B = curl A in the spherical or cylindrical frame (B_r, B_1, B_2).
/// The overlay contributes its normal component only, from plaquette
/// circulations averaged onto nodes.
SurfaceVector magnetic_field_of(const GaugeFieldSpec& spec, const SurfaceSpec& surface, double c1,
                                double c2);
std::vector<SurfaceVector> magnetic_field_samples(const GaugeFieldSpec& spec, const Grid& grid);

/// Cartesian components of a frame vector at node coordinates (c1, c2).
std::array<double, 3> to_cartesian(const SurfaceSpec& surface, double c1, double c2,
                                   const SurfaceVector& v);

/// Scalar gauge function lambda(c1, c2), with an optional analytic gradient
/// returning physical components (A_1, A_2).
struct GaugeFunction {
  std::string name;
  std::function<double(double, double)> value;
  std::function<std::pair<double, double>(double, double)> gradient;

  double operator()(double c1, double c2) const { return value(c1, c2); }

  static GaugeFunction constant(double v);
};

/// Test gauge functions by name, scaled by `amplitude`: "const", "sin1"
/// (sin c1), "cos1" (cos c1), "sin1_times_c2" (c2 sin c1) and "cartesian_x"
/// (the x coordinate of the surface point).
GaugeFunction named_gauge_function(const std::string& name, double amplitude,
                                   const SurfaceSpec& surface);

/// Throws "multivalued gauge function" unless lambda matches across the
/// periodic seam (and is constant on each sphere pole).
void require_single_valued(const GaugeFunction& lam, const Grid& grid);

/// Tangential gradient ((1/h_1) d lambda, (1/h_2) d lambda) at the nodes by
/// centred differences of the given order (one-sided at walls).
struct TangentField {
  std::vector<double> c1, c2;
};
TangentField surface_gradient(const GaugeFunction& lam, const Grid& grid, int order = 2);

/// A + grad lambda on `grid`. Edge integrals gain lambda(b) - lambda(a)
/// exactly (the stencil-consistent gradient); node components gain
/// surface_gradient.
GaugeFieldSpec add_gauge(const GaugeFieldSpec& spec, const GaugeFunction& lam, const Grid& grid);

/// A + grad lambda using the analytic gradient sampled at the nodes (edges by
/// the trapezoid rule). Gauge covariance then holds only to O(h^2).
GaugeFieldSpec add_gauge_sampled(const GaugeFieldSpec& spec, const GaugeFunction& lam,
                                 const Grid& grid);

/// Reads columns (coord1, coord2, A_1, A_2[, A_r]) with a header row; rows
/// are matched to grid nodes by coordinates and every node must appear.
SampledPotential load_sampled_potential_csv(const std::string& path, const Grid& grid);

}  // namespace surfband
