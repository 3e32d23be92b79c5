#pragma once

#include <vector>

#include "surfband/geometry.hpp"

namespace surfband {

/// A particle confined between hard walls at R - d/2 and R + d/2.
struct ShellProblem {
  SurfaceSpec surface;
  double d = 0.1;
  int l = 0;
  /// Interior radial nodes; 0 selects ceil(max(200, 20/d)).
  int n_r = 0;
  PhysicalConstants constants;

  void validate() const;
  int radial_nodes() const;
};

/// ceil(max(200, 20/d)).
int default_radial_nodes(double d);

/// Lowest radial energies of -(hbar^2/2m) r^-s d/dr (r^s d/dr) +
/// hbar^2 c_l(r)/2m with Dirichlet walls; s = 1 and c_l = l^2/r^2 on the
/// cylinder and ring, s = 2 and c_l = l(l+1)/r^2 on the sphere.
std::vector<double> radial_spectrum(const ShellProblem& p, int n_levels);

struct SurfaceEnergy {
  double raw = 0.0;        ///< E_{n,l}(d)
  double box = 0.0;        ///< discrete box energy on the same radial grid
  double box_exact = 0.0;  ///< hbar^2 pi^2 n^2 / (2 m d^2)
  double surface = 0.0;    ///< raw - box
};

/// Surface part of the n-th transverse level (n >= 1).
SurfaceEnergy effective_surface_energy(const ShellProblem& p, int n = 1);

/// hbar^2 l^2 / 2mR^2 (cylinder, ring) or hbar^2 l(l+1) / 2mR^2 (sphere).
double naive_surface_energy(const SurfaceSpec& surface, int l, const PhysicalConstants& c);

struct SweepRow {
  double d = 0.0;
  int l = 0;
  double e_raw = 0.0;
  double e_box = 0.0;
  double e_surface = 0.0;
  double shift = 0.0;  ///< e_surface - naive_surface_energy
  double e_box_exact = 0.0;
};

/// One row per (l, d), ordered by l then by position in `ds`. Cells run on
/// up to `threads` threads (0: SURFBAND_THREADS or hardware concurrency).
std::vector<SweepRow> thin_layer_sweep(const SurfaceSpec& surface, const std::vector<int>& ls,
                                       const std::vector<double>& ds, const PhysicalConstants& c,
                                       int n_r = 0, int threads = 0);

struct Extrapolation {
  double limit = 0.0;
  /// Empirical order p from the last three shifts, shift(d) ~ limit + C d^p.
  double order = 0.0;
  std::vector<SweepRow> rows;
};

/// Richardson (Neville) extrapolation of the shift to d -> 0 in the variable
/// d^2. `ds` must hold at least three strictly decreasing widths.
Extrapolation gke_extrapolate(const SurfaceSpec& surface, int l, const std::vector<double>& ds,
                              const PhysicalConstants& c = {}, int n_r = 0, int threads = 0);

/// Neville extrapolation of y(x) to x = 0.
double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y);

/// Order p solving (y0 - y1) / (y1 - y2) = (d0^p - d1^p) / (d1^p - d2^p);
/// NaN if the differences vanish or do not bracket a solution.
double empirical_order(const std::vector<double>& d, const std::vector<double>& y);

/// SURFBAND_THREADS if set and positive, else hardware concurrency (>= 1).
int sweep_thread_count();

}  // namespace surfband
