#pragma once

#include <string>
#include <string_view>

namespace surfband {

enum class SurfaceKind { Ring, Cylinder, Sphere };

std::string_view to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(std::string_view name);

/// A ring, an infinitely long cylinder or a sphere of radius `radius`.
///
/// The ring is the cylinder with the axial coordinate frozen and shares the
/// cylinder's curvature. `half_length` is the half-length L of the axial
/// normalization box [-L, L] and is only meaningful for the cylinder.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::Ring;
  double radius = 1.0;
  double half_length = 1.0;

  static SurfaceSpec ring(double radius);
  static SurfaceSpec cylinder(double radius, double half_length);
  static SurfaceSpec sphere(double radius);

  /// Throws std::invalid_argument unless R > 0 (and L > 0 for a cylinder).
  void validate() const;

  bool is_cylindrical() const { return kind != SurfaceKind::Sphere; }
};

/// hbar, mass and charge. The charge may be negative but not zero.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  double charge = 1.0;

  void validate() const;

  /// e / hbar, the factor turning a line integral of A into a phase.
  double coupling() const { return charge / hbar; }
  /// Phi_0 = 2 pi hbar / e.
  double flux_quantum() const;
  /// hbar^2 / 2m.
  double kinetic_scale() const { return hbar * hbar / (2.0 * mass); }
};

struct PrincipalCurvatures {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

struct CurvatureData {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double mean = 0.0;
  double gaussian = 0.0;
};

/// Signed principal curvatures measured against the outward radial normal,
/// so both are <= 0 for these surfaces. A ring reports the cylinder pair.
PrincipalCurvatures principal_curvatures(const SurfaceSpec& surface);

/// Mean M = (k1 + k2) / 2 and Gaussian K = k1 k2 curvatures.
CurvatureData curvature(const SurfaceSpec& surface);

/// -(hbar^2 / 2m) (M^2 - K).
double geometric_kinetic_energy(const CurvatureData& curv, const PhysicalConstants& c);
double geometric_kinetic_energy(const SurfaceSpec& surface, const PhysicalConstants& c);

}  // namespace surfband
