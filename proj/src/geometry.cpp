#include "surfband/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace surfband {

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Ring:
      return "ring";
    case SurfaceKind::Cylinder:
      return "cylinder";
    case SurfaceKind::Sphere:
      return "sphere";
  }
  return "unknown";
}

SurfaceKind surface_kind_from_string(std::string_view name) {
  if (name == "ring") return SurfaceKind::Ring;
  if (name == "cylinder") return SurfaceKind::Cylinder;
  if (name == "sphere") return SurfaceKind::Sphere;
  throw std::invalid_argument("unknown surface '" + std::string(name) + "'");
}

SurfaceSpec SurfaceSpec::ring(double radius) {
  SurfaceSpec s{SurfaceKind::Ring, radius, 1.0};
  s.validate();
  return s;
}

SurfaceSpec SurfaceSpec::cylinder(double radius, double half_length) {
  SurfaceSpec s{SurfaceKind::Cylinder, radius, half_length};
  s.validate();
  return s;
}

SurfaceSpec SurfaceSpec::sphere(double radius) {
  SurfaceSpec s{SurfaceKind::Sphere, radius, 1.0};
  s.validate();
  return s;
}

void SurfaceSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("surface radius must be positive and finite");
  if (kind == SurfaceKind::Cylinder && (!(half_length > 0.0) || !std::isfinite(half_length)))
    throw std::invalid_argument("cylinder half-length must be positive and finite");
}

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::invalid_argument("hbar must be positive");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be positive");
  if (charge == 0.0 || !std::isfinite(charge))
    throw std::invalid_argument("charge must be finite and nonzero");
}

double PhysicalConstants::flux_quantum() const {
  return 2.0 * std::numbers::pi * hbar / charge;
}

PrincipalCurvatures principal_curvatures(const SurfaceSpec& surface) {
  surface.validate();
  const double k = -1.0 / surface.radius;
  if (surface.kind == SurfaceKind::Sphere) return {k, k};
  return {k, 0.0};
}

CurvatureData curvature(const SurfaceSpec& surface) {
  const auto [k1, k2] = principal_curvatures(surface);
  return {k1, k2, 0.5 * (k1 + k2), k1 * k2};
}

double geometric_kinetic_energy(const CurvatureData& curv, const PhysicalConstants& c) {
  c.validate();
  return 0.0 - c.kinetic_scale() * (curv.mean * curv.mean - curv.gaussian);
}

double geometric_kinetic_energy(const SurfaceSpec& surface, const PhysicalConstants& c) {
  return geometric_kinetic_energy(curvature(surface), c);
}

}  // namespace surfband
