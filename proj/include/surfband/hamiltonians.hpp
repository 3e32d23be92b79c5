#pragma once

#include <optional>

#include "surfband/fields.hpp"
#include "surfband/geometry.hpp"
#include "surfband/grid.hpp"
#include "surfband/operator.hpp"

namespace surfband {

enum class Variant { Correct, Pragmatic };

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view name);

struct HamiltonianRequest {
  Grid grid;
  std::optional<GaugeFieldSpec> field;
  bool spin = false;
  PhysicalConstants constants;
  Variant variant = Variant::Correct;
  int order = 2;

  const SurfaceSpec& surface() const { return grid.surface(); }
};

/// -(hbar^2/2m)[(1/R^2) d_theta^2 + d_z^2] - hbar^2/(8 m R^2).
OperatorMatrix free_cylinder(const HamiltonianRequest& req);
/// -(hbar^2/2mR^2) d_theta^2 - hbar^2/(8 m R^2).
OperatorMatrix free_ring(const HamiltonianRequest& req);
/// Laplace-Beltrami operator on the sphere times -hbar^2/2m.
OperatorMatrix free_sphere(const HamiltonianRequest& req);

/// (1/2m)(D'_theta^2 + D'_z^2) - hbar^2/(8 m R^2) - (e hbar/2m) sigma.B on the
/// cylinder or ring. The covariant derivatives use link phases, so the
/// result is weighted-Hermitian and gauge covariant on the grid.
OperatorMatrix magnetic_cylinder(const HamiltonianRequest& req);
/// (1/2m)(D'_theta^2 + D'_phi^2) - (e hbar/2m) sigma.B on the sphere.
OperatorMatrix magnetic_sphere(const HamiltonianRequest& req);

/// Surface Hamiltonian obtained by deleting d/dr and setting r = R in the
/// Pauli Hamiltonian: no geometric term, plus the diagonal
/// i(hbar e/2m)(A_r/R + dA_r/dr) + (e^2/2m) A_r^2 that survives from the
/// radial part.
OperatorMatrix pragmatic_cylinder(const HamiltonianRequest& req);

/// -(e hbar/2m) sigma.B on the spin-doubled grid, B taken pointwise in
/// Cartesian components. Layout is [up block; down block].
OperatorMatrix zeeman_block(const GaugeFieldSpec& field, const Grid& grid,
                            const PhysicalConstants& c);

/// Dispatches on surface, variant and field presence.
OperatorMatrix build_hamiltonian(const HamiltonianRequest& req);

}  // namespace surfband
