#include "surfband/hamiltonians.hpp"

#include <stdexcept>
#include <string>

namespace surfband {

namespace {

void validate(const HamiltonianRequest& req) {
  req.constants.validate();
  require_stencil_order(req.order);
}

/// (hbar^2/2m) W^-1 (K_0 + K_1) with the given links.
Eigen::MatrixXcd kinetic(const HamiltonianRequest& req, const LinkPhases& links) {
  const Grid& g = req.grid;
  Eigen::MatrixXcd K = covariant_stiffness(g, 0, links, req.order);
  if (g.axis(1).topology != AxisTopology::Single) K += covariant_stiffness(g, 1, links, req.order);
  const Eigen::VectorXd winv = g.weights().cwiseInverse() * req.constants.kinetic_scale();
  return winv.asDiagonal() * K;
}

std::string label_for(const char* name, const HamiltonianRequest& req) {
  std::string label = std::string(name) + "[" + std::string(to_string(req.surface().kind)) + "]";
  if (req.spin) label += "+spin";
  return label;
}

OperatorMatrix finish(Eigen::MatrixXcd orbital, const HamiltonianRequest& req, std::string label) {
  const Grid& g = req.grid;
  if (!req.spin) return OperatorMatrix(std::move(orbital), g.weights(), std::move(label));
  const Eigen::Index n = orbital.rows();
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  H.topLeftCorner(n, n) = orbital;
  H.bottomRightCorner(n, n) = orbital;
  if (req.field) H += zeeman_block(*req.field, g, req.constants).entries;
  Eigen::VectorXd w(2 * n);
  w << g.weights(), g.weights();
  return OperatorMatrix(std::move(H), std::move(w), std::move(label));
}

void add_diagonal(Eigen::MatrixXcd& H, cplx value) {
  for (Eigen::Index i = 0; i < H.rows(); ++i) H(i, i) += value;
}

void require_kind(const HamiltonianRequest& req, bool sphere, const char* who) {
  if ((req.surface().kind == SurfaceKind::Sphere) != sphere)
    throw std::invalid_argument(std::string(who) + " does not apply to a " +
                                std::string(to_string(req.surface().kind)));
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::Correct ? "correct" : "pragmatic"; }

Variant variant_from_string(std::string_view name) {
  if (name == "correct") return Variant::Correct;
  if (name == "pragmatic") return Variant::Pragmatic;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

OperatorMatrix free_cylinder(const HamiltonianRequest& req) {
  validate(req);
  require_kind(req, false, "free_cylinder");
  Eigen::MatrixXcd H = kinetic(req, LinkPhases::zero(req.grid));
  add_diagonal(H, geometric_kinetic_energy(req.surface(), req.constants));
  return finish(std::move(H), req, label_for("H_free", req));
}

OperatorMatrix free_ring(const HamiltonianRequest& req) {
  if (req.surface().kind != SurfaceKind::Ring)
    throw std::invalid_argument("free_ring needs a ring surface");
  return free_cylinder(req);
}

OperatorMatrix free_sphere(const HamiltonianRequest& req) {
  validate(req);
  require_kind(req, true, "free_sphere");
  Eigen::MatrixXcd H = kinetic(req, LinkPhases::zero(req.grid));
  return finish(std::move(H), req, label_for("H_free", req));
}

OperatorMatrix magnetic_cylinder(const HamiltonianRequest& req) {
  validate(req);
  require_kind(req, false, "magnetic_cylinder");
  const GaugeFieldSpec field = req.field.value_or(GaugeFieldSpec::none());
  Eigen::MatrixXcd H = kinetic(req, link_phases(field, req.grid, req.constants));
  add_diagonal(H, geometric_kinetic_energy(req.surface(), req.constants));
  return finish(std::move(H), req, label_for("H_correct", req));
}

OperatorMatrix magnetic_sphere(const HamiltonianRequest& req) {
  validate(req);
  require_kind(req, true, "magnetic_sphere");
  const GaugeFieldSpec field = req.field.value_or(GaugeFieldSpec::none());
  Eigen::MatrixXcd H = kinetic(req, link_phases(field, req.grid, req.constants));
  return finish(std::move(H), req, label_for("H_correct", req));
}

OperatorMatrix pragmatic_cylinder(const HamiltonianRequest& req) {
  validate(req);
  require_kind(req, false, "pragmatic_cylinder");
  if (!req.field) throw std::invalid_argument("the pragmatic Hamiltonian needs a field");
  const auto& c = req.constants;
  const double R = req.surface().radius;
  Eigen::MatrixXcd H = kinetic(req, link_phases(*req.field, req.grid, c));
  const PotentialSamples s = sample_potential(*req.field, req.grid);
  const cplx im(0.0, c.hbar * c.charge / (2.0 * c.mass));
  const double quad = c.charge * c.charge / (2.0 * c.mass);
  for (int i = 0; i < req.grid.size(); ++i)
    H(i, i) += im * (s.ar[i] / R + s.dr_ar[i]) + quad * s.ar[i] * s.ar[i];
  return finish(std::move(H), req, label_for("H_pragmatic", req));
}

OperatorMatrix zeeman_block(const GaugeFieldSpec& field, const Grid& grid,
                            const PhysicalConstants& c) {
  c.validate();
  const int n = grid.size();
  const double k = c.charge * c.hbar / (2.0 * c.mass);
  const auto B = magnetic_field_samples(field, grid);
  Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    const auto [bx, by, bz] = to_cartesian(grid.surface(), grid.coord(i, 0), grid.coord(i, 1), B[i]);
    Z(i, i) = -k * bz;
    Z(n + i, n + i) = k * bz;
    Z(i, n + i) = -k * cplx(bx, -by);
    Z(n + i, i) = -k * cplx(bx, by);
  }
  Eigen::VectorXd w(2 * n);
  w << grid.weights(), grid.weights();
  return OperatorMatrix(std::move(Z), std::move(w), "zeeman");
}

OperatorMatrix build_hamiltonian(const HamiltonianRequest& req) {
  const bool sphere = req.surface().kind == SurfaceKind::Sphere;
  if (req.variant == Variant::Pragmatic) {
    if (sphere) throw std::invalid_argument("the pragmatic Hamiltonian is defined for cylinder and ring");
    return pragmatic_cylinder(req);
  }
  if (!req.field) return sphere ? free_sphere(req) : free_cylinder(req);
  return sphere ? magnetic_sphere(req) : magnetic_cylinder(req);
}

}  // namespace surfband
