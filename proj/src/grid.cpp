#include "surfband/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace surfband {

namespace {

constexpr double kPi = std::numbers::pi;

Axis periodic_axis(int n) {
  Axis ax;
  ax.topology = AxisTopology::Periodic;
  ax.size = n;
  ax.spacing = 2.0 * kPi / n;
  for (int j = 0; j < n; ++j) ax.nodes.push_back(ax.spacing * j);
  ax.node_weights.assign(n, ax.spacing);
  ax.face_weights.assign(n, ax.spacing);
  return ax;
}

Axis walls_axis(int n, double half_length) {
  Axis ax;
  ax.topology = AxisTopology::Walls;
  ax.size = n;
  ax.spacing = 2.0 * half_length / n;
  for (int j = 0; j < n; ++j) ax.nodes.push_back(-half_length + (j + 0.5) * ax.spacing);
  ax.node_weights.assign(n, ax.spacing);
  // Trapezoid over the faces; the walls carry half weight.
  ax.face_weights.assign(n + 1, ax.spacing);
  ax.face_weights.front() = ax.face_weights.back() = 0.5 * ax.spacing;
  return ax;
}

Axis polar_axis(int n) {
  Axis ax;
  ax.topology = AxisTopology::Polar;
  ax.size = n;
  ax.spacing = kPi / n;
  for (int j = 0; j < n; ++j) ax.nodes.push_back((j + 0.5) * ax.spacing);
  ax.node_weights = fejer_weights(n);
  ax.face_weights = clenshaw_curtis_weights(n);
  return ax;
}

Axis single_axis() {
  Axis ax;
  ax.topology = AxisTopology::Single;
  ax.size = 1;
  ax.nodes = {0.0};
  ax.node_weights = {1.0};
  return ax;
}

}  // namespace

std::vector<double> fejer_weights(int n) {
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    const double theta = (j + 0.5) * kPi / n;
    double s = 1.0;
    for (int k = 1; k <= n / 2; ++k) s -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
    w[j] = 2.0 * s / n;
  }
  return w;
}

std::vector<double> clenshaw_curtis_weights(int n) {
  std::vector<double> w(n + 1);
  for (int f = 0; f <= n; ++f) {
    const double theta = f * kPi / n;
    double s = 1.0;
    for (int k = 1; k <= n / 2; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      s -= b * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
    }
    const double c = (f == 0 || f == n) ? 1.0 : 2.0;
    w[f] = c * s / n;
  }
  return w;
}

Grid::Grid(const SurfaceSpec& surface, int n0, int n1) : surface_(surface) {
  surface_.validate();
  if (n0 < 3) throw std::invalid_argument("grid too small: n1 must be >= 3");
  const double R = surface_.radius;
  switch (surface_.kind) {
    case SurfaceKind::Ring:
      if (n1 != 1) throw std::invalid_argument("a ring grid has a single axial node (n2 = 1)");
      axes_[0] = periodic_axis(n0);
      axes_[1] = single_axis();
      break;
    case SurfaceKind::Cylinder:
      if (n1 < 3) throw std::invalid_argument("grid too small: n2 must be >= 3");
      axes_[0] = periodic_axis(n0);
      axes_[1] = walls_axis(n1, surface_.half_length);
      break;
    case SurfaceKind::Sphere:
      if (n1 < 3) throw std::invalid_argument("grid too small: n2 must be >= 3");
      if (n1 % 2 != 0)
        throw std::invalid_argument("sphere grid needs an even azimuthal count for pole crossings");
      axes_[0] = polar_axis(n0);
      axes_[1] = periodic_axis(n1);
      break;
  }
  const double jac = surface_.kind == SurfaceKind::Sphere ? R * R : R;
  weights_.resize(size());
  for (int i1 = 0; i1 < axes_[1].size; ++i1)
    for (int i0 = 0; i0 < axes_[0].size; ++i0)
      weights_[index(i0, i1)] = jac * axes_[0].node_weights[i0] * axes_[1].node_weights[i1];
}

Grid build_grid(const SurfaceSpec& surface, int n0, int n1) { return Grid(surface, n0, n1); }

double Grid::scale_factor(int a, int flat) const {
  const double R = surface_.radius;
  if (a == 0) return R;
  if (surface_.kind == SurfaceKind::Sphere) return R * std::sin(coord(flat, 0));
  return 1.0;
}

double Grid::face_measure(int a, int line_node, int face) const {
  const double R = surface_.radius;
  const int other = 1 - a;
  const double w_other = axes_[other].node_weights[coord_index(line_node, other)];
  const double w_face = axes_[a].face_weights[face];
  if (surface_.kind == SurfaceKind::Sphere) {
    // dA / |grad|^2 metric: R^2 sin(theta) * (1/R^2 or 1/(R^2 sin^2 theta)).
    if (a == 0) return w_face * w_other;
    const double s = std::sin(coord(line_node, 0));
    return w_face * w_other / (s * s);
  }
  // Cylinder and ring: dA = R dtheta dz.
  if (a == 0) return w_face * w_other / R;
  return w_face * w_other * R;
}

int Grid::antipodal_line(int line) const {
  const int n = axes_[1].size;
  return (line + n / 2) % n;
}

ExtendedNode Grid::resolve(int a, int line, int j) const {
  const Axis& ax = axes_[a];
  const int n = ax.size;
  switch (ax.topology) {
    case AxisTopology::Periodic:
      return {line_node(a, line, ((j % n) + n) % n), 1.0};
    case AxisTopology::Walls:
      if (j < 0) return {line_node(a, line, -1 - j), -1.0};
      if (j >= n) return {line_node(a, line, 2 * n - 1 - j), -1.0};
      return {line_node(a, line, j), 1.0};
    case AxisTopology::Polar:
      if (j < 0) return {line_node(a, antipodal_line(line), -1 - j), 1.0};
      if (j >= n) return {line_node(a, antipodal_line(line), 2 * n - 1 - j), 1.0};
      return {line_node(a, line, j), 1.0};
    case AxisTopology::Single:
      return {line_node(a, line, 0), 1.0};
  }
  return {0, 1.0};
}

bool Grid::operator==(const Grid& other) const {
  return surface_.kind == other.surface_.kind && surface_.radius == other.surface_.radius &&
         surface_.half_length == other.surface_.half_length &&
         axes_[0].size == other.axes_[0].size && axes_[1].size == other.axes_[1].size;
}

}  // namespace surfband
