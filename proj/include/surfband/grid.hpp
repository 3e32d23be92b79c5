#pragma once

#include <Eigen/Dense>

#include <vector>

#include "surfband/geometry.hpp"

namespace surfband {

/// How an axis closes at its ends.
///
///  - Periodic: uniform nodes on [0, 2pi), wraparound.
///  - Walls: cell-centred nodes on (-L, L) with Dirichlet walls half a cell
///    beyond the outermost nodes; ghosts are odd reflections.
///  - Polar: half-offset polar angles (j + 1/2) pi / n; a stencil that runs
///    through a pole continues on the antipodal meridian.
///  - Single: a one-node axis (the frozen z of the ring).
enum class AxisTopology { Periodic, Walls, Polar, Single };

struct Axis {
  AxisTopology topology = AxisTopology::Single;
  int size = 1;
  double spacing = 0.0;
  std::vector<double> nodes;
  /// One-dimensional quadrature weight per node. Includes sin(theta) on a
  /// polar axis (Fejer's first rule).
  std::vector<double> node_weights;
  /// Quadrature weight per face. Face f sits between extended nodes f-1
  /// and f. Includes sin(theta) on a polar axis (Clenshaw-Curtis rule).
  std::vector<double> face_weights;

  int face_count() const { return static_cast<int>(face_weights.size()); }
};

/// A node reached from an extended (possibly ghost) index along a grid line.
struct ExtendedNode {
  int node = 0;      ///< flat grid index
  double sign = 1;   ///< -1 for odd wall reflections
};

/// Tensor-product discretization of a surface.
///
/// Axis 0 is theta on every surface (azimuth on ring/cylinder, polar angle on
/// the sphere); axis 1 is z on the cylinder and the azimuth phi on the sphere.
/// Flat index = i0 + n0 * i1.
class Grid {
 public:
  Grid(const SurfaceSpec& surface, int n0, int n1);

  const SurfaceSpec& surface() const { return surface_; }
  const Axis& axis(int a) const { return axes_[a]; }
  int extent(int a) const { return axes_[a].size; }
  int size() const { return axes_[0].size * axes_[1].size; }
  int index(int i0, int i1) const { return i0 + axes_[0].size * i1; }
  int coord_index(int flat, int a) const {
    return a == 0 ? flat % axes_[0].size : flat / axes_[0].size;
  }
  double coord(int flat, int a) const { return axes_[a].nodes[coord_index(flat, a)]; }

  /// Area measure per node; sums to the surface area.
  const Eigen::VectorXd& weights() const { return weights_; }

  /// Physical length per unit coordinate along `a` at node `flat`
  /// (R for theta, 1 for z, R sin(theta) for phi).
  double scale_factor(int a, int flat) const;

  /// Quadrature factor multiplying |d psi / d coord_a|^2 at face `face` of
  /// the grid line through node `line_node` (metric and surface measure).
  double face_measure(int a, int line_node, int face) const;

  /// Number of lines running along axis `a`.
  int line_count(int a) const { return size() / axes_[a].size; }
  /// Flat index of node `j` (0 <= j < extent(a)) on line `line` along `a`.
  int line_node(int a, int line, int j) const {
    return a == 0 ? index(j, line) : index(line, j);
  }

  /// Resolves an extended index along a line, applying the axis closure.
  ExtendedNode resolve(int a, int line, int j) const;

  /// Line through the antipode used when a polar stencil crosses a pole.
  int antipodal_line(int line) const;

  bool operator==(const Grid& other) const;

 private:
  SurfaceSpec surface_;
  Axis axes_[2];
  Eigen::VectorXd weights_;
};

/// Validating factory; counts below 3 throw "grid too small".
Grid build_grid(const SurfaceSpec& surface, int n0, int n1 = 1);

/// Fejer's first rule on the half-offset polar nodes: integrates
/// f(theta) sin(theta) over [0, pi].
std::vector<double> fejer_weights(int n);
/// Clenshaw-Curtis weights on theta_f = f pi / n, f = 0..n: integrates
/// f(theta) sin(theta) over [0, pi].
std::vector<double> clenshaw_curtis_weights(int n);

}  // namespace surfband
