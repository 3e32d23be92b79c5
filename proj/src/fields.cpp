#include "surfband/fields.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace surfband {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoordTol = 1e-9;

void require_size(const std::vector<double>& v, std::size_t n, const char* what, bool optional) {
  if (optional && v.empty()) return;
  if (v.size() != n)
    throw std::invalid_argument(std::string("sampled potential: ") + what + " has wrong length");
  for (double x : v)
    if (!std::isfinite(x))
      throw std::invalid_argument(std::string("sampled potential: non-finite ") + what);
}

std::optional<int> find_axis_index(const Axis& ax, double c, double half_length) {
  double t = 0.0;
  switch (ax.topology) {
    case AxisTopology::Single:
      return 0;
    case AxisTopology::Periodic:
      t = std::remainder(c, 2.0 * kPi) / ax.spacing;
      if (t < -0.5) t += ax.size;
      break;
    case AxisTopology::Polar:
      t = c / ax.spacing - 0.5;
      break;
    case AxisTopology::Walls:
      t = (c + half_length) / ax.spacing - 0.5;
      break;
  }
  const long j = std::lround(t);
  if (std::abs(t - j) * ax.spacing > kCoordTol * (1.0 + std::abs(c))) return std::nullopt;
  if (ax.topology == AxisTopology::Periodic) return static_cast<int>(((j % ax.size) + ax.size) % ax.size);
  if (j < 0 || j >= ax.size) return std::nullopt;
  return static_cast<int>(j);
}

std::optional<int> find_node(const Grid& grid, double c1, double c2) {
  const auto i0 = find_axis_index(grid.axis(0), c1, grid.surface().half_length);
  const auto i1 = find_axis_index(grid.axis(1), c2, grid.surface().half_length);
  if (!i0 || !i1) return std::nullopt;
  return grid.index(*i0, *i1);
}

bool at_pole(double theta) {
  return std::abs(std::sin(theta)) < 1e-14;
}

/// Physical length of the edge leaving node `flat` along axis a.
double edge_length(const Grid& grid, int a, int flat) {
  const double R = grid.surface().radius;
  if (a == 0) return R * grid.axis(0).spacing;
  if (grid.surface().kind == SurfaceKind::Sphere)
    return R * std::sin(grid.coord(flat, 0)) * grid.axis(1).spacing;
  return grid.axis(1).spacing;
}

bool owns_edge(const Grid& grid, int a, int flat) {
  const Axis& ax = grid.axis(a);
  if (ax.topology == AxisTopology::Single) return false;
  if (ax.topology == AxisTopology::Periodic) return true;
  return grid.coord_index(flat, a) + 1 < ax.size;
}

int next_node(const Grid& grid, int a, int flat) {
  const int j = grid.coord_index(flat, a);
  const int n = grid.extent(a);
  const int jn = (j + 1) % n;
  return a == 0 ? grid.index(jn, grid.coord_index(flat, 1)) : grid.index(grid.coord_index(flat, 0), jn);
}

void trapezoid_edges(SampledPotential& s, const std::vector<double>& a1,
                     const std::vector<double>& a2, double scale) {
  const Grid& g = s.grid;
  const std::vector<double>* comp[2] = {&a1, &a2};
  std::vector<double>* edges[2] = {&s.e1, &s.e2};
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < g.size(); ++i) {
      if (!owns_edge(g, a, i)) continue;
      const int nb = next_node(g, a, i);
      (*edges[a])[i] += scale * 0.5 * ((*comp[a])[i] + (*comp[a])[nb]) * edge_length(g, a, i);
    }
  if (g.surface().kind == SurfaceKind::Sphere) {
    const int n0 = g.extent(0);
    const double half = 0.5 * g.surface().radius * g.axis(0).spacing;
    for (int k = 0; k < g.extent(1); ++k) {
      const int kp = g.antipodal_line(k);
      s.pole_north[k] += scale * half * (a1[g.index(0, k)] - a1[g.index(0, kp)]);
      s.pole_south[k] += scale * half * (a1[g.index(n0 - 1, k)] - a1[g.index(n0 - 1, kp)]);
    }
  }
}

void add_analytic_edges(const AnalyticPotential& pot, const Grid& grid, LinkPhases& links,
                        double scale) {
  const double R = grid.surface().radius;
  const bool sphere = grid.surface().kind == SurfaceKind::Sphere;
  if (const auto* u = std::get_if<UniformAxial>(&pot)) {
    for (int i = 0; i < grid.size(); ++i) {
      if (sphere) {
        const double s = std::sin(grid.coord(i, 0));
        links.axis[1][i] += scale * 0.5 * u->B * R * R * s * s * grid.axis(1).spacing;
      } else {
        links.axis[0][i] += scale * 0.5 * u->B * R * R * grid.axis(0).spacing;
      }
    }
  } else if (const auto* f = std::get_if<ABFlux>(&pot)) {
    const int a = sphere ? 1 : 0;
    for (int i = 0; i < grid.size(); ++i)
      links.axis[a][i] += scale * f->flux * grid.axis(a).spacing / (2.0 * kPi);
  }
}

SurfaceVector analytic_potential(const AnalyticPotential& pot, const SurfaceSpec& surface,
                                 double c1) {
  const double R = surface.radius;
  SurfaceVector v;
  const bool sphere = surface.kind == SurfaceKind::Sphere;
  if (const auto* u = std::get_if<UniformAxial>(&pot)) {
    if (sphere) v.c2 = 0.5 * u->B * R * std::sin(c1);
    else v.c1 = 0.5 * u->B * R;
  } else if (const auto* f = std::get_if<ABFlux>(&pot)) {
    if (sphere) {
      if (at_pole(c1)) throw std::invalid_argument("singular potential at pole");
      v.c2 = f->flux / (2.0 * kPi * R * std::sin(c1));
    } else {
      v.c1 = f->flux / (2.0 * kPi * R);
    }
  }
  return v;
}

SurfaceVector analytic_field(const AnalyticPotential& pot, const SurfaceSpec& surface, double c1) {
  const bool sphere = surface.kind == SurfaceKind::Sphere;
  SurfaceVector b;
  if (const auto* u = std::get_if<UniformAxial>(&pot)) {
    if (sphere) {
      b.r = u->B * std::cos(c1);
      b.c1 = -u->B * std::sin(c1);
    } else {
      b.c2 = u->B;
    }
  } else if (std::holds_alternative<ABFlux>(pot)) {
    if (sphere && at_pole(c1)) throw std::invalid_argument("singular potential at pole");
  }
  return b;
}

std::vector<double> overlay_normal_field(const SampledPotential& s) {
  const Grid& g = s.grid;
  std::vector<double> sum(g.size(), 0.0), count(g.size(), 0.0);
  const int n0 = g.extent(0), n1 = g.extent(1);
  if (g.surface().kind == SurfaceKind::Ring) return sum;
  const bool sphere = g.surface().kind == SurfaceKind::Sphere;
  const double R = g.surface().radius;
  // Plaquettes with lower-left corner (i0, i1); periodic axes wrap.
  const int p0 = sphere ? n0 - 1 : n0;
  const int p1 = sphere ? n1 : n1 - 1;
  for (int i1 = 0; i1 < p1; ++i1)
    for (int i0 = 0; i0 < p0; ++i0) {
      const int j0 = (i0 + 1) % n0, j1 = (i1 + 1) % n1;
      const int ll = g.index(i0, i1), lr = g.index(j0, i1), ul = g.index(i0, j1),
                ur = g.index(j0, j1);
      const double circ = s.e1[ll] + s.e2[lr] - s.e1[ul] - s.e2[ll];
      double area;
      if (sphere) {
        area = R * R * g.axis(1).spacing *
               (std::cos(g.axis(0).nodes[i0]) - std::cos(g.axis(0).nodes[i0 + 1]));
      } else {
        area = R * g.axis(0).spacing * g.axis(1).spacing;
      }
      const double b = circ / area;
      for (int corner : {ll, lr, ul, ur}) {
        sum[corner] += b;
        count[corner] += 1.0;
      }
    }
  for (int i = 0; i < g.size(); ++i)
    if (count[i] > 0) sum[i] /= count[i];
  return sum;
}

double radial_value(const std::function<double(double, double)>& f, double c1, double c2) {
  return f ? f(c1, c2) : 0.0;
}

const SampledPotential& require_overlay_grid(const GaugeFieldSpec& spec, const Grid& grid) {
  if (!(spec.sampled->grid == grid))
    throw std::invalid_argument("sampled potential is bound to a different grid");
  return *spec.sampled;
}

std::vector<double> node_values(const GaugeFunction& lam, const Grid& grid) {
  std::vector<double> v(grid.size());
  for (int i = 0; i < grid.size(); ++i) v[i] = lam(grid.coord(i, 0), grid.coord(i, 1));
  return v;
}

}  // namespace

SampledPotential::SampledPotential(Grid g) : grid(std::move(g)) {
  const auto n = static_cast<std::size_t>(grid.size());
  a1.assign(n, 0.0);
  a2.assign(n, 0.0);
  e1.assign(n, 0.0);
  e2.assign(n, 0.0);
  if (grid.surface().kind == SurfaceKind::Sphere) {
    pole_north.assign(grid.extent(1), 0.0);
    pole_south.assign(grid.extent(1), 0.0);
  }
}

SampledPotential SampledPotential::from_nodes(Grid g, std::vector<double> a1,
                                              std::vector<double> a2, std::vector<double> ar,
                                              std::vector<double> dr_ar) {
  SampledPotential s(std::move(g));
  const auto n = static_cast<std::size_t>(s.grid.size());
  require_size(a1, n, "A_1", false);
  require_size(a2, n, "A_2", false);
  require_size(ar, n, "A_r", true);
  require_size(dr_ar, n, "dA_r/dr", true);
  trapezoid_edges(s, a1, a2, 1.0);
  s.a1 = std::move(a1);
  s.a2 = std::move(a2);
  s.ar = std::move(ar);
  s.dr_ar = std::move(dr_ar);
  return s;
}

void SampledPotential::validate() const {
  const auto n = static_cast<std::size_t>(grid.size());
  require_size(a1, n, "A_1", false);
  require_size(a2, n, "A_2", false);
  require_size(ar, n, "A_r", true);
  require_size(dr_ar, n, "dA_r/dr", true);
  require_size(e1, n, "edge integrals", false);
  require_size(e2, n, "edge integrals", false);
  const std::size_t poles = grid.surface().kind == SurfaceKind::Sphere ? grid.extent(1) : 0;
  require_size(pole_north, poles, "pole integrals", poles == 0);
  require_size(pole_south, poles, "pole integrals", poles == 0);
}

GaugeFieldSpec GaugeFieldSpec::uniform_axial(double B) {
  if (!std::isfinite(B)) throw std::invalid_argument("field strength must be finite");
  GaugeFieldSpec s;
  s.analytic = UniformAxial{B};
  return s;
}

GaugeFieldSpec GaugeFieldSpec::ab_flux(double flux) {
  if (!std::isfinite(flux)) throw std::invalid_argument("flux must be finite");
  GaugeFieldSpec s;
  s.analytic = ABFlux{flux};
  return s;
}

GaugeFieldSpec GaugeFieldSpec::with_radial(double a, double da) const {
  if (!std::isfinite(a) || !std::isfinite(da)) throw std::invalid_argument("A_r must be finite");
  GaugeFieldSpec s = *this;
  s.radial = [a](double, double) { return a; };
  s.radial_derivative = [da](double, double) { return da; };
  return s;
}

SurfaceVector eval_potential(const GaugeFieldSpec& spec, const SurfaceSpec& surface, double c1,
                             double c2) {
  SurfaceVector v = analytic_potential(spec.analytic, surface, c1);
  v.r = radial_value(spec.radial, c1, c2);
  if (spec.sampled) {
    const SampledPotential& s = *spec.sampled;
    const auto node = find_node(s.grid, c1, c2);
    if (!node) throw std::invalid_argument("sampled potential is only defined at grid nodes");
    v.c1 += s.a1[*node];
    v.c2 += s.a2[*node];
    if (!s.ar.empty()) v.r = s.ar[*node];
  }
  return v;
}

PotentialSamples sample_potential(const GaugeFieldSpec& spec, const Grid& grid) {
  PotentialSamples out;
  const auto n = static_cast<std::size_t>(grid.size());
  out.ar.resize(n);
  out.dr_ar.resize(n);
  out.a1.resize(n);
  out.a2.resize(n);
  const SampledPotential* s = spec.sampled ? &require_overlay_grid(spec, grid) : nullptr;
  for (int i = 0; i < grid.size(); ++i) {
    const double c1 = grid.coord(i, 0), c2 = grid.coord(i, 1);
    const SurfaceVector v = analytic_potential(spec.analytic, grid.surface(), c1);
    out.a1[i] = v.c1;
    out.a2[i] = v.c2;
    out.ar[i] = radial_value(spec.radial, c1, c2);
    out.dr_ar[i] = radial_value(spec.radial_derivative, c1, c2);
    if (s) {
      out.a1[i] += s->a1[i];
      out.a2[i] += s->a2[i];
      if (!s->ar.empty()) out.ar[i] = s->ar[i];
      if (!s->dr_ar.empty()) out.dr_ar[i] = s->dr_ar[i];
    }
    if (!std::isfinite(out.a1[i]) || !std::isfinite(out.a2[i]) || !std::isfinite(out.ar[i]) ||
        !std::isfinite(out.dr_ar[i]))
      throw std::invalid_argument("vector potential is not finite on the grid");
  }
  return out;
}

LinkPhases link_phases(const GaugeFieldSpec& spec, const Grid& grid, const PhysicalConstants& c) {
  LinkPhases links = LinkPhases::zero(grid);
  const double q = c.coupling();
  add_analytic_edges(spec.analytic, grid, links, q);
  if (spec.sampled) {
    const SampledPotential& s = require_overlay_grid(spec, grid);
    s.validate();
    for (int i = 0; i < grid.size(); ++i) {
      links.axis[0][i] += q * s.e1[i];
      links.axis[1][i] += q * s.e2[i];
    }
    for (std::size_t k = 0; k < links.pole_north.size(); ++k) {
      links.pole_north[k] += q * s.pole_north[k];
      links.pole_south[k] += q * s.pole_south[k];
    }
  }
  return links;
}

SurfaceVector magnetic_field_of(const GaugeFieldSpec& spec, const SurfaceSpec& surface, double c1,
                                double c2) {
  SurfaceVector b = analytic_field(spec.analytic, surface, c1);
  if (spec.sampled) {
    const auto node = find_node(spec.sampled->grid, c1, c2);
    if (!node) throw std::invalid_argument("sampled potential is only defined at grid nodes");
    b.r += overlay_normal_field(*spec.sampled)[*node];
  }
  return b;
}

std::vector<SurfaceVector> magnetic_field_samples(const GaugeFieldSpec& spec, const Grid& grid) {
  std::vector<SurfaceVector> out(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    out[i] = analytic_field(spec.analytic, grid.surface(), grid.coord(i, 0));
  if (spec.sampled) {
    const auto normal = overlay_normal_field(require_overlay_grid(spec, grid));
    for (int i = 0; i < grid.size(); ++i) out[i].r += normal[i];
  }
  return out;
}

std::array<double, 3> to_cartesian(const SurfaceSpec& surface, double c1, double c2,
                                   const SurfaceVector& v) {
  if (surface.kind == SurfaceKind::Sphere) {
    const double st = std::sin(c1), ct = std::cos(c1), sp = std::sin(c2), cp = std::cos(c2);
    return {v.r * st * cp + v.c1 * ct * cp - v.c2 * sp,
            v.r * st * sp + v.c1 * ct * sp + v.c2 * cp,
            v.r * ct - v.c1 * st};
  }
  const double s = std::sin(c1), c = std::cos(c1);
  return {v.r * c - v.c1 * s, v.r * s + v.c1 * c, v.c2};
}

GaugeFunction GaugeFunction::constant(double v) {
  return {"const", [v](double, double) { return v; },
          [](double, double) { return std::pair{0.0, 0.0}; }};
}

GaugeFunction named_gauge_function(const std::string& name, double amplitude,
                                   const SurfaceSpec& surface) {
  const double a = amplitude;
  const double R = surface.radius;
  const bool sphere = surface.kind == SurfaceKind::Sphere;
  if (!std::isfinite(a)) throw std::invalid_argument("gauge amplitude must be finite");
  if (name == "const") return GaugeFunction::constant(a);
  if (name == "sin1")
    return {name, [a](double c1, double) { return a * std::sin(c1); },
            [a, R](double c1, double) { return std::pair{a * std::cos(c1) / R, 0.0}; }};
  if (name == "cos1")
    return {name, [a](double c1, double) { return a * std::cos(c1); },
            [a, R](double c1, double) { return std::pair{-a * std::sin(c1) / R, 0.0}; }};
  if (name == "sin1_times_c2") {
    return {name, [a](double c1, double c2) { return a * std::sin(c1) * c2; },
            [a, R, sphere](double c1, double c2) {
              const double g2 = sphere ? a / R : a * std::sin(c1);
              return std::pair{a * std::cos(c1) * c2 / R, g2};
            }};
  }
  if (name == "cartesian_x") {
    if (sphere)
      return {name, [a, R](double c1, double c2) { return a * R * std::sin(c1) * std::cos(c2); },
              [a](double c1, double c2) {
                return std::pair{a * std::cos(c1) * std::cos(c2), -a * std::sin(c2)};
              }};
    return {name, [a, R](double c1, double) { return a * R * std::cos(c1); },
            [a](double c1, double) { return std::pair{-a * std::sin(c1), 0.0}; }};
  }
  throw std::invalid_argument("unknown gauge function '" + name + "'");
}

void require_single_valued(const GaugeFunction& lam, const Grid& grid) {
  if (!lam.value) throw std::invalid_argument("gauge function has no value");
  auto close = [](double a, double b) {
    return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a));
  };
  const bool sphere = grid.surface().kind == SurfaceKind::Sphere;
  const int periodic = sphere ? 1 : 0;
  for (int i = 0; i < grid.size(); ++i) {
    double c[2] = {grid.coord(i, 0), grid.coord(i, 1)};
    const double v = lam(c[0], c[1]);
    c[periodic] += 2.0 * kPi;
    if (!close(v, lam(c[0], c[1]))) throw std::invalid_argument("multivalued gauge function");
  }
  if (sphere) {
    for (double pole : {0.0, kPi}) {
      const double ref = lam(pole, 0.0);
      for (double phi : grid.axis(1).nodes)
        if (!close(ref, lam(pole, phi))) throw std::invalid_argument("multivalued gauge function");
    }
  }
}

TangentField surface_gradient(const GaugeFunction& lam, const Grid& grid, int order) {
  require_stencil_order(order);
  require_single_valued(lam, grid);
  const std::vector<double> v = node_values(lam, grid);
  std::vector<double> d[2] = {std::vector<double>(grid.size(), 0.0),
                              std::vector<double>(grid.size(), 0.0)};
  for (int a = 0; a < 2; ++a) {
    const Axis& ax = grid.axis(a);
    if (ax.topology == AxisTopology::Single) continue;
    const int n = ax.size;
    const double h = ax.spacing;
    for (int line = 0; line < grid.line_count(a); ++line) {
      auto at = [&](int j) {
        const ExtendedNode e = grid.resolve(a, line, j);
        return v[e.node];
      };
      for (int j = 0; j < n; ++j) {
        double g;
        const bool walls = ax.topology == AxisTopology::Walls;
        if (walls && j == 0) {
          g = (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
        } else if (walls && j == n - 1) {
          g = (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
        } else if (order == 2 || (walls && (j == 1 || j == n - 2))) {
          g = (at(j + 1) - at(j - 1)) / (2.0 * h);
        } else {
          g = (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * h);
        }
        d[a][grid.line_node(a, line, j)] = g;
      }
    }
  }
  TangentField t;
  t.c1.resize(grid.size());
  t.c2.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    t.c1[i] = d[0][i] / grid.scale_factor(0, i);
    t.c2[i] = d[1][i] / grid.scale_factor(1, i);
  }
  return t;
}

GaugeFieldSpec add_gauge(const GaugeFieldSpec& spec, const GaugeFunction& lam, const Grid& grid) {
  require_single_valued(lam, grid);
  GaugeFieldSpec out = spec;
  if (!out.sampled) out.sampled.emplace(grid);
  SampledPotential& s = *out.sampled;
  if (!(s.grid == grid)) throw std::invalid_argument("sampled potential is bound to a different grid");

  const std::vector<double> v = node_values(lam, grid);
  std::vector<double>* edges[2] = {&s.e1, &s.e2};
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < grid.size(); ++i)
      if (owns_edge(grid, a, i)) (*edges[a])[i] += v[next_node(grid, a, i)] - v[i];
  if (grid.surface().kind == SurfaceKind::Sphere) {
    const int n0 = grid.extent(0);
    for (int k = 0; k < grid.extent(1); ++k) {
      const int kp = grid.antipodal_line(k);
      s.pole_north[k] += v[grid.index(0, k)] - v[grid.index(0, kp)];
      s.pole_south[k] += v[grid.index(n0 - 1, kp)] - v[grid.index(n0 - 1, k)];
    }
  }
  const TangentField g = surface_gradient(lam, grid, 2);
  for (int i = 0; i < grid.size(); ++i) {
    s.a1[i] += g.c1[i];
    s.a2[i] += g.c2[i];
  }
  out.gauge_history.push_back(lam.name);
  return out;
}

GaugeFieldSpec add_gauge_sampled(const GaugeFieldSpec& spec, const GaugeFunction& lam,
                                 const Grid& grid) {
  require_single_valued(lam, grid);
  if (!lam.gradient) throw std::invalid_argument("gauge function '" + lam.name + "' has no analytic gradient");
  GaugeFieldSpec out = spec;
  if (!out.sampled) out.sampled.emplace(grid);
  SampledPotential& s = *out.sampled;
  if (!(s.grid == grid)) throw std::invalid_argument("sampled potential is bound to a different grid");
  std::vector<double> g1(grid.size()), g2(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    const auto [x, y] = lam.gradient(grid.coord(i, 0), grid.coord(i, 1));
    g1[i] = x;
    g2[i] = y;
  }
  trapezoid_edges(s, g1, g2, 1.0);
  for (int i = 0; i < grid.size(); ++i) {
    s.a1[i] += g1[i];
    s.a2[i] += g2[i];
  }
  out.gauge_history.push_back(lam.name + " (sampled gradient)");
  return out;
}

SampledPotential load_sampled_potential_csv(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open field file '" + path + "'");
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
  };
  auto parse = [&](const std::string& cell, int line_no) {
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cell.size() || cell.empty() || !std::isfinite(x))
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": bad number '" + cell + "'");
    return x;
  };

  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty field file");
  const auto header = split(line);
  if (header.size() < 4 || header.size() > 5)
    throw std::invalid_argument(path + ": expected 4 or 5 columns (coord1, coord2, A_1, A_2[, A_r])");
  bool numeric_header = true;
  for (const auto& h : header) {
    try {
      std::size_t used = 0;
      std::stod(h, &used);
      numeric_header = numeric_header && used == h.size();
    } catch (const std::exception&) {
      numeric_header = false;
    }
  }
  if (numeric_header) throw std::invalid_argument(path + ": missing header row");
  const bool has_ar = header.size() == 5;

  const auto n = static_cast<std::size_t>(grid.size());
  std::vector<double> a1(n), a2(n), ar(has_ar ? n : 0);
  std::vector<bool> seen(n, false);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": wrong column count");
    const double c1 = parse(cells[0], line_no), c2 = parse(cells[1], line_no);
    const auto node = find_node(grid, c1, c2);
    if (!node) throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": not a grid node");
    if (seen[*node]) throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": duplicate node");
    seen[*node] = true;
    a1[*node] = parse(cells[2], line_no);
    a2[*node] = parse(cells[3], line_no);
    if (has_ar) ar[*node] = parse(cells[4], line_no);
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument(path + ": not every grid node has a sample");
  return SampledPotential::from_nodes(grid, std::move(a1), std::move(a2), std::move(ar));
}

}  // namespace surfband
