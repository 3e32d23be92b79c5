#include "surfband/thinlayer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "surfband/eigensolvers.hpp"

namespace surfband {

namespace {

constexpr double kPi = std::numbers::pi;

int measure_exponent(const SurfaceSpec& s) { return s.kind == SurfaceKind::Sphere ? 2 : 1; }

double centrifugal(const SurfaceSpec& s, int l) {
  return s.kind == SurfaceKind::Sphere ? double(l) * (l + 1) : double(l) * l;
}

struct RadialOperator {
  double a = 0.0;
  double h = 0.0;
  int n = 0;
  int s = 1;
  double cl = 0.0;
  double ks = 0.0;

  double r(int i) const { return a + (i + 1) * h; }  // i = 0..n-1 interior nodes
  double rs(double x) const { return s == 1 ? x : x * x; }
};

RadialOperator make_operator(const ShellProblem& p) {
  RadialOperator op;
  op.n = p.radial_nodes();
  op.h = p.d / (op.n + 1);
  op.a = p.surface.radius - 0.5 * p.d;
  op.s = measure_exponent(p.surface);
  op.cl = centrifugal(p.surface, p.l);
  op.ks = p.constants.kinetic_scale();
  return op;
}

/// Energy functional of psi (interior samples, zero at the walls).
double rayleigh_quotient(const RadialOperator& op, const Eigen::VectorXd& psi) {
  double grad = 0.0, pot = 0.0, norm = 0.0;
  for (int i = 0; i <= op.n; ++i) {
    const double left = i > 0 ? psi[i - 1] : 0.0;
    const double right = i < op.n ? psi[i] : 0.0;
    const double rf = op.rs(op.a + (i + 0.5) * op.h);
    grad += rf * (right - left) * (right - left) / op.h;
  }
  for (int i = 0; i < op.n; ++i) {
    const double x = op.r(i);
    const double w = op.h * op.rs(x);
    pot += w * op.cl / (x * x) * psi[i] * psi[i];
    norm += w * psi[i] * psi[i];
  }
  return op.ks * (grad + pot) / norm;
}

double discrete_box(const RadialOperator& op, int n) {
  const double sn = std::sin(n * kPi / (2.0 * (op.n + 1)));
  return op.ks * 4.0 * sn * sn / (op.h * op.h);
}

}  // namespace

int default_radial_nodes(double d) {
  if (!(d > 0.0)) throw std::invalid_argument("layer width must be positive");
  return static_cast<int>(std::ceil(std::max(200.0, 20.0 / d) - 1e-9));
}

void ShellProblem::validate() const {
  surface.validate();
  constants.validate();
  if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("layer width must be positive");
  if (d >= 2.0 * surface.radius) throw std::invalid_argument("shell collapses through axis/origin");
  if (n_r != 0 && n_r < 50) throw std::invalid_argument("n_r must be at least 50");
}

int ShellProblem::radial_nodes() const { return n_r != 0 ? n_r : default_radial_nodes(d); }

std::vector<double> radial_spectrum(const ShellProblem& p, int n_levels) {
  p.validate();
  const RadialOperator op = make_operator(p);
  if (n_levels < 1 || n_levels > op.n) throw std::invalid_argument("level count out of range");
  // Symmetric form in u = sqrt(r^s) psi.
  std::vector<double> diag(op.n), off(op.n - 1);
  for (int i = 0; i < op.n; ++i) {
    const double x = op.r(i);
    const double rp = op.rs(x + 0.5 * op.h), rm = op.rs(x - 0.5 * op.h), ri = op.rs(x);
    diag[i] = op.ks * ((rp + rm) / (op.h * op.h * ri) + op.cl / (x * x));
    if (i + 1 < op.n) off[i] = -op.ks * rp / (op.h * op.h * std::sqrt(ri * op.rs(op.r(i + 1))));
  }
  std::vector<double> values;
  Eigen::MatrixXd vectors;
  tridiagonal_lowest(diag, off, n_levels, values, vectors, "radial shell");
  for (int k = 0; k < n_levels; ++k) {
    Eigen::VectorXd psi(op.n);
    for (int i = 0; i < op.n; ++i) psi[i] = vectors(i, k) / std::sqrt(op.rs(op.r(i)));
    values[k] = rayleigh_quotient(op, psi);
  }
  return values;
}

SurfaceEnergy effective_surface_energy(const ShellProblem& p, int n) {
  if (n < 1) throw std::invalid_argument("transverse index must be >= 1");
  const auto levels = radial_spectrum(p, n);
  const RadialOperator op = make_operator(p);
  SurfaceEnergy e;
  e.raw = levels.back();
  e.box = discrete_box(op, n);
  e.box_exact = op.ks * kPi * kPi * n * n / (p.d * p.d);
  e.surface = e.raw - e.box;
  return e;
}

double naive_surface_energy(const SurfaceSpec& surface, int l, const PhysicalConstants& c) {
  return c.kinetic_scale() * centrifugal(surface, l) / (surface.radius * surface.radius);
}

int sweep_thread_count() {
  if (const char* env = std::getenv("SURFBAND_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> thin_layer_sweep(const SurfaceSpec& surface, const std::vector<int>& ls,
                                       const std::vector<double>& ds, const PhysicalConstants& c,
                                       int n_r, int threads) {
  std::vector<SweepRow> rows(ls.size() * ds.size());
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < ds.size(); ++b) {
      ShellProblem p{surface, ds[b], ls[a], n_r, c};
      p.validate();
      rows[a * ds.size() + b].d = ds[b];
      rows[a * ds.size() + b].l = ls[a];
    }
  const int workers = std::max(1, std::min<int>(threads > 0 ? threads : sweep_thread_count(),
                                                static_cast<int>(rows.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        SweepRow& row = rows[i];
        const ShellProblem p{surface, row.d, row.l, n_r, c};
        const SurfaceEnergy e = effective_surface_energy(p, 1);
        row.e_raw = e.raw;
        row.e_box = e.box;
        row.e_box_exact = e.box_exact;
        row.e_surface = e.surface;
        row.shift = e.surface - naive_surface_energy(surface, row.l, c);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("extrapolation needs matching samples");
  std::vector<double> p = y;
  const std::size_t n = x.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
  return p[0];
}

double empirical_order(const std::vector<double>& d, const std::vector<double>& y) {
  const std::size_t n = d.size();
  if (n < 3 || y.size() != n) return std::numeric_limits<double>::quiet_NaN();
  const double d0 = d[n - 3], d1 = d[n - 2], d2 = d[n - 1];
  const double num = y[n - 3] - y[n - 2], den = y[n - 2] - y[n - 1];
  if (num == 0.0 || den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double target = num / den;
  auto f = [&](double p) {
    return (std::pow(d0, p) - std::pow(d1, p)) / (std::pow(d1, p) - std::pow(d2, p)) - target;
  };
  double lo = 0.05, hi = 12.0;
  if (f(lo) * f(hi) > 0.0) return std::numeric_limits<double>::quiet_NaN();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(lo) * f(mid) <= 0.0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

Extrapolation gke_extrapolate(const SurfaceSpec& surface, int l, const std::vector<double>& ds,
                              const PhysicalConstants& c, int n_r, int threads) {
  if (ds.size() < 3) throw std::invalid_argument("extrapolation needs at least three widths");
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (!(ds[i] < ds[i - 1])) throw std::invalid_argument("layer widths must be strictly decreasing");
  Extrapolation out;
  out.rows = thin_layer_sweep(surface, {l}, ds, c, n_r, threads);
  std::vector<double> x, y;
  for (const auto& row : out.rows) {
    x.push_back(row.d * row.d);
    y.push_back(row.shift);
  }
  out.limit = extrapolate_to_zero(x, y);
  out.order = empirical_order(ds, y);
  return out;
}

}  // namespace surfband
