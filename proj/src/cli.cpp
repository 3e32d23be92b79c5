#include "surfband/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "surfband/analysis.hpp"
#include "surfband/fields.hpp"
#include "surfband/geometry.hpp"
#include "surfband/grid.hpp"
#include "surfband/hamiltonians.hpp"
#include "surfband/thinlayer.hpp"

namespace surfband {

namespace {

const std::vector<std::string> kSubcommands = {"spectrum", "hermiticity", "gauge-check",
                                               "thin-layer", "gke"};

std::string flag_for(const std::string& key) {
  std::string f = "--" + key;
  for (auto& ch : f)
    if (ch == '_') ch = '-';
  return f;
}

/// One configurable parameter: JSON round trip plus copy between configs.
struct Param {
  std::string key;
  std::function<Json(const RunConfig&)> get;
  std::function<void(RunConfig&, const Json&)> set;
  std::function<void(RunConfig&, const RunConfig&)> copy;
};

template <class T>
Param make_param(const std::string& key, T RunConfig::*member) {
  Param p;
  p.key = key;
  p.get = [member](const RunConfig& c) { return Json(c.*member); };
  p.copy = [member](RunConfig& dst, const RunConfig& src) { dst.*member = src.*member; };
  p.set = [member, key](RunConfig& c, const Json& j) {
    const std::string flag = "config key '" + key + "'";
    if constexpr (std::is_same_v<T, bool>) {
      if (!j.is_boolean()) throw ConfigError(flag, "expected a boolean");
      c.*member = j.get<bool>();
    } else if constexpr (std::is_same_v<T, int>) {
      if (!j.is_number_integer()) throw ConfigError(flag, "expected an integer");
      c.*member = j.get<int>();
    } else if constexpr (std::is_same_v<T, double>) {
      if (!j.is_number()) throw ConfigError(flag, "expected a number");
      c.*member = j.get<double>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!j.is_string()) throw ConfigError(flag, "expected a string");
      c.*member = j.get<std::string>();
    } else if constexpr (std::is_same_v<T, std::vector<int>>) {
      if (!j.is_array()) throw ConfigError(flag, "expected an array of integers");
      T v;
      for (const auto& e : j) {
        if (!e.is_number_integer()) throw ConfigError(flag, "expected an array of integers");
        v.push_back(e.get<int>());
      }
      c.*member = v;
    } else {
      if (!j.is_array()) throw ConfigError(flag, "expected an array of numbers");
      T v;
      for (const auto& e : j) {
        if (!e.is_number()) throw ConfigError(flag, "expected an array of numbers");
        v.push_back(e.get<double>());
      }
      c.*member = v;
    }
  };
  return p;
}

const std::vector<Param>& params() {
  static const std::vector<Param> table = {
      make_param("subcommand", &RunConfig::subcommand),
      make_param("surface", &RunConfig::surface),
      make_param("R", &RunConfig::R),
      make_param("L", &RunConfig::L),
      make_param("n", &RunConfig::n),
      make_param("n2", &RunConfig::n2),
      make_param("k", &RunConfig::k),
      make_param("field", &RunConfig::field),
      make_param("B", &RunConfig::B),
      make_param("flux", &RunConfig::flux),
      make_param("Ar", &RunConfig::Ar),
      make_param("dAr", &RunConfig::dAr),
      make_param("spin", &RunConfig::spin),
      make_param("variant", &RunConfig::variant),
      make_param("order", &RunConfig::order),
      make_param("hbar", &RunConfig::hbar),
      make_param("mass", &RunConfig::mass),
      make_param("charge", &RunConfig::charge),
      make_param("l", &RunConfig::l),
      make_param("d", &RunConfig::d),
      make_param("nr", &RunConfig::nr),
      make_param("lambda", &RunConfig::lambda),
      make_param("lambda_amplitude", &RunConfig::lambda_amplitude),
      make_param("field_csv", &RunConfig::field_csv),
      make_param("output", &RunConfig::output),
      make_param("format", &RunConfig::format),
  };
  return table;
}

template <class T>
std::vector<T> parse_list(const std::string& flag, const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    T v{};
    try {
      if constexpr (std::is_same_v<T, int>) v = std::stoi(item, &used);
      else v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size())
      throw ConfigError(flag, "cannot parse '" + item + "' in list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(flag, "empty list");
  return out;
}

bool member_of(const std::string& v, std::initializer_list<const char*> options) {
  for (const char* o : options)
    if (v == o) return true;
  return false;
}

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(flag_for(key), message);
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SurfaceSpec surface_of(const RunConfig& c) {
  const SurfaceKind kind = surface_kind_from_string(c.surface);
  if (kind == SurfaceKind::Ring) return SurfaceSpec::ring(c.R);
  if (kind == SurfaceKind::Cylinder) return SurfaceSpec::cylinder(c.R, c.L);
  return SurfaceSpec::sphere(c.R);
}

PhysicalConstants constants_of(const RunConfig& c) { return {c.hbar, c.mass, c.charge}; }

std::optional<GaugeFieldSpec> field_of(const RunConfig& c, const Grid& grid) {
  const bool pragmatic = c.variant == "pragmatic";
  if (c.field == "none" && c.field_csv.empty() && c.Ar == 0.0 && c.dAr == 0.0 && !pragmatic)
    return std::nullopt;
  GaugeFieldSpec f;
  if (c.field == "uniform") f = GaugeFieldSpec::uniform_axial(c.B);
  if (c.field == "ab") f = GaugeFieldSpec::ab_flux(c.flux);
  if (c.Ar != 0.0 || c.dAr != 0.0) f = f.with_radial(c.Ar, c.dAr);
  if (!c.field_csv.empty()) f.sampled = load_sampled_potential_csv(c.field_csv, grid);
  return f;
}

Json base_report(const RunConfig& c) {
  Json j;
  j["config"] = c.to_json();
  j["eigenvalues"] = Json::array();
  j["hermiticity_residual"] = 0.0;
  j["diagnostics"] = Json::object();
  return j;
}

std::string key_value_csv(const Json& diagnostics) {
  std::string out = "quantity,value\n";
  for (auto it = diagnostics.begin(); it != diagnostics.end(); ++it) {
    if (it.value().is_number()) out += it.key() + "," + format_scientific(it.value().get<double>()) + "\n";
    else if (it.value().is_string()) out += it.key() + "," + it.value().get<std::string>() + "\n";
    else if (it.value().is_boolean()) out += it.key() + "," + (it.value().get<bool>() ? "true" : "false") + "\n";
  }
  return out;
}

double max_abs_imag(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, std::abs(e.imag()));
  return m;
}

RunResult run_spectrum(const RunConfig& c) {
  const Grid grid = build_grid(surface_of(c), c.n, c.axial_nodes());
  const HamiltonianRequest req{grid, field_of(c, grid), c.spin, constants_of(c),
                               variant_from_string(c.variant), c.order};
  const OperatorMatrix H = build_hamiltonian(req);
  const SpectrumReport rep = spectrum(H, c.k);
  Json j = base_report(c);
  j["eigenvalues"] = eigenvalues_json(rep.eigenvalues);
  j["hermiticity_residual"] = rep.hermiticity_residual;
  j["diagnostics"]["operator"] = rep.operator_label;
  j["diagnostics"]["hermitian"] = rep.hermitian;
  j["diagnostics"]["dimension"] = static_cast<int>(H.dim());
  j["diagnostics"]["max_abs_imag"] = max_abs_imag(rep.eigenvalues);
  j["diagnostics"]["surface_area"] = grid.weights().sum();
  RunResult r;
  r.report = c.format == "csv" ? spectrum_csv(rep.eigenvalues) : dump_json(j);
  r.summary = "lowest_eigenvalue=" + g17(rep.eigenvalues.front().real());
  if (!rep.hermitian) r.summary += " max_abs_imag=" + g17(max_abs_imag(rep.eigenvalues));
  return r;
}

RunResult run_hermiticity(const RunConfig& c) {
  const Grid grid = build_grid(surface_of(c), c.n, c.axial_nodes());
  const HamiltonianRequest req{grid, field_of(c, grid), c.spin, constants_of(c),
                               variant_from_string(c.variant), c.order};
  const OperatorMatrix H = build_hamiltonian(req);
  const AntiHermitianPart ah = antihermitian_part(H);
  const double residual = hermiticity_residual(H);
  Json j = base_report(c);
  j["hermiticity_residual"] = residual;
  j["diagnostics"]["operator"] = H.label;
  j["diagnostics"]["antihermitian_part_max"] = ah.norm;
  j["diagnostics"]["hermitian"] = is_weighted_hermitian(H);
  j["diagnostics"]["dimension"] = static_cast<int>(H.dim());
  RunResult r;
  r.report = c.format == "csv" ? key_value_csv(j["diagnostics"]) : dump_json(j);
  r.summary = "antihermitian_part_max=" + g17(ah.norm) + " hermiticity_residual=" + g17(residual);
  return r;
}

RunResult run_gauge_check(const RunConfig& c) {
  const SurfaceSpec surface = surface_of(c);
  const Grid grid = build_grid(surface, c.n, c.axial_nodes());
  const HamiltonianRequest req{grid, field_of(c, grid), c.spin, constants_of(c),
                               variant_from_string(c.variant), c.order};
  const GaugeFunction lam = named_gauge_function(c.lambda, c.lambda_amplitude, surface);
  const double residual = unitary_equivalence_residual(req, lam);
  const OperatorMatrix H = build_hamiltonian(req);
  HamiltonianRequest shifted = req;
  shifted.field = gauge_transformed(req.field.value_or(GaugeFieldSpec::none()), lam, grid,
                                    GaugeRoute::StencilConsistent);
  const SpectrumReport e0 = spectrum(H, c.k);
  const SpectrumReport e1 = spectrum(build_hamiltonian(shifted), c.k);
  const double shift = multiset_distance(e0.eigenvalues, e1.eigenvalues);
  Json j = base_report(c);
  j["eigenvalues"] = eigenvalues_json(e0.eigenvalues);
  j["hermiticity_residual"] = e0.hermiticity_residual;
  j["diagnostics"]["operator"] = H.label;
  j["diagnostics"]["gauge_function"] = lam.name;
  j["diagnostics"]["unitary_equivalence_residual"] = residual;
  j["diagnostics"]["spectrum_shift"] = shift;
  j["diagnostics"]["transformed_eigenvalues"] = eigenvalues_json(e1.eigenvalues);
  RunResult r;
  r.report = c.format == "csv" ? spectrum_csv(e0.eigenvalues) : dump_json(j);
  r.summary = "gauge_residual=" + g17(residual) + " spectrum_shift=" + g17(shift);
  return r;
}

RunResult run_thin_layer(const RunConfig& c) {
  const SurfaceSpec surface = surface_of(c);
  const PhysicalConstants k = constants_of(c);
  const auto rows = thin_layer_sweep(surface, c.l, c.d, k, c.nr);
  Json j = base_report(c);
  Json table = Json::array();
  for (const auto& row : rows) {
    Json e;
    e["d"] = row.d;
    e["l"] = row.l;
    e["E_raw"] = row.e_raw;
    e["E_box"] = row.e_box;
    e["E_box_exact"] = row.e_box_exact;
    e["E_surface"] = row.e_surface;
    e["shift"] = row.shift;
    table.push_back(e);
  }
  j["diagnostics"]["rows"] = table;
  j["diagnostics"]["geometric_kinetic_energy"] = geometric_kinetic_energy(surface, k);
  std::string summary;
  if (c.d.size() >= 3) {
    Json ex = Json::array();
    for (std::size_t a = 0; a < c.l.size(); ++a) {
      std::vector<double> x, y;
      for (std::size_t b = 0; b < c.d.size(); ++b) {
        const SweepRow& row = rows[a * c.d.size() + b];
        x.push_back(row.d * row.d);
        y.push_back(row.shift);
      }
      const double limit = extrapolate_to_zero(x, y);
      const double order = empirical_order(c.d, y);
      Json e;
      e["l"] = c.l[a];
      e["limit"] = limit;
      e["order"] = order;
      ex.push_back(e);
      if (!summary.empty()) summary += " ";
      summary += "l=" + std::to_string(c.l[a]) + ":limit=" + g17(limit);
    }
    j["diagnostics"]["extrapolations"] = ex;
  } else {
    summary = "rows=" + std::to_string(rows.size());
  }
  RunResult r;
  r.report = c.format == "csv" ? sweep_csv(rows) : dump_json(j);
  r.summary = summary;
  return r;
}

RunResult run_gke(const RunConfig& c) {
  const SurfaceSpec surface = surface_of(c);
  const CurvatureData curv = curvature(surface);
  const double gke = geometric_kinetic_energy(curv, constants_of(c));
  Json j = base_report(c);
  j["diagnostics"]["geometric_kinetic_energy"] = gke;
  j["diagnostics"]["kappa1"] = curv.kappa1;
  j["diagnostics"]["kappa2"] = curv.kappa2;
  j["diagnostics"]["mean_curvature"] = curv.mean;
  j["diagnostics"]["gaussian_curvature"] = curv.gaussian;
  RunResult r;
  r.report = c.format == "csv" ? key_value_csv(j["diagnostics"]) : dump_json(j);
  r.summary = g17(gke);
  return r;
}

}  // namespace

int RunConfig::axial_nodes() const {
  if (n2 != 0) return n2;
  return surface == "ring" ? 1 : n;
}

Json RunConfig::to_json() const {
  Json j = Json::object();
  for (const auto& p : params()) j[p.key] = p.get(*this);
  return j;
}

void validate(const RunConfig& c) {
  bool known = false;
  for (const auto& s : kSubcommands) known = known || s == c.subcommand;
  if (!known) throw ConfigError("subcommand", "unknown subcommand '" + c.subcommand + "'");
  require(member_of(c.surface, {"ring", "cylinder", "sphere"}), "surface",
          "must be ring, cylinder or sphere");
  require(positive(c.R), "R", "must be positive");
  require(positive(c.L), "L", "must be positive");
  require(positive(c.hbar), "hbar", "must be positive");
  require(positive(c.mass), "mass", "must be positive");
  require(c.charge != 0.0 && std::isfinite(c.charge), "charge", "must be finite and nonzero");
  require(member_of(c.format, {"json", "csv"}), "format", "must be json or csv");

  if (c.subcommand == "thin-layer") {
    require(!c.d.empty(), "d", "needs at least one width");
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      require(positive(c.d[i]), "d", "widths must be positive");
      require(c.d[i] < 2.0 * c.R, "d", "shell collapses through axis/origin");
      if (i > 0) require(c.d[i] < c.d[i - 1], "d", "widths must be strictly decreasing");
    }
    require(!c.l.empty(), "l", "needs at least one angular index");
    for (int l : c.l) require(l >= 0, "l", "angular indices must be non-negative");
    require(c.nr == 0 || c.nr >= 50, "nr", "must be at least 50");
    return;
  }
  if (c.subcommand == "gke") return;

  require(c.n >= 3, "n", "grid too small (need >= 3)");
  if (c.surface == "ring") {
    require(c.n2 == 0 || c.n2 == 1, "n2", "a ring has a single axial node");
  } else {
    require(c.n2 == 0 || c.n2 >= 3, "n2", "grid too small (need >= 3)");
    if (c.surface == "sphere") require(c.axial_nodes() % 2 == 0, "n2", "must be even on a sphere");
  }
  require(member_of(c.field, {"none", "uniform", "ab"}), "field", "must be none, uniform or ab");
  require(std::isfinite(c.B), "B", "must be finite");
  require(std::isfinite(c.flux), "flux", "must be finite");
  require(std::isfinite(c.Ar), "Ar", "must be finite");
  require(std::isfinite(c.dAr), "dAr", "must be finite");
  require(member_of(c.variant, {"correct", "pragmatic"}), "variant", "must be correct or pragmatic");
  require(!(c.variant == "pragmatic" && c.surface == "sphere"), "variant",
          "the pragmatic Hamiltonian is defined for ring and cylinder");
  require(c.order == 2 || c.order == 4, "order", "must be 2 or 4");
  const long dim = static_cast<long>(c.n) * c.axial_nodes() * (c.spin ? 2 : 1);
  require(dim <= 20000, "n", "grid too large for dense solves");
  if (c.subcommand != "hermiticity") require(c.k >= 1 && c.k <= dim, "k", "must lie in [1, grid size]");
  if (c.subcommand == "gauge-check") {
    require(member_of(c.lambda, {"const", "sin1", "cos1", "sin1_times_c2", "cartesian_x"}),
            "lambda", "unknown gauge function");
    require(std::isfinite(c.lambda_amplitude), "lambda_amplitude", "must be finite");
  }
}

void apply_config_json(RunConfig& config, const Json& j) {
  if (!j.is_object()) throw ConfigError("--config", "config file must hold a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Param* match = nullptr;
    for (const auto& p : params())
      if (p.key == it.key()) match = &p;
    if (!match) throw ConfigError("config key '" + it.key() + "'", "unknown key");
    match->set(config, it.value());
  }
}

bool parse_config(int argc, const char* const* argv, RunConfig& config, std::ostream& out) {
  CLI::App app{"Surface Hamiltonians on ring, cylinder and sphere", "surfband"};
  RunConfig flags;
  std::string config_path, l_text, d_text;
  std::string subcommand;
  app.add_option("subcommand", subcommand, "spectrum | hermiticity | gauge-check | thin-layer | gke");
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--surface", flags.surface, "ring | cylinder | sphere");
  app.add_option("--R", flags.R, "radius");
  app.add_option("--L", flags.L, "cylinder half-length");
  app.add_option("--n", flags.n, "nodes along theta");
  app.add_option("--n2", flags.n2, "nodes along z (cylinder) or phi (sphere)");
  app.add_option("--k", flags.k, "number of eigenvalues");
  app.add_option("--field", flags.field, "none | uniform | ab");
  app.add_option("--B", flags.B, "uniform axial field strength");
  app.add_option("--flux", flags.flux, "Aharonov-Bohm flux");
  app.add_option("--Ar", flags.Ar, "on-surface radial potential A_r");
  app.add_option("--dAr", flags.dAr, "on-surface dA_r/dr");
  app.add_flag("--spin", flags.spin, "include spin and the Zeeman term");
  app.add_option("--variant", flags.variant, "correct | pragmatic");
  app.add_option("--order", flags.order, "stencil order (2 or 4)");
  app.add_option("--hbar", flags.hbar, "reduced Planck constant");
  app.add_option("--mass", flags.mass, "particle mass");
  app.add_option("--charge", flags.charge, "particle charge");
  app.add_option("--l", l_text, "angular indices, comma separated");
  app.add_option("--d", d_text, "layer widths, comma separated, decreasing");
  app.add_option("--nr", flags.nr, "radial nodes (0 = automatic)");
  app.add_option("--lambda", flags.lambda, "gauge function name");
  app.add_option("--lambda-amplitude", flags.lambda_amplitude, "gauge function amplitude");
  app.add_option("--field-csv", flags.field_csv, "sampled potential CSV");
  app.add_option("--output", flags.output, "report path");
  app.add_option("--format", flags.format, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::ParseError& e) {
    throw ConfigError("arguments", e.what());
  }
  if (app.count("--l")) flags.l = parse_list<int>("--l", l_text);
  if (app.count("--d")) flags.d = parse_list<double>("--d", d_text);
  flags.subcommand = subcommand;

  RunConfig merged;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw ConfigError("--config", "cannot open '" + config_path + "'");
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw ConfigError("--config", std::string("invalid JSON: ") + e.what());
    }
    apply_config_json(merged, j);
  }
  for (const auto& p : params()) {
    const bool given = p.key == "subcommand" ? !subcommand.empty() : app.count(flag_for(p.key)) > 0;
    if (given) p.copy(merged, flags);
  }
  if (subcommand.empty() && config_path.empty())
    throw ConfigError("subcommand", "missing subcommand");
  validate(merged);
  config = merged;
  return true;
}

RunResult execute(const RunConfig& c) {
  validate(c);
  if (c.subcommand == "spectrum") return run_spectrum(c);
  if (c.subcommand == "hermiticity") return run_hermiticity(c);
  if (c.subcommand == "gauge-check") return run_gauge_check(c);
  if (c.subcommand == "thin-layer") return run_thin_layer(c);
  return run_gke(c);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = execute(config);
  } catch (const ConfigError& e) {
    err << "surfband: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "surfband: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "surfband: " << e.what() << "\n";
    return 1;
  }
  if (!config.output.empty()) {
    try {
      write_atomic(config.output, result.report);
    } catch (const std::exception& e) {
      err << "surfband: " << e.what() << "\n";
      return 1;
    }
  }
  out << result.summary << "\n";
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    if (!parse_config(argc, argv, config, out)) return 0;
  } catch (const ConfigError& e) {
    err << "surfband: " << e.what() << "\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace surfband
