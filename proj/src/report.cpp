#include "surfband/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace surfband {

namespace {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

void dump(const Json& v, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + Json(it.key()).dump() + sep;
        dump(it.value(), indent, depth + 1, out);
      }
      out += nl + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : v) flat = flat && !e.is_structured();
      if (flat || indent == 0) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += indent > 0 ? ", " : ",";
          dump(v[i], indent, depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        dump(v[i], indent, depth + 1, out);
      }
      out += nl + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump(value, indent, 0, out);
  out += "\n";
  return out;
}

std::string format_scientific(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

std::string spectrum_csv(const std::vector<cplx>& eigenvalues) {
  std::string out = "index,re,im\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    out += std::to_string(i) + "," + format_scientific(eigenvalues[i].real()) + "," +
           format_scientific(eigenvalues[i].imag()) + "\n";
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "d,l,E_raw,E_box,E_surface,shift\n";
  for (const auto& r : rows)
    out += format_scientific(r.d) + "," + std::to_string(r.l) + "," + format_scientific(r.e_raw) +
           "," + format_scientific(r.e_box) + "," + format_scientific(r.e_surface) + "," +
           format_scientific(r.shift) + "\n";
  return out;
}

Json eigenvalues_json(const std::vector<cplx>& eigenvalues) {
  Json arr = Json::array();
  for (const auto& e : eigenvalues) arr.push_back(Json::array({e.real(), e.imag()}));
  return arr;
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move report into '" + path + "': " + ec.message());
  }
}

}  // namespace surfband
