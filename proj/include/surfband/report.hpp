#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "surfband/analysis.hpp"
#include "surfband/thinlayer.hpp"

namespace surfband {

using Json = nlohmann::ordered_json;

/// Serializes with fixed key order and doubles as %.17g (always carrying a
/// '.' or exponent); NaN and infinities become null.
std::string dump_json(const Json& value, int indent = 2);

/// "%.17e".
std::string format_scientific(double x);

/// index, Re(E), Im(E).
std::string spectrum_csv(const std::vector<cplx>& eigenvalues);

/// d, l, E_raw, E_box, E_surface, shift.
std::string sweep_csv(const std::vector<SweepRow>& rows);

Json eigenvalues_json(const std::vector<cplx>& eigenvalues);

/// Writes to a temporary file beside `path`, then renames it into place.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace surfband
