#pragma once

#include <string>

#include <json.hpp>

#include "spherecurves/invariants.hpp"

namespace spherecurves {

using ordered_json = nlohmann::ordered_json;

// Stable-key JSON report. Rationals render as "p" or "p/q" in lowest terms;
// X rows [a, b, coeff] and Y rows [d, coeff] come out sorted because the
// vector's maps are ordered. Emission is canonical: parsing and re-emitting
// is byte-identical.
inline ordered_json report_to_json(const InvariantReport& r) {
  ordered_json j;
  j["crossings"] = r.crossings;
  j["class"] = to_string(r.cls);
  ordered_json xs = ordered_json::array();
  for (const auto& [k, c] : r.F.x)
    xs.push_back(ordered_json::array({k.first, k.second, c.str()}));
  j["X"] = std::move(xs);
  ordered_json ys = ordered_json::array();
  for (const auto& [d, c] : r.F.y)
    ys.push_back(ordered_json::array({d, c.str()}));
  j["Y"] = std::move(ys);
  ordered_json psis = ordered_json::array();
  for (const auto& v : r.psi_values) psis.push_back(v.str());
  j["psi"] = std::move(psis);
  ordered_json etas = ordered_json::array();
  for (const auto& v : r.eta_values) etas.push_back(v.str());
  j["eta"] = std::move(etas);
  j["Jplus"] = r.jplus.str();
  j["Jminus"] = r.jminus.str();
  j["St"] = r.st.str();
  return j;
}

inline std::string emit_json(const InvariantReport& r) {
  return report_to_json(r).dump();
}

inline ordered_json xy_to_json(const XYVector& v) {
  ordered_json j;
  ordered_json xs = ordered_json::array();
  for (const auto& [k, c] : v.x)
    xs.push_back(ordered_json::array({k.first, k.second, c.str()}));
  j["X"] = std::move(xs);
  ordered_json ys = ordered_json::array();
  for (const auto& [d, c] : v.y)
    ys.push_back(ordered_json::array({d, c.str()}));
  j["Y"] = std::move(ys);
  return j;
}

}  // namespace spherecurves
