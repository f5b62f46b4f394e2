#ifndef ZETAGLUE_JSON_IO_HPP
#define ZETAGLUE_JSON_IO_HPP

#include <json.hpp>

#include "zetaglue/curve.hpp"
#include "zetaglue/glue.hpp"
#include "zetaglue/zeta.hpp"

namespace zetaglue::io {

using nlohmann::json;

// Curve model: {"kind": "p1" | "plane", "p": int, "e": int,
//               "poly": [[coef, ex, ey, ez], ...]}
json curve_to_json(const curve::CurveModel& c);
curve::CurveModel curve_from_json(const json& j);

// Singular curve: {"curve": <model>,
//                  "fibers": [{"dP": int, "branches": [int, ...],
//                              "points": [<point>, ...]?}, ...],
//                  "thickenings": [{"degree": int, "y": int, "point"?}],
//                  "fields": [<descriptor>, ...]?}
// Concrete closed points serialize as {"m": t, "coords": [[c0, c1, ...], ...]}
// (coordinates of the canonical representative over the named field), and
// "fields" carries one descriptor {"m", "p", "e", "modulus"} per extension
// degree that appears. Loading re-resolves points against the censuses.
json singular_curve_to_json(const glue::SingularCurve& y);
glue::SingularCurve singular_curve_from_json(const json& j,
                                             std::uint64_t cap = gf::kDefaultFieldCap);

// Reports. Singular-factor coefficients are decimal strings (they exceed
// 64-bit range for deep gluings); counts are plain numbers.
json zeta_report_to_json(const zeta::ZetaReport& rep);
json extremality_report_to_json(const zeta::ExtremalityReport& rep);
json count_table_to_json(const curve::PointCountTable& table);
json numerator_to_json(const curve::ZetaNumerator& z);

}  // namespace zetaglue::io

#endif
