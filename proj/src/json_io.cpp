#include "zetaglue/json_io.hpp"

#include <map>
#include <stdexcept>

namespace zetaglue::io {

json curve_to_json(const curve::CurveModel& c) {
  json j;
  j["kind"] = c.kind() == curve::CurveKind::ProjectiveLine ? "p1" : "plane";
  j["p"] = c.p();
  j["e"] = c.e();
  json poly = json::array();
  for (const auto& t : c.terms()) {
    poly.push_back(json::array({t.coef, t.ex, t.ey, t.ez}));
  }
  j["poly"] = poly;
  return j;
}

curve::CurveModel curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("p") || !j.contains("e")) {
    throw std::invalid_argument("json: curve model needs kind, p, e");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::uint32_t p = j.at("p").get<std::uint32_t>();
  const std::uint32_t e = j.at("e").get<std::uint32_t>();
  if (kind == "p1") return curve::CurveModel::projective_line(p, e);
  if (kind != "plane") throw std::invalid_argument("json: unknown curve kind '" + kind + "'");
  if (!j.contains("poly")) throw std::invalid_argument("json: plane model needs poly");
  std::vector<curve::PlaneTerm> terms;
  for (const auto& row : j.at("poly")) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("json: poly rows are [coef, ex, ey, ez]");
    }
    terms.push_back(curve::PlaneTerm{row[0].get<std::uint32_t>(), row[1].get<std::uint32_t>(),
                                     row[2].get<std::uint32_t>(), row[3].get<std::uint32_t>()});
  }
  return curve::CurveModel::plane_curve(p, e, std::move(terms));
}

namespace {

json point_to_json(const curve::ClosedPoint& cp) {
  json coords = json::array();
  for (const auto& c : cp.rep.coords) {
    coords.push_back(c.coeffs());
  }
  return json{{"m", cp.degree}, {"coords", coords}};
}

json field_descriptor(const gf::Field& f) {
  return json{{"m", f.m()}, {"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

curve::ClosedPoint resolve_point(const json& jp, const curve::CurveModel& model,
                                 std::map<std::uint32_t, std::vector<curve::ClosedPoint>>& cache,
                                 std::uint64_t cap) {
  const std::uint32_t t = jp.at("m").get<std::uint32_t>();
  auto it = cache.find(t);
  if (it == cache.end()) {
    it = cache.emplace(t, curve::closed_points_of_degree(model, t, cap)).first;
  }
  const gf::Field k = model.extension_field(t, cap);
  curve::GeometricPoint pt;
  for (const auto& jc : jp.at("coords")) {
    pt.coords.push_back(k.from_coeffs(jc.get<std::vector<std::uint32_t>>()));
  }
  if (curve::point_degree(pt) != t) {
    throw std::invalid_argument("json: point degree does not match its field");
  }
  // canonical representative of the orbit, then a census lookup
  curve::GeometricPoint best = pt;
  curve::PointKey best_key = curve::point_key(pt);
  curve::GeometricPoint b = curve::frobenius_q(pt);
  for (std::uint32_t i = 1; i < t; ++i, b = curve::frobenius_q(b)) {
    const curve::PointKey key = curve::point_key(b);
    if (key < best_key) {
      best_key = key;
      best = b;
    }
  }
  for (const auto& cp : it->second) {
    if (cp.rep == best) return cp;
  }
  throw std::invalid_argument("json: point does not lie on the curve");
}

}  // namespace

json singular_curve_to_json(const glue::SingularCurve& y) {
  json j;
  j["curve"] = curve_to_json(y.normalization);
  std::map<std::uint32_t, json> fields;
  json fibers = json::array();
  for (const auto& fiber : y.fibers) {
    json jf;
    jf["dP"] = fiber.point_degree;
    jf["branches"] = fiber.branch_degrees;
    if (fiber.concrete()) {
      json pts = json::array();
      for (const auto& cp : fiber.branch_points) {
        pts.push_back(point_to_json(cp));
        fields.emplace(cp.degree, field_descriptor(cp.rep.coords.front().field()));
      }
      jf["points"] = pts;
    }
    fibers.push_back(jf);
  }
  j["fibers"] = fibers;
  json thickenings = json::array();
  for (const auto& th : y.thickenings) {
    json jt{{"degree", th.degree}, {"y", th.y}};
    if (th.location) {
      jt["point"] = point_to_json(*th.location);
      fields.emplace(th.location->degree,
                     field_descriptor(th.location->rep.coords.front().field()));
    }
    thickenings.push_back(jt);
  }
  j["thickenings"] = thickenings;
  if (!fields.empty()) {
    json jf = json::array();
    for (const auto& [m, desc] : fields) jf.push_back(desc);
    j["fields"] = jf;
  }
  return j;
}

glue::SingularCurve singular_curve_from_json(const json& j, std::uint64_t cap) {
  if (!j.is_object() || !j.contains("curve")) {
    throw std::invalid_argument("json: singular curve needs a curve model");
  }
  glue::SingularCurve y{curve_from_json(j.at("curve")), {}, {}};
  // descriptors, when present, must match the deterministic moduli
  if (j.contains("fields")) {
    for (const auto& jf : j.at("fields")) {
      const gf::Field f = gf::Field::make(jf.at("p").get<std::uint32_t>(),
                                          jf.at("e").get<std::uint32_t>(),
                                          jf.at("m").get<std::uint32_t>(), cap);
      if (jf.at("modulus").get<std::vector<std::uint32_t>>() != f.modulus()) {
        throw std::invalid_argument("json: field descriptor does not match the canonical modulus");
      }
    }
  }
  std::map<std::uint32_t, std::vector<curve::ClosedPoint>> cache;
  if (j.contains("fibers")) {
    for (const auto& jf : j.at("fibers")) {
      glue::SingularFiber fiber;
      fiber.point_degree = jf.at("dP").get<std::uint32_t>();
      fiber.branch_degrees = jf.at("branches").get<std::vector<std::uint32_t>>();
      if (jf.contains("points")) {
        for (const auto& jp : jf.at("points")) {
          fiber.branch_points.push_back(resolve_point(jp, y.normalization, cache, cap));
        }
      }
      y.fibers.push_back(std::move(fiber));
    }
  }
  if (j.contains("thickenings")) {
    for (const auto& jt : j.at("thickenings")) {
      glue::UnibranchThickening th;
      th.degree = jt.at("degree").get<std::uint32_t>();
      th.y = jt.at("y").get<std::uint32_t>();
      if (jt.contains("point")) {
        th.location = resolve_point(jt.at("point"), y.normalization, cache, cap);
      }
      y.thickenings.push_back(std::move(th));
    }
  }
  glue::validate(y);
  return y;
}

json zeta_report_to_json(const zeta::ZetaReport& rep) {
  json j;
  j["delta"] = rep.delta;
  json coeffs = json::array();
  for (const auto& c : rep.singular_factor.coeffs()) coeffs.push_back(c.to_string());
  j["singular_factor"] = coeffs;
  j["counts_C"] = rep.counts_c;
  j["counts_Y"] = rep.counts_y;
  j["all_minus_one"] = rep.all_minus_one;
  j["all_plus_one"] = rep.all_plus_one;
  return j;
}

json extremality_report_to_json(const zeta::ExtremalityReport& rep) {
  json j;
  j["delta"] = rep.delta;
  j["all_minus_one"] = rep.all_minus_one;
  j["all_plus_one"] = rep.all_plus_one;
  j["note"] = rep.note;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(json{{"n", r.n},
                        {"count_C", r.count_c},
                        {"count_Y", r.count_y},
                        {"lower", r.lower},
                        {"upper", r.upper},
                        {"hit_lower", r.hit_lower},
                        {"hit_upper", r.hit_upper}});
  }
  j["rows"] = rows;
  return j;
}

json count_table_to_json(const curve::PointCountTable& table) {
  return json{{"q", table.q}, {"genus", table.genus}, {"counts", table.counts}};
}

json numerator_to_json(const curve::ZetaNumerator& z) {
  json coeffs = json::array();
  for (const auto& c : z.poly.coeffs()) coeffs.push_back(c.to_string());
  return json{{"genus", z.genus}, {"q", z.q}, {"coeffs", coeffs}};
}

}  // namespace zetaglue::io
