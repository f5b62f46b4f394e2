#ifndef ZETAGLUE_CURVE_HPP
#define ZETAGLUE_CURVE_HPP

#include <cstdint>
#include <vector>

#include "zetaglue/gf.hpp"
#include "zetaglue/intpoly.hpp"

namespace zetaglue::curve {

enum class CurveKind { ProjectiveLine, PlaneCurve };

/// Monomial coef * x^ex * y^ey * z^ez of a homogeneous plane model.
struct PlaneTerm {
  std::uint32_t coef;
  std::uint32_t ex, ey, ez;
  friend bool operator==(const PlaneTerm&, const PlaneTerm&) = default;
};

/// The smooth normalization: either the projective line over F_q or a
/// smooth plane curve F(x,y,z) = 0 of degree d (genus (d-1)(d-2)/2).
/// Smoothness and integrality are desk-scale properties: they are checked
/// point-by-point over every enumerated extension (Jacobian criterion),
/// and a Weil-bound violation in count_points also rejects the model.
class CurveModel {
 public:
  static CurveModel projective_line(std::uint32_t p, std::uint32_t e);
  /// Validates: terms nonzero mod p, homogeneous of a single degree >= 1.
  static CurveModel plane_curve(std::uint32_t p, std::uint32_t e,
                                std::vector<PlaneTerm> terms);

  CurveKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t genus() const { return genus_; }
  /// Total degree of the plane model (0 for the projective line).
  std::uint32_t plane_degree() const { return degree_; }
  /// Canonicalized terms: reduced mod p, merged, sorted by exponents.
  const std::vector<PlaneTerm>& terms() const { return terms_; }

  /// F_{q^i} as a Field (per-extension, no cross-degree embeddings).
  gf::Field extension_field(std::uint32_t i,
                            std::uint64_t cap = gf::kDefaultFieldCap) const;

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  CurveModel() = default;
  CurveKind kind_ = CurveKind::ProjectiveLine;
  std::uint32_t p_ = 0, e_ = 0;
  std::uint64_t q_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t genus_ = 0;
  std::vector<PlaneTerm> terms_;
};

/// A point of C over some F_{q^i}, stored in canonical coordinates:
///   projective line:  [a : 1] for affine points, [1 : 0] at infinity;
///   plane curve:      [x : y : z] with the first nonzero coordinate
///                     scaled to 1.
/// Frobenius acts coordinate-wise and preserves these forms.
struct GeometricPoint {
  std::vector<gf::FieldElement> coords;
  bool operator==(const GeometricPoint& rhs) const { return coords == rhs.coords; }
  bool operator!=(const GeometricPoint& rhs) const { return !(*this == rhs); }
};

/// Total order key matching enumeration order: (chart, i1, i2).
struct PointKey {
  std::uint32_t chart;
  std::uint64_t i1, i2;
  friend auto operator<=>(const PointKey&, const PointKey&) = default;
};

/// Frobenius orbit of size `degree`; `rep` is the orbit member that comes
/// first in enumeration order and `index` its rank among the degree-t
/// closed points of the same curve.
struct ClosedPoint {
  std::uint32_t degree = 0;
  std::uint64_t index = 0;
  GeometricPoint rep;
};

GeometricPoint frobenius_q(const GeometricPoint& pt);
std::uint32_t point_degree(const GeometricPoint& pt);
PointKey point_key(const GeometricPoint& pt);

/// All F_{q^i}-points in deterministic order (affine chart first, then
/// infinity). Materializes the list; censuses stream instead.
std::vector<GeometricPoint> enumerate_points(const CurveModel& c, std::uint32_t i,
                                             std::uint64_t cap = gf::kDefaultFieldCap);

struct PointCountTable {
  std::uint64_t q = 0;
  std::uint32_t genus = 0;
  std::vector<std::int64_t> counts;  // counts[i-1] = N_i
  std::int64_t at(std::uint32_t i) const { return counts.at(i - 1); }
  std::uint32_t n_max() const { return static_cast<std::uint32_t>(counts.size()); }
};

/// Exact N_i for i = 1..n_max. Throws std::domain_error when the model
/// fails the Jacobian smoothness scan or the Weil bound
/// (N_i - q^i - 1)^2 <= 4 g^2 q^i.
PointCountTable count_points(const CurveModel& c, std::uint32_t n_max,
                             std::uint64_t cap = gf::kDefaultFieldCap);

/// (N_i - q^i - 1)^2 <= 4 g^2 q^i with exact integers.
bool weil_bound_ok(std::uint64_t q, std::uint32_t genus, std::uint32_t i, std::int64_t n_i);

/// All Frobenius orbits of size exactly t, sorted by representative.
std::vector<ClosedPoint> closed_points_of_degree(const CurveModel& c, std::uint32_t t,
                                                 std::uint64_t cap = gf::kDefaultFieldCap);

/// Closed form for the projective line: q+1 closed points of degree 1 and
/// (1/t) sum_{d|t} mu(t/d) q^d of each degree t >= 2.
std::int64_t p1_closed_point_count(std::uint64_t q, std::uint32_t t);

/// Numerator P(t) = prod (1 - w_i t) of the zeta function of a smooth
/// curve, a_0 = 1 and a_{2g} = q^g, recovered from N_1..N_g by Newton's
/// identities with the upper half filled in by the functional equation
/// a_{2g-i} = q^{g-i} a_i. Construction re-expands the numerator and
/// checks every provided N_i; std::domain_error on any inconsistency.
struct ZetaNumerator {
  IntPolynomial poly;
  std::uint32_t genus = 0;
  std::uint64_t q = 0;
};

ZetaNumerator zeta_numerator_from_counts(const PointCountTable& table, std::uint32_t genus);

/// N_n for n = 1..n_max implied by a numerator (series expansion of the
/// logarithmic derivative, i.e. N_n = q^n + 1 - p_n(poly)).
std::vector<std::int64_t> counts_from_numerator(const ZetaNumerator& z, std::uint32_t n_max);

enum class Extremality { Maximal, Minimal, Neither, NotApplicable };
const char* to_string(Extremality e);

/// Exact comparison with (1 ± sqrt(q) t)^{2g}. Genus 0 and non-square q
/// report NotApplicable (the genus-0 Weil count is an equality for every
/// curve, so the label carries no information there).
Extremality classify_extremality(const ZetaNumerator& z);

}  // namespace zetaglue::curve

#endif
