#ifndef ZETAGLUE_ZETA_HPP
#define ZETAGLUE_ZETA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetaglue/glue.hpp"
#include "zetaglue/intpoly.hpp"

namespace zetaglue::zeta {

/// Local factor of one singular fiber:
///   prod over branches (1 - t^{d_branch}) / (1 - t^{d_point}),
/// an integer polynomial of degree fiber.delta() with constant term 1 and
/// all inverse roots on the unit circle. Throws std::domain_error when the
/// division is not exact (invalid fiber data).
IntPolynomial fiber_factor(const glue::SingularFiber& fiber);

/// Product of the fiber factors: the quotient of the zeta function of the
/// glued curve by the zeta function of its normalization. Degree = delta,
/// constant term 1. Thickenings contribute the constant 1.
IntPolynomial singular_factor(const glue::SingularCurve& y);

/// True iff f = (1 + t)^{deg f}, by exact binomial comparison (all inverse
/// roots equal -1). Degree 0 is vacuously true. Requires f(0) = 1.
bool all_roots_minus_one(const IntPolynomial& f);
/// Companion: f = (1 - t)^{deg f}.
bool all_roots_plus_one(const IntPolynomial& f);

/// Decides all_roots_minus_one(singular_factor(y)) from the fiber shapes
/// alone: every fiber is either unibranch (geometric size 1) or a rational
/// point whose fiber is a single conjugate pair (degree 1, one branch of
/// degree 2).
bool all_roots_minus_one_structural(const glue::SingularCurve& y);

/// Point counts of the glued curve over every extension, from the counts
/// of the normalization and the power sums of the singular factor:
///   #Y(F_{q^n}) = N_n - p_n(singular factor).
struct ZetaReport {
  IntPolynomial singular_factor;
  std::int64_t delta = 0;
  std::vector<std::int64_t> counts_c;  // N_n, n = 1..n_max
  std::vector<std::int64_t> counts_y;  // #Y(F_{q^n})
  bool all_minus_one = false;
  bool all_plus_one = false;
};

ZetaReport count_points_singular(const glue::SingularCurve& y, std::uint32_t n_max,
                                 std::uint64_t cap = gf::kDefaultFieldCap);
/// Same with a precomputed count table for the normalization.
ZetaReport count_points_singular(const glue::SingularCurve& y,
                                 const curve::PointCountTable& counts_c);

/// Combinatorial counter for glued curves with concrete fibers, fully
/// independent of the zeta route: per extension n it counts
///   sum over t | n of t * (closed points of degree t not glued anywhere)
///   + point_degree for every fiber whose point_degree divides n.
/// Censuses are computed once and cached.
class DirectCounter {
 public:
  explicit DirectCounter(const glue::SingularCurve& y,
                         std::uint64_t cap = gf::kDefaultFieldCap);
  std::int64_t count(std::uint32_t n) const;

 private:
  const glue::SingularCurve& y_;
  std::uint64_t cap_;
  mutable std::map<std::uint32_t, std::int64_t> census_;       // t -> closed points of degree t
  std::map<std::uint32_t, std::int64_t> glued_;                // t -> glued closed points
  std::int64_t closed_point_count(std::uint32_t t) const;
};

/// One-shot direct count (see DirectCounter). Throws std::invalid_argument
/// when any fiber is abstract.
std::int64_t count_points_direct(const glue::SingularCurve& y, std::uint32_t n,
                                 std::uint64_t cap = gf::kDefaultFieldCap);

/// Per-extension bounds N_n - delta <= #Y <= N_n + delta with the attained
/// side marked, plus the two root flags and a parity note.
struct ExtremalityReport {
  std::int64_t delta = 0;
  bool all_minus_one = false;
  bool all_plus_one = false;
  struct Row {
    std::uint32_t n;
    std::int64_t count_c, count_y, lower, upper;
    bool hit_lower, hit_upper;
  };
  std::vector<Row> rows;
  std::string note;
};

ExtremalityReport extremality_report(const glue::SingularCurve& y, std::uint32_t n_max,
                                     std::uint64_t cap = gf::kDefaultFieldCap);

}  // namespace zetaglue::zeta

#endif
