#ifndef ZETAGLUE_GLUE_HPP
#define ZETAGLUE_GLUE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "zetaglue/curve.hpp"

namespace zetaglue::glue {

/// One singular closed point of the glued curve: the point itself has
/// degree `point_degree` (its Frobenius orbit size downstairs) and the
/// closed points of the normalization lying over it have the degrees in
/// `branch_degrees` (each a multiple of point_degree). Geometric fiber
/// size is sum(branch_degrees) / point_degree; the local contribution to
/// delta is sum(branch_degrees) - point_degree.
///
/// Fibers built by the gluing constructors carry the actual closed points
/// in `branch_points` (one per branch, same order); profile generators
/// leave it empty ("abstract" fibers).
struct SingularFiber {
  std::uint32_t point_degree = 1;
  std::vector<std::uint32_t> branch_degrees;
  std::vector<curve::ClosedPoint> branch_points;

  bool concrete() const { return !branch_points.empty(); }
  std::int64_t delta() const;
  std::int64_t geometric_size() const;
};

/// A unibranch (cusp-like) modification at a smooth closed point: raises
/// the arithmetic genus by degree * y and is invisible to every point
/// count. Only the numeric effect is modeled.
struct UnibranchThickening {
  std::uint32_t degree = 1;
  std::uint32_t y = 1;
  std::optional<curve::ClosedPoint> location;
};

struct SingularCurve {
  curve::CurveModel normalization;
  std::vector<SingularFiber> fibers;
  std::vector<UnibranchThickening> thickenings;

  std::int64_t delta() const;
  bool all_fibers_concrete() const;
};

/// Fiber-level invariants; throws std::invalid_argument on violation.
void validate(const SingularFiber& fiber);
/// Fiber invariants plus global ones: concrete branch points pairwise
/// distinct across fibers and disjoint from thickening locations.
void validate(const SingularCurve& y);

/// Glues every Frobenius orbit of size 2..n on C to one rational point
/// each. The result does not depend on any processing order.
SingularCurve build_glued_curve(const curve::CurveModel& c, std::uint32_t n,
                                std::uint64_t cap = gf::kDefaultFieldCap);

/// Same, but only for the orbit sizes listed in ts (strictly increasing,
/// all >= 2).
SingularCurve build_selective_glued_curve(const curve::CurveModel& c,
                                          const std::vector<std::uint32_t>& ts,
                                          std::uint64_t cap = gf::kDefaultFieldCap);

/// Assembles a glued curve from an explicit list of closed points of C
/// (each of degree >= 2, pairwise distinct); one fiber per point, in
/// canonical order regardless of the input order.
SingularCurve assemble_glued(const curve::CurveModel& c,
                             std::vector<curve::ClosedPoint> orbits);

struct GenusDelta {
  std::int64_t arithmetic_genus;
  std::int64_t delta;
};

/// p_a(Y) = g(C) + delta + sum over thickenings of degree*y, and delta.
GenusDelta genus_and_delta(const SingularCurve& y);

struct ProfileConstraints {
  bool seminormal_only = false;  // every fiber has geometric size >= 2
  std::uint32_t point_degree_min = 1;
  std::uint32_t point_degree_max = 3;
  std::uint32_t max_branches = 3;
  std::uint32_t branch_multiplier_max = 3;  // branch degree <= point degree * this
};

/// Deterministic random singularity profile (abstract fibers over a fixed
/// P^1/F_2 normalization) with total delta <= delta_budget. The same seed
/// always yields the same profile. Throws std::invalid_argument for
/// unsatisfiable constraints.
SingularCurve random_profile(std::uint64_t seed, std::int64_t delta_budget,
                             const ProfileConstraints& constraints = {});

}  // namespace zetaglue::glue

#endif
