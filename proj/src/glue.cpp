#include "zetaglue/glue.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace zetaglue::glue {

std::int64_t SingularFiber::delta() const {
  std::int64_t sum = 0;
  for (std::uint32_t d : branch_degrees) sum += d;
  return sum - point_degree;
}

std::int64_t SingularFiber::geometric_size() const {
  std::int64_t sum = 0;
  for (std::uint32_t d : branch_degrees) sum += d;
  return sum / point_degree;
}

std::int64_t SingularCurve::delta() const {
  std::int64_t sum = 0;
  for (const auto& f : fibers) sum += f.delta();
  return sum;
}

bool SingularCurve::all_fibers_concrete() const {
  return std::all_of(fibers.begin(), fibers.end(),
                     [](const SingularFiber& f) { return f.concrete(); });
}

void validate(const SingularFiber& fiber) {
  if (fiber.point_degree < 1) throw std::invalid_argument("glue: fiber degree must be >= 1");
  if (fiber.branch_degrees.empty()) {
    throw std::invalid_argument("glue: fiber must have at least one branch");
  }
  for (std::uint32_t d : fiber.branch_degrees) {
    if (d < fiber.point_degree || d % fiber.point_degree != 0) {
      throw std::invalid_argument(
          "glue: branch degree must be a multiple of the fiber degree");
    }
  }
  if (!fiber.branch_points.empty()) {
    if (fiber.branch_points.size() != fiber.branch_degrees.size()) {
      throw std::invalid_argument("glue: one concrete point per branch required");
    }
    for (std::size_t i = 0; i < fiber.branch_points.size(); ++i) {
      if (fiber.branch_points[i].degree != fiber.branch_degrees[i]) {
        throw std::invalid_argument("glue: concrete point degree does not match branch");
      }
    }
  }
}

void validate(const SingularCurve& y) {
  std::set<std::pair<std::uint32_t, std::uint64_t>> used;
  for (const auto& fiber : y.fibers) {
    validate(fiber);
    for (const auto& cp : fiber.branch_points) {
      if (!used.emplace(cp.degree, cp.index).second) {
        throw std::invalid_argument("glue: closed point used by more than one fiber");
      }
    }
  }
  for (const auto& th : y.thickenings) {
    if (th.degree < 1 || th.y < 1) {
      throw std::invalid_argument("glue: thickening degree and increment must be >= 1");
    }
    if (th.location) {
      if (th.location->degree != th.degree) {
        throw std::invalid_argument("glue: thickening location degree mismatch");
      }
      if (!used.emplace(th.location->degree, th.location->index).second) {
        throw std::invalid_argument("glue: thickening placed on a glued point");
      }
    }
  }
}

SingularCurve assemble_glued(const curve::CurveModel& c,
                             std::vector<curve::ClosedPoint> orbits) {
  for (const auto& cp : orbits) {
    if (cp.degree < 2) {
      throw std::invalid_argument("glue: only orbits of size >= 2 can be glued");
    }
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.index) < std::tie(b.degree, b.index);
  });
  SingularCurve y{c, {}, {}};
  y.fibers.reserve(orbits.size());
  for (auto& cp : orbits) {
    SingularFiber fiber;
    fiber.point_degree = 1;
    fiber.branch_degrees = {cp.degree};
    fiber.branch_points = {std::move(cp)};
    y.fibers.push_back(std::move(fiber));
  }
  validate(y);
  return y;
}

SingularCurve build_selective_glued_curve(const curve::CurveModel& c,
                                          const std::vector<std::uint32_t>& ts,
                                          std::uint64_t cap) {
  if (ts.empty()) throw std::invalid_argument("glue: empty gluing degree list");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 2) throw std::invalid_argument("glue: gluing degrees must be >= 2");
    if (i > 0 && ts[i] <= ts[i - 1]) {
      throw std::invalid_argument("glue: gluing degrees must be strictly increasing");
    }
  }
  std::vector<curve::ClosedPoint> orbits;
  for (std::uint32_t t : ts) {
    for (auto& cp : curve::closed_points_of_degree(c, t, cap)) {
      orbits.push_back(std::move(cp));
    }
  }
  return assemble_glued(c, std::move(orbits));
}

SingularCurve build_glued_curve(const curve::CurveModel& c, std::uint32_t n,
                                std::uint64_t cap) {
  if (n < 2) throw std::invalid_argument("glue: gluing depth must be >= 2");
  std::vector<std::uint32_t> ts(n - 1);
  for (std::uint32_t t = 2; t <= n; ++t) ts[t - 2] = t;
  return build_selective_glued_curve(c, ts, cap);
}

GenusDelta genus_and_delta(const SingularCurve& y) {
  GenusDelta gd{static_cast<std::int64_t>(y.normalization.genus()), 0};
  for (const auto& fiber : y.fibers) gd.delta += fiber.delta();
  gd.arithmetic_genus += gd.delta;
  for (const auto& th : y.thickenings) {
    gd.arithmetic_genus += static_cast<std::int64_t>(th.degree) * th.y;
  }
  return gd;
}

SingularCurve random_profile(std::uint64_t seed, std::int64_t delta_budget,
                             const ProfileConstraints& constraints) {
  if (delta_budget < 0) throw std::invalid_argument("glue: delta budget must be >= 0");
  if (constraints.point_degree_min < 1 ||
      constraints.point_degree_min > constraints.point_degree_max) {
    throw std::invalid_argument("glue: bad fiber degree range");
  }
  if (constraints.max_branches < 1 || constraints.branch_multiplier_max < 1) {
    throw std::invalid_argument("glue: bad branch constraints");
  }
  if (constraints.seminormal_only && constraints.max_branches == 1 &&
      constraints.branch_multiplier_max < 2) {
    throw std::invalid_argument("glue: constraints admit no fiber of geometric size >= 2");
  }

  // modulo draws keep the sequence identical across standard libraries
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint32_t lo, std::uint32_t hi) {
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };

  SingularCurve y{curve::CurveModel::projective_line(2, 1), {}, {}};
  std::int64_t remaining = delta_budget;
  int unibranch_left = constraints.seminormal_only ? 0 : 2;
  for (int attempts = 0; remaining > 0 && attempts < 64; ++attempts) {
    SingularFiber fiber;
    fiber.point_degree = draw(constraints.point_degree_min, constraints.point_degree_max);
    const std::uint32_t branches = draw(1, constraints.max_branches);
    for (std::uint32_t b = 0; b < branches; ++b) {
      fiber.branch_degrees.push_back(fiber.point_degree *
                                     draw(1, constraints.branch_multiplier_max));
    }
    std::sort(fiber.branch_degrees.begin(), fiber.branch_degrees.end());
    const std::int64_t contribution = fiber.delta();
    if (contribution > remaining) continue;
    if (constraints.seminormal_only && fiber.geometric_size() < 2) continue;
    if (contribution == 0) {
      if (unibranch_left == 0) continue;
      --unibranch_left;
    }
    remaining -= contribution;
    y.fibers.push_back(std::move(fiber));
  }
  std::sort(y.fibers.begin(), y.fibers.end(), [](const auto& a, const auto& b) {
    return std::tie(a.point_degree, a.branch_degrees) <
           std::tie(b.point_degree, b.branch_degrees);
  });
  validate(y);
  return y;
}

}  // namespace zetaglue::glue
