#include "zetaglue/zeta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zetaglue/kernels.hpp"

namespace zetaglue::zeta {

IntPolynomial fiber_factor(const glue::SingularFiber& fiber) {
  glue::validate(fiber);
  IntPolynomial num = IntPolynomial::one();
  for (std::uint32_t d : fiber.branch_degrees) {
    num *= IntPolynomial::one_minus_t_pow(d);
  }
  try {
    return num.divided_exact(IntPolynomial::one_minus_t_pow(fiber.point_degree));
  } catch (const std::domain_error&) {
    throw std::domain_error("zeta: fiber factor division is not exact (invalid fiber data)");
  }
}

IntPolynomial singular_factor(const glue::SingularCurve& y) {
  IntPolynomial f = IntPolynomial::one();
  for (const auto& fiber : y.fibers) f *= fiber_factor(fiber);
  return f;
}

bool all_roots_minus_one(const IntPolynomial& f) {
  if (f.coeff(0) != BigInt{1}) {
    throw std::invalid_argument("zeta: constant term must be 1");
  }
  return f == IntPolynomial::binomial_power(+1, static_cast<unsigned>(f.degree()));
}

bool all_roots_plus_one(const IntPolynomial& f) {
  if (f.coeff(0) != BigInt{1}) {
    throw std::invalid_argument("zeta: constant term must be 1");
  }
  return f == IntPolynomial::binomial_power(-1, static_cast<unsigned>(f.degree()));
}

bool all_roots_minus_one_structural(const glue::SingularCurve& y) {
  for (const auto& fiber : y.fibers) {
    if (fiber.geometric_size() == 1) continue;
    if (fiber.point_degree == 1 && fiber.branch_degrees == std::vector<std::uint32_t>{2}) {
      continue;
    }
    return false;
  }
  return true;
}

namespace {

ZetaReport report_from_counts(const glue::SingularCurve& y,
                              const curve::PointCountTable& counts_c) {
  glue::validate(y);
  ZetaReport rep;
  rep.singular_factor = singular_factor(y);
  rep.delta = rep.singular_factor.degree();
  rep.all_minus_one = all_roots_minus_one(rep.singular_factor);
  rep.all_plus_one = all_roots_plus_one(rep.singular_factor);
  const std::uint32_t n_max = counts_c.n_max();
  const std::vector<BigInt> ps = power_sums(rep.singular_factor, n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    rep.counts_c.push_back(counts_c.at(n));
    const BigInt v = BigInt{counts_c.at(n)} - ps[n - 1];
    const long long count = v.to_int64();
    if (count < 0) {
      throw std::domain_error("zeta: negative point count (inconsistent gluing data)");
    }
    rep.counts_y.push_back(count);
  }
  return rep;
}

}  // namespace

ZetaReport count_points_singular(const glue::SingularCurve& y, std::uint32_t n_max,
                                 std::uint64_t cap) {
  return report_from_counts(y, curve::count_points(y.normalization, n_max, cap));
}

ZetaReport count_points_singular(const glue::SingularCurve& y,
                                 const curve::PointCountTable& counts_c) {
  return report_from_counts(y, counts_c);
}

DirectCounter::DirectCounter(const glue::SingularCurve& y, std::uint64_t cap)
    : y_(y), cap_(cap) {
  glue::validate(y);
  if (!y.all_fibers_concrete()) {
    throw std::invalid_argument("zeta: direct count requires concrete fibers");
  }
  for (const auto& fiber : y.fibers) {
    for (const auto& cp : fiber.branch_points) {
      ++glued_[cp.degree];
    }
  }
}

std::int64_t DirectCounter::closed_point_count(std::uint32_t t) const {
  auto it = census_.find(t);
  if (it != census_.end()) return it->second;
  std::int64_t value;
  if (y_.normalization.kind() == curve::CurveKind::ProjectiveLine) {
    // element census plus the rational point at infinity
    const gf::Field k = y_.normalization.extension_field(t, cap_);
    const auto census = kernels::element_degree_census(k);
    value = census[t - 1] / t + (t == 1 ? 1 : 0);
  } else {
    value = static_cast<std::int64_t>(
        curve::closed_points_of_degree(y_.normalization, t, cap_).size());
  }
  census_[t] = value;
  return value;
}

std::int64_t DirectCounter::count(std::uint32_t n) const {
  if (n == 0) throw std::invalid_argument("zeta: extension degree must be positive");
  std::int64_t total = 0;
  for (std::uint32_t t : gf::divisors(n)) {
    std::int64_t free_points = closed_point_count(t);
    auto it = glued_.find(t);
    if (it != glued_.end()) free_points -= it->second;
    total += static_cast<std::int64_t>(t) * free_points;
  }
  for (const auto& fiber : y_.fibers) {
    if (n % fiber.point_degree == 0) total += fiber.point_degree;
  }
  return total;
}

std::int64_t count_points_direct(const glue::SingularCurve& y, std::uint32_t n,
                                 std::uint64_t cap) {
  return DirectCounter(y, cap).count(n);
}

ExtremalityReport extremality_report(const glue::SingularCurve& y, std::uint32_t n_max,
                                     std::uint64_t cap) {
  const ZetaReport rep = count_points_singular(y, n_max, cap);
  ExtremalityReport out;
  out.delta = rep.delta;
  out.all_minus_one = rep.all_minus_one;
  out.all_plus_one = rep.all_plus_one;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    ExtremalityReport::Row row;
    row.n = n;
    row.count_c = rep.counts_c[n - 1];
    row.count_y = rep.counts_y[n - 1];
    row.lower = row.count_c - rep.delta;
    row.upper = row.count_c + rep.delta;
    row.hit_lower = row.count_y == row.lower;
    row.hit_upper = row.count_y == row.upper;
    out.rows.push_back(row);
  }
  if (rep.delta == 0) {
    out.note = "no singular contribution; bounds collapse to the smooth counts";
  } else if (rep.all_minus_one) {
    out.note = "all inverse roots equal -1: counts attain the upper bound for odd n "
               "and the lower bound for even n";
  } else if (rep.all_plus_one) {
    out.note = "all inverse roots equal +1: counts attain the lower bound for every n";
  } else {
    out.note = "mixed inverse roots: bounds are not attained in general";
  }
  return out;
}

}  // namespace zetaglue::zeta
