#ifndef ZETAGLUE_KERNELS_HPP
#define ZETAGLUE_KERNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaglue/curve.hpp"
#include "zetaglue/gf.hpp"

namespace zetaglue::kernels {

// Counting kernels. Each kernel has an OpenMP-parallel implementation and
// a *_serial reference twin that uses a deliberately naive algorithm; the
// test suite cross-checks them and bench/ times them. Results are
// deterministic regardless of thread count (integer reductions only; the
// singular witness is the minimum scan position).

struct PlaneCountResult {
  std::int64_t count = 0;
  bool singular_found = false;
  std::string singular_note;  // coordinates of the first singular point in scan order
};

/// Projective point count of a plane model over K, parallel over the
/// affine x-range. Per column the y-roots are counted exactly as
/// deg gcd(f, y^|K| - y); with check_smooth the gcd is extended by the
/// three partial derivatives (Jacobian criterion on K-points).
/// Throws std::domain_error when the model contains a coordinate line
/// (reducible input).
PlaneCountResult count_plane_points(const curve::CurveModel& c, const gf::Field& K,
                                    bool check_smooth);

/// Reference: evaluates every term at every (x, y) pair, then checks the
/// Jacobian at each point found.
PlaneCountResult count_plane_points_serial(const curve::CurveModel& c, const gf::Field& K,
                                           bool check_smooth);

/// census[d-1] = number of elements of K with minimal_degree d over F_q,
/// d = 1..m. Parallel over the element range, Frobenius applied via the
/// cached matrix.
std::vector<std::int64_t> element_degree_census(const gf::Field& K);

/// Reference: decides each degree by exponentiation (x^{q^d} == x).
std::vector<std::int64_t> element_degree_census_serial(const gf::Field& K);

/// Number of distinct roots in K of a univariate polynomial with
/// coefficients in K (constant first; trailing zeros allowed).
/// Exact: deg gcd(f, y^|K| - y). Returns -1 for the zero polynomial.
int count_univariate_roots(const std::vector<gf::FieldElement>& poly, const gf::Field& K);

}  // namespace zetaglue::kernels

#endif
