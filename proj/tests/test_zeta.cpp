#include <doctest.h>

#include <stdexcept>

#include "zetaglue/verify.hpp"
#include "zetaglue/zeta.hpp"

using namespace zetaglue;
using curve::CurveModel;

namespace {

glue::SingularFiber abstract_fiber(std::uint32_t d, std::vector<std::uint32_t> branches) {
  return glue::SingularFiber{d, std::move(branches), {}};
}

glue::SingularCurve profile(std::vector<glue::SingularFiber> fibers) {
  return glue::SingularCurve{CurveModel::projective_line(2, 1), std::move(fibers), {}};
}

}  // namespace

TEST_CASE("fiber factors") {
  CHECK(zeta::fiber_factor(abstract_fiber(1, {2})) == IntPolynomial::from_ints({1, 1}));
  CHECK(zeta::fiber_factor(abstract_fiber(1, {1, 1})) == IntPolynomial::from_ints({1, -1}));
  CHECK(zeta::fiber_factor(abstract_fiber(1, {3})) == IntPolynomial::from_ints({1, 1, 1}));
  CHECK(zeta::fiber_factor(abstract_fiber(2, {2, 2})) == IntPolynomial::from_ints({1, 0, -1}));
  CHECK(zeta::fiber_factor(abstract_fiber(2, {4})) == IntPolynomial::from_ints({1, 0, 1}));
  // unibranch fibers contribute nothing
  CHECK(zeta::fiber_factor(abstract_fiber(3, {3})) == IntPolynomial::one());
  // two conjugate pairs over one rational point: (1+t)(1-t^2)
  CHECK(zeta::fiber_factor(abstract_fiber(1, {2, 2})) ==
        IntPolynomial::from_ints({1, 1, -1, -1}));
}

TEST_CASE("singular factor has degree delta and constant term one") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const auto y = glue::random_profile(seed, 8);
    const auto f = zeta::singular_factor(y);
    CHECK(f.degree() == y.delta());
    CHECK(f.coeff(0) == BigInt{1});
    // divisibility: factor * prod (1 - t^{d_point}) = prod over branches (1 - t^{d_branch})
    IntPolynomial lhs = f;
    IntPolynomial rhs = IntPolynomial::one();
    for (const auto& fiber : y.fibers) {
      lhs *= IntPolynomial::one_minus_t_pow(fiber.point_degree);
      for (std::uint32_t d : fiber.branch_degrees) rhs *= IntPolynomial::one_minus_t_pow(d);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("root flags by exact binomial comparison") {
  CHECK(zeta::all_roots_minus_one(IntPolynomial::binomial_power(+1, 3)));
  CHECK(!zeta::all_roots_minus_one(IntPolynomial::from_ints({1, 1, 1})));
  CHECK(zeta::all_roots_plus_one(IntPolynomial::from_ints({1, -2, 1})));
  CHECK(!zeta::all_roots_plus_one(IntPolynomial::from_ints({1, 2, 1})));
  // degree zero: both vacuously true
  CHECK(zeta::all_roots_minus_one(IntPolynomial::one()));
  CHECK(zeta::all_roots_plus_one(IntPolynomial::one()));
  CHECK_THROWS_AS(zeta::all_roots_minus_one(IntPolynomial::from_ints({2, 1})),
                  std::invalid_argument);

  // the degree-2 gluing of P^1 has factor (1+t)^{(q^2-q)/2}
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto c = CurveModel::projective_line(p, e);
    const auto y = glue::build_glued_curve(c, 2);
    const auto f = zeta::singular_factor(y);
    const std::int64_t q = static_cast<std::int64_t>(c.q());
    CHECK(f.degree() == q * (q - 1) / 2);
    CHECK(zeta::all_roots_minus_one(f));
  }
}

TEST_CASE("structural and polynomial root criteria agree") {
  // shape cases
  CHECK(zeta::all_roots_minus_one_structural(profile({abstract_fiber(1, {2})})));
  CHECK(!zeta::all_roots_minus_one_structural(profile({abstract_fiber(1, {1, 1})})));
  CHECK(!zeta::all_roots_minus_one_structural(profile({abstract_fiber(2, {2, 2})})));
  CHECK(zeta::all_roots_minus_one_structural(profile({abstract_fiber(2, {2})})));
  CHECK(zeta::all_roots_minus_one_structural(profile({})));

  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const auto y = glue::random_profile(seed, 8);
    CHECK(zeta::all_roots_minus_one_structural(y) ==
          zeta::all_roots_minus_one(zeta::singular_factor(y)));
  }
}

TEST_CASE("counts of glued curves against frozen values") {
  const auto c = CurveModel::projective_line(2, 1);
  const auto y22 = glue::build_glued_curve(c, 2);
  const auto rep = zeta::count_points_singular(y22, 4);
  CHECK(rep.delta == 1);
  CHECK(rep.counts_c == std::vector<std::int64_t>{3, 5, 9, 17});
  CHECK(rep.counts_y == std::vector<std::int64_t>{4, 4, 10, 16});  // 2^n + 1 - (-1)^n
  CHECK(rep.all_minus_one);
  CHECK(!rep.all_plus_one);

  const auto y23 = glue::build_glued_curve(c, 3);
  CHECK(zeta::count_points_singular(y23, 1).counts_y == std::vector<std::int64_t>{6});

  // no fibers: counts coincide
  const glue::SingularCurve smooth{c, {}, {}};
  const auto rep2 = zeta::count_points_singular(smooth, 3);
  CHECK(rep2.counts_y == rep2.counts_c);
  CHECK(rep2.delta == 0);
  CHECK(rep2.all_minus_one);
  CHECK(rep2.all_plus_one);
}

TEST_CASE("direct counting from concrete fibers") {
  const auto c2 = CurveModel::projective_line(2, 1);
  const auto y22 = glue::build_glued_curve(c2, 2);
  CHECK(zeta::count_points_direct(y22, 1) == 4);
  CHECK(zeta::count_points_direct(y22, 2) == 4);  // five F_4-points, two glued into one

  const auto c3 = CurveModel::projective_line(3, 1);
  CHECK(zeta::count_points_direct(glue::build_glued_curve(c3, 2), 1) == 7);

  // no branch degree divides n: the fibers only add their rational points
  const auto only3 = glue::build_selective_glued_curve(c2, {3});
  CHECK(zeta::count_points_direct(only3, 1) == 3 + 2);
  CHECK(zeta::count_points_direct(only3, 2) == 5 + 2);

  // abstract fibers are rejected
  CHECK_THROWS_AS(zeta::count_points_direct(profile({abstract_fiber(1, {2})}), 1),
                  std::invalid_argument);
}

TEST_CASE("oracle equivalence across gluings and extensions") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto c = CurveModel::projective_line(p, e);
    const auto table = curve::count_points(c, 6);
    for (const auto& ts : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {2, 3}, {2, 4},
                                                                  {3, 4}, {2, 3, 4}}) {
      const auto y = glue::build_selective_glued_curve(c, ts);
      const auto rep = zeta::count_points_singular(y, table);
      const zeta::DirectCounter direct(y);
      for (std::uint32_t n = 1; n <= 6; ++n) {
        CHECK(rep.counts_y[n - 1] == direct.count(n));
        CHECK(std::llabs(rep.counts_y[n - 1] - rep.counts_c[n - 1]) <= rep.delta);
      }
    }
  }
  // a plane normalization as well
  const auto cubic = verify::cubic_f2();
  const auto table = curve::count_points(cubic, 6);
  const auto y = glue::build_glued_curve(cubic, 3);
  const auto rep = zeta::count_points_singular(y, table);
  const zeta::DirectCounter direct(y);
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(rep.counts_y[n - 1] == direct.count(n));
}

TEST_CASE("oracle equivalence for fibers over non-rational singular points") {
  // a degree-2 point of Y with two degree-2 branches, plus a unibranch
  // fiber on a degree-3 point: shapes the gluing constructors never emit
  // but the data model admits
  const auto c = CurveModel::projective_line(3, 1);
  const auto deg2 = curve::closed_points_of_degree(c, 2);
  const auto deg3 = curve::closed_points_of_degree(c, 3);
  REQUIRE(deg2.size() == 3);
  REQUIRE(deg3.size() >= 1);

  glue::SingularCurve y{c, {}, {}};
  y.fibers.push_back({2, {2, 2}, {deg2[0], deg2[1]}});
  y.fibers.push_back({3, {3}, {deg3[0]}});
  y.fibers.push_back({1, {2}, {deg2[2]}});
  glue::validate(y);

  const auto rep = zeta::count_points_singular(y, 6);
  const zeta::DirectCounter direct(y);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    CHECK(rep.counts_y[n - 1] == direct.count(n));
  }
  // the unibranch fiber is invisible; the others shift by their power sums:
  // p_1 = -1 (conjugate pair), p_2 = 2 + 1 (diagonal pair roots +-1, pair root -1)
  CHECK(rep.delta == 2 + 0 + 1);
  CHECK(rep.counts_y[0] == rep.counts_c[0] + 1);
  CHECK(rep.counts_y[1] == rep.counts_c[1] - 3);
}

TEST_CASE("negative counts are flagged as inconsistent") {
  // more +1-root fibers than rational points on P^1/F_2
  const auto y = profile({abstract_fiber(1, {1, 1}), abstract_fiber(1, {1, 1}),
                          abstract_fiber(1, {1, 1}), abstract_fiber(1, {1, 1})});
  CHECK_THROWS_AS(zeta::count_points_singular(y, 2), std::domain_error);
}

TEST_CASE("fiber factor division failure is reported") {
  // bypass validation to hit the arithmetic guard
  glue::SingularFiber bad;
  bad.point_degree = 2;
  bad.branch_degrees = {3};
  CHECK_THROWS(zeta::fiber_factor(bad));
}

TEST_CASE("thickenings shift the genus but never the counts") {
  const auto c = CurveModel::projective_line(3, 1);
  auto y = glue::build_glued_curve(c, 3);
  const auto before = zeta::count_points_singular(y, 6);
  const auto gd_before = glue::genus_and_delta(y);
  y.thickenings.push_back({2, 3, std::nullopt});
  y.thickenings.push_back({1, 1, std::nullopt});
  const auto after = zeta::count_points_singular(y, 6);
  const auto gd_after = glue::genus_and_delta(y);
  CHECK(after.counts_y == before.counts_y);
  CHECK(after.singular_factor == before.singular_factor);
  CHECK(gd_after.arithmetic_genus == gd_before.arithmetic_genus + 2 * 3 + 1 * 1);
  CHECK(gd_after.delta == gd_before.delta);
}

TEST_CASE("extremality report marks attained bounds") {
  const auto c = CurveModel::projective_line(2, 1);
  const auto rep = zeta::extremality_report(glue::build_glued_curve(c, 2), 6);
  CHECK(rep.delta == 1);
  CHECK(rep.all_minus_one);
  for (const auto& row : rep.rows) {
    CHECK(row.lower == row.count_c - rep.delta);
    CHECK(row.upper == row.count_c + rep.delta);
    CHECK(row.hit_upper == (row.n % 2 == 1));
    CHECK(row.hit_lower == (row.n % 2 == 0));
  }

  // all-plus-one profile: lower bound attained for every n
  const auto y = profile({abstract_fiber(1, {1, 1})});
  const auto rep2 = zeta::extremality_report(y, 5);
  CHECK(rep2.all_plus_one);
  for (const auto& row : rep2.rows) CHECK(row.hit_lower);

  // no fibers: bounds collapse
  const auto rep3 = zeta::extremality_report(glue::SingularCurve{c, {}, {}}, 3);
  CHECK(rep3.delta == 0);
  for (const auto& row : rep3.rows) {
    CHECK(row.hit_lower);
    CHECK(row.hit_upper);
  }
}

TEST_CASE("profile-level extremality of the rational-shift at fixed delta") {
  // among seminormal profiles with the same delta, only the all-conjugate-
  // pair profile raises the rational count by the full delta
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    glue::ProfileConstraints sn;
    sn.seminormal_only = true;
    const auto y = glue::random_profile(seed, 6, sn);
    if (y.fibers.empty()) continue;
    const auto f = zeta::singular_factor(y);
    const auto ps = power_sums(f, 1);
    const std::int64_t shift = (-ps[0]).to_int64();
    CHECK(shift <= y.delta());
    bool all_pairs = true;
    for (const auto& fiber : y.fibers) {
      if (!(fiber.point_degree == 1 &&
            fiber.branch_degrees == std::vector<std::uint32_t>{2})) {
        all_pairs = false;
      }
    }
    CHECK((shift == y.delta()) == all_pairs);
  }
}
