// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every expected value is exact; no tolerances appear anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "zetaglue/curve.hpp"
#include "zetaglue/glue.hpp"
#include "zetaglue/verify.hpp"
#include "zetaglue/zeta.hpp"

using namespace zetaglue;
using curve::CurveModel;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s -- %s\n", number, pass ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::vector<std::vector<std::uint32_t>> subsets_234() {
  const std::uint32_t degrees[] = {2, 3, 4};
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    std::vector<std::uint32_t> ts;
    for (std::uint32_t i = 0; i < 3; ++i) {
      if (mask & (1u << i)) ts.push_back(degrees[i]);
    }
    out.push_back(std::move(ts));
  }
  return out;
}

// every n in 1..n_max: counts from the singular-factor route equal the
// direct combinatorial count
std::size_t check_oracle(const CurveModel& c, std::uint32_t n_max, bool& ok,
                         std::string& first_fail) {
  const auto table = curve::count_points(c, n_max);
  std::size_t cases = 0;
  std::vector<glue::SingularCurve> variants;
  for (std::uint32_t n = 2; n <= 4; ++n) variants.push_back(glue::build_glued_curve(c, n));
  for (const auto& ts : subsets_234()) {
    variants.push_back(glue::build_selective_glued_curve(c, ts));
  }
  for (const auto& y : variants) {
    const auto rep = zeta::count_points_singular(y, table);
    const zeta::DirectCounter direct(y);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      ++cases;
      if (rep.counts_y[n - 1] != direct.count(n)) {
        ok = false;
        if (first_fail.empty()) {
          first_fail = "q=" + std::to_string(c.q()) + " n=" + std::to_string(n);
        }
      }
    }
  }
  return cases;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string first_fail;
  std::size_t cases = 0;
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    cases += check_oracle(CurveModel::projective_line(p, e), 8, ok, first_fail);
  }
  cases += check_oracle(verify::cubic_f2(), 8, ok, first_fail);
  cases += check_oracle(verify::cubic_f3(), 7, ok, first_fail);
  cases += check_oracle(verify::conic_f2(), 8, ok, first_fail);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << cases << " (curve, gluing, n) cases over q in {2,3,4,5} (P^1, all gluings of "
         << "{2,3,4}, n <= 8) plus three plane normalizations; elapsed " << secs << " s";
  if (!first_fail.empty()) detail << "; first mismatch at " << first_fail;
  criterion(1, "zeta-route counts equal direct counts", ok && secs < 60.0, detail.str());
}

void criterion_2() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u},
                      {3u, 2u}}) {
    const CurveModel c = CurveModel::projective_line(p, e);
    const std::int64_t q = static_cast<std::int64_t>(c.q());
    const auto y = glue::build_glued_curve(c, 2);
    const auto rep = zeta::count_points_singular(y, 2);
    const auto gd = glue::genus_and_delta(y);
    const std::int64_t expected_count = q + 1 + q * (q - 1) / 2;
    const std::int64_t expected_pa = q * (q - 1) / 2;
    if (rep.counts_y[0] != expected_count || gd.arithmetic_genus != expected_pa) {
      ok = false;
      detail << " q=" << q << " MISMATCH;";
    }
  }
  detail << "q in {2,3,4,5,7,8,9}: #Y(F_q) = q+1+(q^2-q)/2 and p_a = (q^2-q)/2 exact";

  // depth >= 3: the per-degree census must match the Moebius closed form;
  // the telescoped expression from the closed form is reported, not asserted
  std::ostringstream report;
  for (std::uint32_t n : {3u, 4u}) {
    const CurveModel c = CurveModel::projective_line(2, 1);
    const auto y = glue::build_glued_curve(c, n);
    const auto rep = zeta::count_points_singular(y, 1);
    std::int64_t expected = 3;
    for (std::uint32_t t = 2; t <= n; ++t) expected += curve::p1_closed_point_count(2, t);
    if (rep.counts_y[0] != expected) ok = false;
    report << " depth " << n << ": count " << rep.counts_y[0] << " (moebius form " << expected
           << ")";
  }
  // the telescoped (q^t - q^(t-1))/t term is 4/3 at q=2, t=3: not integral
  report << "; telescoped term at q=2, t=3 is 4/3 (non-integral, reported only)";
  criterion(2, "degree-2 gluing closed form and moebius-corrected depths", ok,
            detail.str() + ";" + report.str());
}

void criterion_3() {
  verify::Options opt;
  opt.seeds = 1000;
  const auto suite = verify::run_lemma_e0_suite(opt);
  std::string detail;
  for (const auto& c : suite.cases) detail += c.name + ": " + c.detail + "; ";
  criterion(3, "structural and coefficient root-(-1) criteria agree", suite.all_pass(), detail);
}

void criterion_4() {
  bool ok = true;
  std::size_t models = 0;
  const std::vector<CurveModel> curves = {
      CurveModel::projective_line(2, 1), CurveModel::projective_line(3, 1),
      CurveModel::projective_line(2, 2), CurveModel::projective_line(5, 1),
      CurveModel::projective_line(7, 1), CurveModel::projective_line(2, 3),
      CurveModel::projective_line(3, 2), verify::cubic_f2(),  verify::cubic_f3(),
      verify::conic_f2(),                verify::hermitian_f4()};
  for (const auto& c : curves) {
    ++models;
    const auto table = curve::count_points(c, 2);
    const auto y = glue::build_glued_curve(c, 2);
    const auto rep = zeta::count_points_singular(y, table);
    const std::int64_t n1 = table.at(1), n2 = table.at(2);
    if ((n2 - n1) % 2 != 0) ok = false;
    if (rep.counts_y[0] != n1 + (n2 - n1) / 2) ok = false;
    if (zeta::count_points_direct(y, 1) != n1 + (n2 - n1) / 2) ok = false;
  }
  criterion(4, "gluing count equals N_1 + (N_2 - N_1)/2",
            ok, std::to_string(models) + " curve models, telescoped identity exact at depth 2");
}

void criterion_5() {
  bool ok = true;
  std::ostringstream detail;
  struct Expected {
    CurveModel model;
    const char* name;
    std::vector<std::int64_t> counts;  // derived from the numerator theory beforehand
  };
  const Expected entries[] = {
      {verify::cubic_f2(), "cubic/F_2", {1, 5, 13, 25, 41, 65}},
      {verify::cubic_f3(), "cubic/F_3", {4, 16, 28, 64, 244, 784}},
  };
  for (const auto& entry : entries) {
    const auto table = curve::count_points(entry.model, 6);
    const std::int64_t q = static_cast<std::int64_t>(entry.model.q());
    for (std::uint32_t i = 1; i <= 6; ++i) {
      std::int64_t qi = 1;
      for (std::uint32_t k = 0; k < i; ++k) qi *= q;
      const std::int64_t diff = table.at(i) - qi - 1;
      if (diff * diff > 4 * qi) ok = false;  // genus 1
    }
    if (table.counts != entry.counts) {
      ok = false;
      detail << entry.name << " counts differ from the frozen table; ";
    }
    // numerator from N_1 alone must reproduce N_2..N_6
    curve::PointCountTable n1_only;
    n1_only.q = table.q;
    n1_only.genus = 1;
    n1_only.counts = {table.at(1)};
    const auto z = curve::zeta_numerator_from_counts(n1_only, 1);
    if (curve::counts_from_numerator(z, 6) != table.counts) {
      ok = false;
      detail << entry.name << " numerator fails to reproduce N_2..N_6; ";
    }
  }
  detail << "both cubics: Weil bound (N_i - q^i - 1)^2 <= 4 q^i for i <= 6 and exact "
         << "series round trip from N_1";
  criterion(5, "Weil bounds and numerator round trip on smooth cubics", ok, detail.str());
}

void criterion_6() {
  bool ok = true;
  std::ostringstream detail;
  const CurveModel herm = verify::hermitian_f4();
  const auto table = curve::count_points(herm, 6);
  if (table.at(1) != 9) ok = false;  // q + 1 + 2 sqrt(q)
  const auto z = curve::zeta_numerator_from_counts(table, 1);
  if (curve::classify_extremality(z) != curve::Extremality::Maximal) ok = false;
  detail << "N_1 = " << table.at(1) << " = q+1+2*sqrt(q), flagged "
         << curve::to_string(curve::classify_extremality(z));

  // the maximal curve has minimal N_2 = N_1, so its depth-2 gluing is
  // empty: delta = 0 and the bounds are attained vacuously
  const auto y2 = glue::build_glued_curve(herm, 2);
  const auto rep2 = zeta::extremality_report(y2, table.n_max());
  if (rep2.delta != 0) ok = false;
  for (const auto& row : rep2.rows) {
    if (!(row.hit_upper && row.hit_lower && row.count_y == row.count_c)) ok = false;
  }
  detail << "; its own depth-2 gluing is empty (N_2 = N_1), bounds collapse";

  // non-vacuous bound attainment (all inverse roots -1) on a supersingular
  // non-maximal normalization over the same field: y^2 + y = x^3 + x
  const CurveModel ss = CurveModel::plane_curve(
      2, 2, {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 0, 1, 2}, {1, 1, 0, 2}});
  const auto yss = glue::build_glued_curve(ss, 2);
  const auto repss = zeta::extremality_report(yss, 6);
  if (!repss.all_minus_one || repss.delta == 0) ok = false;
  for (const auto& row : repss.rows) {
    if (row.hit_upper != (row.n % 2 == 1)) ok = false;
    if (row.hit_lower != (row.n % 2 == 0)) ok = false;
  }
  detail << "; depth-2 gluing of y^2+y = x^3+x /F_4 (delta " << repss.delta
         << ") attains N_n+delta at odd n and N_n-delta at even n";

  // odd-degree-only gluing: the constituent counts sit at their Weil
  // extremes and no other elliptic normalization in the swept family
  // reaches the same glued count
  const std::int64_t n1 = table.at(1), n3 = table.at(3);
  if (n1 != 4 + 1 + 4 || n3 != 64 + 1 + 16) ok = false;
  const auto y3 = glue::build_selective_glued_curve(herm, {3});
  const auto rep3 = zeta::count_points_singular(y3, table);
  const std::int64_t glued = rep3.counts_y[0];
  if (glued != n1 + (n3 - n1) / 3) ok = false;
  if (zeta::count_points_direct(y3, 1) != glued) ok = false;
  detail << "; odd-orbit gluing count " << glued << " with N_1, N_3 at the Weil maxima";

  // sweep of smooth cubics with subfield coefficients over F_4
  const std::vector<std::vector<curve::PlaneTerm>> family = {
      {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 0, 1, 2}, {1, 2, 0, 1}},              // + x^2 z
      {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 0, 1, 2}, {1, 1, 0, 2}},              // + x z^2
      {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 0, 1, 2}, {1, 0, 0, 3}},              // + z^3
      {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 1, 1, 1}, {1, 0, 0, 3}},              // ordinary, + xyz
      {{1, 3, 0, 0}, {1, 0, 2, 1}, {1, 1, 1, 1}, {1, 1, 0, 2}, {1, 0, 0, 3}},
  };
  std::size_t maximal_ties = 0, strictly_below = 0;
  bool dominance = true;
  for (const auto& terms : family) {
    CurveModel c = CurveModel::plane_curve(2, 2, terms);
    curve::PointCountTable t;
    try {
      t = curve::count_points(c, 3);
    } catch (const std::exception&) {
      continue;  // singular member of the family
    }
    const std::int64_t other = t.at(1) + (t.at(3) - t.at(1)) / 3;
    const auto zc = curve::zeta_numerator_from_counts(t, 1);
    const bool is_max = curve::classify_extremality(zc) == curve::Extremality::Maximal;
    if (is_max) {
      ++maximal_ties;
      if (other != glued) dominance = false;
    } else {
      ++strictly_below;
      if (other >= glued) dominance = false;
    }
  }
  if (maximal_ties == 0 || strictly_below == 0) dominance = false;
  ok = ok && dominance;
  detail << "; odd-orbit gluing count over the swept F_4 family: " << maximal_ties
         << " maximal member(s) tie, " << strictly_below << " others strictly below";
  criterion(6, "maximal curve detection and bound attainment", ok, detail.str());
}

void criterion_7() {
  // all seminormal profiles with delta exactly d, for d <= 3: enumerate
  // fiber types (geometric size >= 2, contribution <= 3), then multisets
  bool ok = true;
  std::size_t profiles_checked = 0;
  std::vector<glue::SingularFiber> types;
  for (std::uint32_t dp = 1; dp <= 3; ++dp) {
    // branch multisets of multiples of dp with sum - dp <= 3 and >= dp
    std::vector<std::vector<std::uint32_t>> stack{{}};
    while (!stack.empty()) {
      auto cur = std::move(stack.back());
      stack.pop_back();
      const std::int64_t sum = std::accumulate(cur.begin(), cur.end(), std::int64_t{0});
      if (sum - dp >= static_cast<std::int64_t>(dp) && sum - dp <= 3) {
        // geometric size >= 2 is sum >= 2 dp, i.e. contribution >= dp
        glue::SingularFiber f;
        f.point_degree = dp;
        f.branch_degrees = cur;
        types.push_back(std::move(f));
      }
      const std::uint32_t lo = cur.empty() ? dp : cur.back();
      for (std::uint32_t d = lo; sum + d - dp <= 3; d += dp) {
        auto next = cur;
        next.push_back(d);
        stack.push_back(std::move(next));
      }
    }
  }
  const CurveModel c = CurveModel::projective_line(5, 1);
  const auto table = curve::count_points(c, 1);
  const std::int64_t n1 = table.at(1);
  for (std::int64_t delta = 1; delta <= 3; ++delta) {
    std::vector<glue::SingularFiber> current;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (left == 0) {
        ++profiles_checked;
        glue::SingularCurve y{c, current, {}};
        const auto rep = zeta::count_points_singular(y, table);
        const std::int64_t count = rep.counts_y[0];
        if (count > n1 + delta) ok = false;
        bool all_pairs = !current.empty();
        for (const auto& f : current) {
          if (!(f.point_degree == 1 && f.branch_degrees == std::vector<std::uint32_t>{2})) {
            all_pairs = false;
          }
        }
        if ((count == n1 + delta) != all_pairs) ok = false;
        return;
      }
      if (i == types.size()) return;
      rec(i + 1, left);
      const std::int64_t contribution = types[i].delta();
      std::int64_t used = 0;
      while (used + contribution <= left) {
        used += contribution;
        current.push_back(types[i]);
        rec(i + 1, left - used);
      }
      for (std::int64_t k = 0; k < used / contribution; ++k) current.pop_back();
    };
    rec(0, delta);
  }
  criterion(7, "profile-level extremality at fixed delta", ok,
            std::to_string(profiles_checked) +
                " seminormal profiles with delta in {1,2,3}: counts_Y[1] <= N_1 + delta, "
                "equality exactly for the all-conjugate-pair profile");
}

void criterion_8() {
  bool ok = true;
  std::size_t curves = 0;
  struct Entry {
    glue::SingularCurve y;
    std::uint32_t n_max;
  };
  std::vector<Entry> entries;
  entries.push_back({glue::build_glued_curve(CurveModel::projective_line(2, 1), 2), 8});
  entries.push_back({glue::build_glued_curve(CurveModel::projective_line(3, 1), 3), 8});
  entries.push_back({glue::build_glued_curve(verify::cubic_f2(), 2), 8});
  for (auto& [y, n_max] : entries) {
    ++curves;
    const auto before = zeta::count_points_singular(y, n_max);
    const auto gd_before = glue::genus_and_delta(y);
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> added = {{1, 1}, {2, 3}, {3, 2}};
    std::int64_t shift = 0;
    for (auto [d, inc] : added) {
      y.thickenings.push_back({d, inc, std::nullopt});
      shift += static_cast<std::int64_t>(d) * inc;
    }
    const auto after = zeta::count_points_singular(y, n_max);
    const auto gd_after = glue::genus_and_delta(y);
    if (gd_after.arithmetic_genus != gd_before.arithmetic_genus + shift) ok = false;
    if (gd_after.delta != gd_before.delta) ok = false;
    if (after.counts_y != before.counts_y) ok = false;
    if (after.singular_factor != before.singular_factor) ok = false;
  }
  criterion(8, "thickenings shift p_a by sum(degree*y) and never the counts", ok,
            std::to_string(curves) + " glued curves, count tables over n <= 8 unchanged");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("SUMMARY: all 8 criteria passed\n");
  } else {
    std::printf("SUMMARY: %d criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
