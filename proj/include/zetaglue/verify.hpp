#ifndef ZETAGLUE_VERIFY_HPP
#define ZETAGLUE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaglue/curve.hpp"
#include "zetaglue/gf.hpp"

namespace zetaglue::verify {

struct CaseResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  bool all_pass() const;
  std::size_t passed() const;
};

struct Options {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t n_glue = 3;    // maximal gluing depth
  std::uint32_t n_max = 6;     // extensions checked
  std::uint32_t seeds = 1000;  // randomized cases
  std::uint64_t base_seed = 0; // randomized cases use base_seed+1 .. base_seed+seeds
  std::uint64_t cap = gf::kDefaultFieldCap;
};

/// count_points_singular vs the direct combinatorial count, over the full
/// gluing of P^1 and every selective subset of {2..n_glue}.
SuiteResult run_oracle_suite(const Options& opt);

/// Structural vs coefficient test of the all-roots-(-1) characterization
/// over seeded random profiles (delta <= 8) plus an exhaustive scan of all
/// profiles with delta <= 3 and branch degrees <= 4.
SuiteResult run_lemma_e0_suite(const Options& opt);

/// Weil bounds and numerator round trips on a fixed set of smooth models.
SuiteResult run_weil_suite(const Options& opt);

/// Arithmetic-genus identities: fiber bookkeeping, the degree-2 closed
/// form, and thickening increments.
SuiteResult run_genus_suite(const Options& opt);

/// Degree-exactly-t censuses against the Moebius closed form, with the
/// telescoped per-degree expression (q^t - q^{t-1})/t printed alongside
/// as an exact fraction; the suite asserts only the Moebius form.
SuiteResult run_paper_formula_suite(const Options& opt);

/// Fixed plane models used across suites and tools.
curve::CurveModel cubic_f2();      // y^2 z + y z^2 = x^3 + x z^2 + z^3 over F_2
curve::CurveModel cubic_f3();      // y^2 z = x^3 - x z^2 over F_3
curve::CurveModel conic_f2();      // x^2 + y z over F_2 (rational)
curve::CurveModel hermitian_f4();  // x^3 = y^2 z + y z^2 over F_4 (maximal)

}  // namespace zetaglue::verify

#endif
