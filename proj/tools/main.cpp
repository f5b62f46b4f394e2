// zetaglue command line: construct glued curves over finite fields, emit
// count/zeta/genus tables, run the verification suites, census closed
// points. Exit codes: 0 success, 1 verification failure, 2 usage or input
// error. All output is deterministic for a fixed input and configuration.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zetaglue/curve.hpp"
#include "zetaglue/glue.hpp"
#include "zetaglue/json_io.hpp"
#include "zetaglue/kernels.hpp"
#include "zetaglue/verify.hpp"
#include "zetaglue/zeta.hpp"

namespace {

using zetaglue::io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CurveSpec {
  bool p1 = false;
  std::string curve_file;
  std::uint32_t p = 2;
  std::uint32_t e = 1;
};

zetaglue::curve::CurveModel load_curve(const CurveSpec& spec) {
  if (spec.p1 == !spec.curve_file.empty()) {
    throw std::invalid_argument("exactly one of --p1 and --curve must be given");
  }
  if (spec.p1) {
    return zetaglue::curve::CurveModel::projective_line(spec.p, spec.e);
  }
  std::ifstream in(spec.curve_file);
  if (!in) throw std::invalid_argument("cannot open '" + spec.curve_file + "'");
  json j;
  in >> j;
  return zetaglue::io::curve_from_json(j);
}

json load_json(const std::string& path) {
  json j;
  if (path == "-") {
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << j.dump(2) << "\n";
}

std::vector<std::uint32_t> parse_select(const std::string& select) {
  std::vector<std::uint32_t> ts;
  std::stringstream ss(select);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ts.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return ts;
}

// fixed column order, one row per extension; lines starting with '#'
// carry the scalars
void print_table_text(const zetaglue::zeta::ZetaReport& rep, std::int64_t p_a,
                      const std::vector<std::int64_t>* oracle, char sep) {
  std::cout << "# delta" << sep << rep.delta << "\n";
  std::cout << "# p_a" << sep << p_a << "\n";
  std::cout << "# singular_factor" << sep << rep.singular_factor.to_string() << "\n";
  std::cout << "# all_minus_one" << sep << (rep.all_minus_one ? "true" : "false") << "\n";
  std::cout << "# all_plus_one" << sep << (rep.all_plus_one ? "true" : "false") << "\n";
  std::cout << "n" << sep << "count_C" << sep << "count_Y";
  if (oracle) std::cout << sep << "direct";
  std::cout << "\n";
  for (std::size_t i = 0; i < rep.counts_y.size(); ++i) {
    std::cout << (i + 1) << sep << rep.counts_c[i] << sep << rep.counts_y[i];
    if (oracle) std::cout << sep << (*oracle)[i];
    std::cout << "\n";
  }
}

int run_verify_suite(const std::string& name, const zetaglue::verify::Options& opt) {
  zetaglue::verify::SuiteResult result;
  if (name == "oracle") {
    result = zetaglue::verify::run_oracle_suite(opt);
  } else if (name == "lemma-e0") {
    result = zetaglue::verify::run_lemma_e0_suite(opt);
  } else if (name == "weil") {
    result = zetaglue::verify::run_weil_suite(opt);
  } else if (name == "genus") {
    result = zetaglue::verify::run_genus_suite(opt);
  } else if (name == "paper-formula") {
    result = zetaglue::verify::run_paper_formula_suite(opt);
  } else {
    std::cerr << "unknown suite '" << name
              << "' (available: oracle, lemma-e0, weil, genus, paper-formula)\n";
    return kExitUsage;
  }
  for (const auto& c : result.cases) {
    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    std::cout << "\n";
  }
  std::cout << result.suite << ": " << result.passed() << "/" << result.cases.size()
            << " cases passed\n";
  return result.all_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singular curves over finite fields: gluing, point counts, zeta factors"};
  app.require_subcommand(1);

  CurveSpec spec;
  std::uint64_t cap = zetaglue::gf::kDefaultFieldCap;
  std::uint32_t n_glue = 0;
  std::string select;
  std::string out_path;
  std::string input_path = "-";
  std::uint32_t n_max = 6;
  std::string format = "json";
  bool oracle = false;
  std::uint32_t seeds = 1000;
  std::uint64_t base_seed = 0;
  std::string suite;
  std::uint32_t census_t = 0, census_tmax = 0;

  auto add_curve_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--p1", spec.p1, "normalization is the projective line");
    cmd->add_option("--curve", spec.curve_file, "curve model JSON file");
    cmd->add_option("--p", spec.p, "characteristic");
    cmd->add_option("--e", spec.e, "base field is F_{p^e}");
  };

  CLI::App* construct = app.add_subcommand(
      "construct", "glue Frobenius orbits of the normalization into rational points");
  add_curve_flags(construct);
  construct->add_option("--n", n_glue, "glue every orbit of size 2..n");
  construct->add_option("--select", select, "comma list of orbit sizes to glue, e.g. 2,4");
  construct->add_option("--cap", cap, "field size cap");
  construct->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* table = app.add_subcommand(
      "table", "count/genus/zeta table of a glued curve (JSON file or - for stdin)");
  table->add_option("input", input_path, "singular curve JSON");
  table->add_option("--nmax", n_max, "extensions 1..nmax");
  table->add_option("--format", format, "json, csv or tsv")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));
  table->add_flag("--oracle", oracle, "cross-check against the direct combinatorial count");
  table->add_option("--cap", cap, "field size cap");

  CLI::App* zeta_cmd = app.add_subcommand(
      "zeta", "counts, zeta numerator and extremality of a smooth curve model");
  add_curve_flags(zeta_cmd);
  zeta_cmd->add_option("--nmax", n_max, "extensions 1..nmax");
  zeta_cmd->add_option("--cap", cap, "field size cap");
  zeta_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* census = app.add_subcommand("census", "closed-point census per degree");
  add_curve_flags(census);
  census->add_option("--t", census_t, "single degree");
  census->add_option("--tmax", census_tmax, "degrees 1..tmax");
  census->add_option("--cap", cap, "field size cap");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite: oracle, lemma-e0, weil, genus, paper-formula");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--p", spec.p, "characteristic");
  verify_cmd->add_option("--e", spec.e, "base field is F_{p^e}");
  verify_cmd->add_option("--n", n_glue, "maximal gluing depth");
  verify_cmd->add_option("--nmax", n_max, "extensions checked");
  verify_cmd->add_option("--seeds", seeds, "randomized cases");
  verify_cmd->add_option("--seed", base_seed, "base seed for randomized cases");
  verify_cmd->add_option("--cap", cap, "field size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const auto model = load_curve(spec);
      zetaglue::glue::SingularCurve y = [&] {
        if (!select.empty()) {
          return zetaglue::glue::build_selective_glued_curve(model, parse_select(select), cap);
        }
        if (n_glue == 0) {
          throw std::invalid_argument("construct needs --n or --select");
        }
        return zetaglue::glue::build_glued_curve(model, n_glue, cap);
      }();
      emit(zetaglue::io::singular_curve_to_json(y), out_path);
      return kExitOk;
    }

    if (table->parsed()) {
      const auto y = zetaglue::io::singular_curve_from_json(load_json(input_path), cap);
      const auto rep = zetaglue::zeta::count_points_singular(y, n_max, cap);
      const auto gd = zetaglue::glue::genus_and_delta(y);
      std::vector<std::int64_t> direct_counts;
      const std::vector<std::int64_t>* oracle_ptr = nullptr;
      if (oracle) {
        zetaglue::zeta::DirectCounter direct(y, cap);
        for (std::uint32_t n = 1; n <= n_max; ++n) direct_counts.push_back(direct.count(n));
        oracle_ptr = &direct_counts;
      }
      if (format == "json") {
        json j = zetaglue::io::zeta_report_to_json(rep);
        j["p_a"] = gd.arithmetic_genus;
        if (oracle_ptr) j["counts_direct"] = direct_counts;
        emit(j, "");
      } else {
        print_table_text(rep, gd.arithmetic_genus, oracle_ptr, format == "csv" ? ',' : '\t');
      }
      if (oracle_ptr && direct_counts != rep.counts_y) {
        std::cerr << "oracle mismatch: direct counts differ from the zeta route\n";
        return kExitVerifyFail;
      }
      return kExitOk;
    }

    if (zeta_cmd->parsed()) {
      const auto model = load_curve(spec);
      const auto counts = zetaglue::curve::count_points(model, n_max, cap);
      const auto z = zetaglue::curve::zeta_numerator_from_counts(counts, model.genus());
      json j;
      j["curve"] = zetaglue::io::curve_to_json(model);
      j["counts"] = zetaglue::io::count_table_to_json(counts);
      j["numerator"] = zetaglue::io::numerator_to_json(z);
      j["extremality"] = zetaglue::curve::to_string(zetaglue::curve::classify_extremality(z));
      emit(j, out_path);
      return kExitOk;
    }

    if (census->parsed()) {
      const auto model = load_curve(spec);
      if ((census_t == 0) == (census_tmax == 0)) {
        throw std::invalid_argument("census needs exactly one of --t and --tmax");
      }
      const std::uint32_t lo = census_t ? census_t : 1;
      const std::uint32_t hi = census_t ? census_t : census_tmax;
      std::cout << "t\tclosed_points";
      const bool is_p1 = model.kind() == zetaglue::curve::CurveKind::ProjectiveLine;
      if (is_p1) std::cout << "\tmoebius_form\tmatch";
      std::cout << "\n";
      bool all_match = true;
      for (std::uint32_t t = lo; t <= hi; ++t) {
        const auto pts = zetaglue::curve::closed_points_of_degree(model, t, cap);
        std::cout << t << "\t" << pts.size();
        if (is_p1) {
          const std::int64_t mf = zetaglue::curve::p1_closed_point_count(model.q(), t);
          const bool match = mf == static_cast<std::int64_t>(pts.size());
          all_match = all_match && match;
          std::cout << "\t" << mf << "\t" << (match ? "yes" : "NO");
        }
        std::cout << "\n";
      }
      return all_match ? kExitOk : kExitVerifyFail;
    }

    if (verify_cmd->parsed()) {
      zetaglue::verify::Options opt;
      opt.p = spec.p;
      opt.e = spec.e;
      if (n_glue) opt.n_glue = n_glue;
      opt.n_max = n_max;
      opt.seeds = seeds;
      opt.base_seed = base_seed;
      opt.cap = cap;
      return run_verify_suite(suite, opt);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
