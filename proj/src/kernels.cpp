#include "zetaglue/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaglue::kernels {

namespace {

using curve::CurveModel;
using curve::PlaneTerm;
using gf::Field;
using gf::FieldElement;

// ---- univariate polynomials with coefficients in K (constant first) ----

using YPoly = std::vector<FieldElement>;

void ytrim(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int ydeg(const YPoly& f) { return static_cast<int>(f.size()) - 1; }

YPoly ymul(const YPoly& a, const YPoly& b, const Field& K) {
  if (a.empty() || b.empty()) return {};
  YPoly out(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  ytrim(out);
  return out;
}

YPoly ymod(YPoly a, const YPoly& b, const Field& K) {
  ytrim(a);
  const std::size_t db = b.size() - 1;
  const FieldElement binv = b.back().inverse();
  while (a.size() > db) {
    const FieldElement lead = a.back() * binv;
    const std::size_t shift = a.size() - 1 - db;
    if (!lead.is_zero()) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = a[shift + j] - lead * b[j];
      }
    }
    a.pop_back();
    ytrim(a);
    if (a.empty()) break;
  }
  return a;
}

YPoly ygcd(YPoly a, YPoly b, const Field& K) {
  ytrim(a);
  ytrim(b);
  while (!b.empty()) {
    YPoly r = ymod(std::move(a), b, K);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// y^exp mod f, square-and-multiply
YPoly ypow_y_mod(std::uint64_t exp, const YPoly& f, const Field& K) {
  YPoly acc{K.one()};
  YPoly sq{K.zero(), K.one()};  // y
  sq = ymod(std::move(sq), f, K);
  while (exp) {
    if (exp & 1) acc = ymod(ymul(acc, sq, K), f, K);
    exp >>= 1;
    if (exp) sq = ymod(ymul(sq, sq, K), f, K);
  }
  return acc;
}

// per-x evaluation context: terms of a dehomogenized polynomial grouped by
// the y-exponent, as (coef-residue, x-exponent) pairs
struct ColumnPoly {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_ydeg;
  std::uint32_t max_x_pow = 0;

  void add_terms(const std::vector<PlaneTerm>& terms) {
    for (const auto& t : terms) {
      if (t.ey >= by_ydeg.size()) by_ydeg.resize(t.ey + 1);
      by_ydeg[t.ey].emplace_back(t.coef, t.ex);
      max_x_pow = std::max(max_x_pow, t.ex);
    }
  }

  YPoly at(const std::vector<FieldElement>& x_powers, const Field& K) const {
    YPoly f(by_ydeg.size(), K.zero());
    for (std::size_t k = 0; k < by_ydeg.size(); ++k) {
      for (const auto& [coef, ex] : by_ydeg[k]) {
        f[k] = f[k] + K.from_residue(coef) * x_powers[ex];
      }
    }
    ytrim(f);
    return f;
  }
};

std::vector<PlaneTerm> partial_derivative(const std::vector<PlaneTerm>& terms, int var,
                                          std::uint32_t p) {
  std::vector<PlaneTerm> out;
  for (PlaneTerm t : terms) {
    std::uint32_t* exp = var == 0 ? &t.ex : var == 1 ? &t.ey : &t.ez;
    if (*exp == 0) continue;
    t.coef = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t.coef) * *exp) % p);
    if (t.coef == 0) continue;
    --*exp;
    out.push_back(t);
  }
  return out;
}

std::vector<PlaneTerm> dehomogenize_z1(const std::vector<PlaneTerm>& terms) {
  std::vector<PlaneTerm> out = terms;
  for (auto& t : out) t.ez = 0;
  return out;
}

FieldElement eval_terms(const std::vector<PlaneTerm>& terms, const FieldElement& x,
                        const FieldElement& y, const FieldElement& z, const Field& K) {
  FieldElement acc = K.zero();
  for (const auto& t : terms) {
    FieldElement v = K.from_residue(t.coef);
    v = v * x.pow(t.ex);
    v = v * y.pow(t.ey);
    v = v * z.pow(t.ez);
    acc = acc + v;
  }
  return acc;
}

std::string coord_note(const FieldElement& x, const FieldElement& y, const FieldElement& z) {
  auto fmt = [](const FieldElement& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v.coeffs()[i]);
    }
    return s + "]";
  };
  return "(" + fmt(x) + " : " + fmt(y) + " : " + fmt(z) + ")";
}

// infinity chart z = 0 shared by both kernels: points [x:1:0] and [1:0:0]
void count_infinity(const CurveModel& c, const Field& K, bool check_smooth,
                    PlaneCountResult& res) {
  const auto& terms = c.terms();
  std::vector<PlaneTerm> fx = partial_derivative(terms, 0, c.p());
  std::vector<PlaneTerm> fy = partial_derivative(terms, 1, c.p());
  std::vector<PlaneTerm> fz = partial_derivative(terms, 2, c.p());

  // F(x, 1, 0) identically zero means z divides F
  bool any_nonzero = false;
  for (const auto& t : terms) {
    if (t.ez == 0) {
      any_nonzero = true;
      break;
    }
  }
  if (!any_nonzero) {
    throw std::domain_error("curve: model is divisible by z (reducible input)");
  }

  const FieldElement zero = K.zero(), one = K.one();
  for (std::uint64_t i = 0; i < K.size(); ++i) {
    const FieldElement x = K.element_at(i);
    if (!eval_terms(terms, x, one, zero, K).is_zero()) continue;
    ++res.count;
    if (check_smooth && !res.singular_found && eval_terms(fx, x, one, zero, K).is_zero() &&
        eval_terms(fy, x, one, zero, K).is_zero() &&
        eval_terms(fz, x, one, zero, K).is_zero()) {
      res.singular_found = true;
      res.singular_note = coord_note(x, one, zero);
    }
  }
  if (eval_terms(terms, one, zero, zero, K).is_zero()) {
    ++res.count;
    if (check_smooth && !res.singular_found &&
        eval_terms(fx, one, zero, zero, K).is_zero() &&
        eval_terms(fy, one, zero, zero, K).is_zero() &&
        eval_terms(fz, one, zero, zero, K).is_zero()) {
      res.singular_found = true;
      res.singular_note = coord_note(one, zero, zero);
    }
  }
}

}  // namespace

int count_univariate_roots(const std::vector<FieldElement>& poly, const Field& K) {
  YPoly f = poly;
  ytrim(f);
  if (f.empty()) return -1;
  if (ydeg(f) == 0) return 0;
  YPoly yq = ypow_y_mod(K.size(), f, K);
  // y^|K| - y reduced mod f
  YPoly diff = std::move(yq);
  if (diff.size() < 2) diff.resize(2, K.zero());
  diff[1] = diff[1] - K.one();
  ytrim(diff);
  YPoly g = ygcd(f, std::move(diff), K);
  return ydeg(g) < 0 ? 0 : ydeg(g);
}

PlaneCountResult count_plane_points(const CurveModel& c, const Field& K, bool check_smooth) {
  if (c.kind() != curve::CurveKind::PlaneCurve) {
    throw std::invalid_argument("kernels: plane kernel requires a plane model");
  }
  const std::uint32_t p = c.p();
  ColumnPoly col_f, col_fx, col_fy, col_fz;
  col_f.add_terms(dehomogenize_z1(c.terms()));
  col_fx.add_terms(dehomogenize_z1(partial_derivative(c.terms(), 0, p)));
  col_fy.add_terms(dehomogenize_z1(partial_derivative(c.terms(), 1, p)));
  col_fz.add_terms(dehomogenize_z1(partial_derivative(c.terms(), 2, p)));
  const std::uint32_t max_pow = std::max({col_f.max_x_pow, col_fx.max_x_pow, col_fy.max_x_pow,
                                          col_fz.max_x_pow});

  const std::int64_t n = static_cast<std::int64_t>(K.size());
  std::int64_t total = 0;
  std::int64_t degenerate_at = -1;  // x-index of a vertical component, if any
  std::int64_t singular_at = -1;    // x-index of the first singular column
  std::vector<std::string> notes;   // per-thread singular coordinates
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::string local_note;
    std::int64_t local_singular = -1;
#ifdef _OPENMP
#pragma omp for reduction(+ : total) reduction(max : degenerate_at) schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      std::vector<FieldElement> xp;
      xp.reserve(max_pow + 1);
      xp.push_back(K.one());
      const FieldElement x = K.element_at(static_cast<std::uint64_t>(i));
      for (std::uint32_t k = 1; k <= max_pow; ++k) xp.push_back(xp.back() * x);

      YPoly f = col_f.at(xp, K);
      if (f.empty()) {
        degenerate_at = std::max(degenerate_at, i);
        continue;
      }
      const int roots = count_univariate_roots(f, K);
      total += roots;
      if (check_smooth && roots > 0) {
        YPoly g = ygcd(f, col_fx.at(xp, K), K);
        if (ydeg(g) >= 1) g = ygcd(std::move(g), col_fy.at(xp, K), K);
        if (ydeg(g) >= 1) g = ygcd(std::move(g), col_fz.at(xp, K), K);
        if (ydeg(g) >= 1 && count_univariate_roots(g, K) > 0 &&
            (local_singular < 0 || i < local_singular)) {
          local_singular = i;
          local_note = "affine column x index " + std::to_string(i);
        }
      }
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      if (local_singular >= 0 && (singular_at < 0 || local_singular < singular_at)) {
        singular_at = local_singular;
        notes.assign(1, local_note);
      }
    }
  }
  if (degenerate_at >= 0) {
    throw std::domain_error("curve: model vanishes on a vertical line (reducible input)");
  }
  PlaneCountResult res;
  res.count = total;
  if (singular_at >= 0) {
    res.singular_found = true;
    res.singular_note = notes.front();
  }
  count_infinity(c, K, check_smooth, res);
  return res;
}

PlaneCountResult count_plane_points_serial(const CurveModel& c, const Field& K,
                                           bool check_smooth) {
  if (c.kind() != curve::CurveKind::PlaneCurve) {
    throw std::invalid_argument("kernels: plane kernel requires a plane model");
  }
  const auto affine = dehomogenize_z1(c.terms());
  const auto fx = partial_derivative(c.terms(), 0, c.p());
  const auto fy = partial_derivative(c.terms(), 1, c.p());
  const auto fz = partial_derivative(c.terms(), 2, c.p());
  PlaneCountResult res;
  const FieldElement one = K.one();
  for (std::uint64_t i = 0; i < K.size(); ++i) {
    const FieldElement x = K.element_at(i);
    std::int64_t roots_in_column = 0;
    for (std::uint64_t j = 0; j < K.size(); ++j) {
      const FieldElement y = K.element_at(j);
      if (!eval_terms(affine, x, y, one, K).is_zero()) continue;
      ++roots_in_column;
      ++res.count;
      if (check_smooth && !res.singular_found && eval_terms(fx, x, y, one, K).is_zero() &&
          eval_terms(fy, x, y, one, K).is_zero() && eval_terms(fz, x, y, one, K).is_zero()) {
        res.singular_found = true;
        res.singular_note = coord_note(x, y, one);
      }
    }
    if (roots_in_column == static_cast<std::int64_t>(K.size())) {
      throw std::domain_error("curve: model vanishes on a vertical line (reducible input)");
    }
  }
  count_infinity(c, K, check_smooth, res);
  return res;
}

std::vector<std::int64_t> element_degree_census(const Field& K) {
  const std::uint32_t m = K.m();
  const std::int64_t n = static_cast<std::int64_t>(K.size());
  std::vector<std::int64_t> census(m, 0);
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::vector<std::int64_t> local(m, 0);
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      const FieldElement x = K.element_at(static_cast<std::uint64_t>(i));
      ++local[gf::minimal_degree(x) - 1];
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    for (std::uint32_t d = 0; d < m; ++d) census[d] += local[d];
  }
  return census;
}

std::vector<std::int64_t> element_degree_census_serial(const Field& K) {
  const std::uint32_t m = K.m();
  std::vector<std::int64_t> census(m, 0);
  const auto divs = gf::divisors(m);
  for (std::uint64_t i = 0; i < K.size(); ++i) {
    const FieldElement x = K.element_at(i);
    for (std::uint32_t d : divs) {
      std::uint64_t qd = 1;
      for (std::uint32_t k = 0; k < d; ++k) qd *= K.q();
      if (x.pow(qd) == x) {
        ++census[d - 1];
        break;
      }
    }
  }
  return census;
}

}  // namespace zetaglue::kernels
