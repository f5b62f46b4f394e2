#include "zetaglue/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zetaglue/kernels.hpp"

namespace zetaglue::curve {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) {
    if (r > (std::uint64_t{1} << 62) / base) {
      throw std::overflow_error("curve: power exceeds 64-bit range");
    }
    r *= base;
  }
  return r;
}

void check_extension_cap(const CurveModel& c, std::uint32_t i, std::uint64_t cap) {
  std::uint64_t s = 1;
  for (std::uint32_t k = 0; k < i; ++k) {
    if (s > cap / c.q()) {
      throw gf::CapExceeded("curve: F_{q^" + std::to_string(i) + "} with q = " +
                            std::to_string(c.q()) + " exceeds the cap " + std::to_string(cap));
    }
    s *= c.q();
  }
}

GeometricPoint normalize_plane(const gf::FieldElement& x, const gf::FieldElement& y,
                               const gf::FieldElement& z) {
  // first nonzero coordinate scaled to 1
  if (!x.is_zero()) {
    const gf::FieldElement inv = x.inverse();
    return GeometricPoint{{x * inv, y * inv, z * inv}};
  }
  if (!y.is_zero()) {
    const gf::FieldElement inv = y.inverse();
    return GeometricPoint{{x, y * inv, z * inv}};
  }
  return GeometricPoint{{x, y, z.inverse() * z}};
}

}  // namespace

CurveModel CurveModel::projective_line(std::uint32_t p, std::uint32_t e) {
  gf::Field base = gf::Field::make(p, e, 1);  // validates p, e
  CurveModel c;
  c.kind_ = CurveKind::ProjectiveLine;
  c.p_ = p;
  c.e_ = e;
  c.q_ = base.size();
  c.degree_ = 0;
  c.genus_ = 0;
  return c;
}

CurveModel CurveModel::plane_curve(std::uint32_t p, std::uint32_t e,
                                   std::vector<PlaneTerm> terms) {
  gf::Field base = gf::Field::make(p, e, 1);
  // canonicalize: reduce mod p, merge equal monomials, drop zeros, sort
  std::sort(terms.begin(), terms.end(), [](const PlaneTerm& a, const PlaneTerm& b) {
    return std::tie(a.ex, a.ey, a.ez) < std::tie(b.ex, b.ey, b.ez);
  });
  std::vector<PlaneTerm> merged;
  for (const PlaneTerm& t : terms) {
    if (!merged.empty() && merged.back().ex == t.ex && merged.back().ey == t.ey &&
        merged.back().ez == t.ez) {
      merged.back().coef = (merged.back().coef + t.coef) % p;
    } else {
      PlaneTerm r = t;
      r.coef %= p;
      merged.push_back(r);
    }
  }
  std::erase_if(merged, [](const PlaneTerm& t) { return t.coef == 0; });
  if (merged.empty()) throw std::invalid_argument("curve: plane model is the zero polynomial");
  const std::uint32_t d = merged.front().ex + merged.front().ey + merged.front().ez;
  for (const PlaneTerm& t : merged) {
    if (t.ex + t.ey + t.ez != d) {
      throw std::invalid_argument("curve: plane model is not homogeneous");
    }
  }
  if (d == 0) throw std::invalid_argument("curve: plane model must have positive degree");
  CurveModel c;
  c.kind_ = CurveKind::PlaneCurve;
  c.p_ = p;
  c.e_ = e;
  c.q_ = base.size();
  c.degree_ = d;
  c.genus_ = (d - 1) * (d - 2) / 2;
  c.terms_ = std::move(merged);
  return c;
}

gf::Field CurveModel::extension_field(std::uint32_t i, std::uint64_t cap) const {
  return gf::Field::make(p_, e_, i, cap);
}

GeometricPoint frobenius_q(const GeometricPoint& pt) {
  GeometricPoint out;
  out.coords.reserve(pt.coords.size());
  for (const auto& c : pt.coords) out.coords.push_back(gf::frobenius_q(c));
  return out;
}

std::uint32_t point_degree(const GeometricPoint& pt) {
  std::uint32_t d = 1;
  for (const auto& c : pt.coords) d = std::lcm(d, gf::minimal_degree(c));
  return d;
}

PointKey point_key(const GeometricPoint& pt) {
  const auto& c = pt.coords;
  if (c.size() == 2) {  // projective line: [a : 1] or [1 : 0]
    if (!c[1].is_zero()) return PointKey{0, c[0].index(), 0};
    return PointKey{1, 0, 0};
  }
  if (!c[2].is_zero()) {
    const gf::FieldElement zi = c[2].inverse();
    return PointKey{0, (c[0] * zi).index(), (c[1] * zi).index()};
  }
  if (!c[1].is_zero()) {
    const gf::FieldElement yi = c[1].inverse();
    return PointKey{1, (c[0] * yi).index(), 0};
  }
  return PointKey{2, 0, 0};
}

std::vector<GeometricPoint> enumerate_points(const CurveModel& c, std::uint32_t i,
                                             std::uint64_t cap) {
  const gf::Field K = c.extension_field(i, cap);
  std::vector<GeometricPoint> out;
  if (c.kind() == CurveKind::ProjectiveLine) {
    out.reserve(static_cast<std::size_t>(K.size()) + 1);
    const gf::FieldElement one = K.one();
    for (std::uint64_t idx = 0; idx < K.size(); ++idx) {
      out.push_back(GeometricPoint{{K.element_at(idx), one}});
    }
    out.push_back(GeometricPoint{{one, K.zero()}});
    return out;
  }

  const gf::FieldElement one = K.one(), zero = K.zero();
  // affine chart z = 1, column by column; root count first so the y-scan
  // can stop early
  for (std::uint64_t xi = 0; xi < K.size(); ++xi) {
    const gf::FieldElement x = K.element_at(xi);
    std::vector<gf::FieldElement> col;
    {
      std::uint32_t dy = 0;
      for (const auto& t : c.terms()) dy = std::max(dy, t.ey);
      col.assign(dy + 1, zero);
      for (const auto& t : c.terms()) {
        col[t.ey] = col[t.ey] + K.from_residue(t.coef) * x.pow(t.ex);
      }
      while (!col.empty() && col.back().is_zero()) col.pop_back();
    }
    if (col.empty()) {
      throw std::domain_error("curve: model vanishes on a vertical line (reducible input)");
    }
    int remaining = kernels::count_univariate_roots(col, K);
    for (std::uint64_t yi = 0; remaining > 0 && yi < K.size(); ++yi) {
      const gf::FieldElement y = K.element_at(yi);
      // Horner
      gf::FieldElement v = col.back();
      for (std::size_t k = col.size() - 1; k-- > 0;) v = v * y + col[k];
      if (v.is_zero()) {
        out.push_back(normalize_plane(x, y, one));
        --remaining;
      }
    }
  }
  // points at infinity: [x : 1 : 0] then [1 : 0 : 0]
  for (std::uint64_t xi = 0; xi < K.size(); ++xi) {
    const gf::FieldElement x = K.element_at(xi);
    gf::FieldElement v = zero;
    for (const auto& t : c.terms()) {
      if (t.ez == 0) v = v + K.from_residue(t.coef) * x.pow(t.ex);
    }
    if (v.is_zero()) out.push_back(normalize_plane(x, one, zero));
  }
  bool top = false;
  for (const auto& t : c.terms()) {
    if (t.ex == c.plane_degree()) top = true;
  }
  if (!top) out.push_back(normalize_plane(one, zero, zero));
  return out;
}

bool weil_bound_ok(std::uint64_t q, std::uint32_t genus, std::uint32_t i, std::int64_t n_i) {
  const std::int64_t qi = static_cast<std::int64_t>(ipow(q, i));
  const std::int64_t diff = n_i - qi - 1;
  return diff * diff <= 4 * static_cast<std::int64_t>(genus) * genus * qi;
}

PointCountTable count_points(const CurveModel& c, std::uint32_t n_max, std::uint64_t cap) {
  if (n_max == 0) throw std::invalid_argument("curve: n_max must be positive");
  PointCountTable table;
  table.q = c.q();
  table.genus = c.genus();
  for (std::uint32_t i = 1; i <= n_max; ++i) {
    check_extension_cap(c, i, cap);
    std::int64_t n_i;
    if (c.kind() == CurveKind::ProjectiveLine) {
      n_i = static_cast<std::int64_t>(ipow(c.q(), i)) + 1;
    } else {
      const gf::Field K = c.extension_field(i, cap);
      kernels::PlaneCountResult r = kernels::count_plane_points(c, K, /*check_smooth=*/true);
      if (r.singular_found) {
        throw std::domain_error("curve: model is singular over F_{q^" + std::to_string(i) +
                                "} at " + r.singular_note);
      }
      n_i = r.count;
    }
    if (!weil_bound_ok(c.q(), c.genus(), i, n_i)) {
      throw std::domain_error("curve: Weil bound violated at i = " + std::to_string(i) +
                              " (N = " + std::to_string(n_i) +
                              "); the model is not smooth and geometrically integral");
    }
    table.counts.push_back(n_i);
  }
  return table;
}

std::int64_t p1_closed_point_count(std::uint64_t q, std::uint32_t t) {
  if (t == 1) return static_cast<std::int64_t>(q) + 1;
  std::int64_t acc = 0;
  for (std::uint32_t d : gf::divisors(t)) {
    acc += gf::mobius(t / d) * static_cast<std::int64_t>(ipow(q, d));
  }
  return acc / static_cast<std::int64_t>(t);
}

std::vector<ClosedPoint> closed_points_of_degree(const CurveModel& c, std::uint32_t t,
                                                 std::uint64_t cap) {
  if (t == 0) throw std::invalid_argument("curve: degree must be positive");
  std::vector<ClosedPoint> out;

  if (c.kind() == CurveKind::ProjectiveLine) {
    const gf::Field K = c.extension_field(t, cap);
    const gf::FieldElement one = K.one();
    for (std::uint64_t idx = 0; idx < K.size(); ++idx) {
      const gf::FieldElement a = K.element_at(idx);
      if (gf::minimal_degree(a) != t) continue;
      // canonical orbit representative: smallest element index in the orbit
      bool canonical = true;
      gf::FieldElement b = gf::frobenius_q(a);
      for (std::uint32_t k = 1; k < t; ++k, b = gf::frobenius_q(b)) {
        if (b.index() < idx) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      ClosedPoint cp;
      cp.degree = t;
      cp.index = out.size();
      cp.rep = GeometricPoint{{a, one}};
      out.push_back(std::move(cp));
    }
    if (t == 1) {
      ClosedPoint inf;
      inf.degree = 1;
      inf.index = out.size();
      inf.rep = GeometricPoint{{one, K.zero()}};
      out.push_back(std::move(inf));
    }
    return out;
  }

  for (const GeometricPoint& pt : enumerate_points(c, t, cap)) {
    if (point_degree(pt) != t) continue;
    const PointKey self = point_key(pt);
    bool canonical = true;
    GeometricPoint b = frobenius_q(pt);
    for (std::uint32_t k = 1; k < t; ++k, b = frobenius_q(b)) {
      if (point_key(b) < self) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    ClosedPoint cp;
    cp.degree = t;
    cp.index = out.size();
    cp.rep = pt;
    out.push_back(std::move(cp));
  }
  return out;
}

ZetaNumerator zeta_numerator_from_counts(const PointCountTable& table, std::uint32_t genus) {
  const std::uint64_t q = table.q;
  ZetaNumerator z;
  z.genus = genus;
  z.q = q;
  if (genus == 0) {
    z.poly = IntPolynomial::one();
  } else {
    if (table.counts.size() < genus) {
      throw std::invalid_argument("curve: need N_1..N_g to recover the numerator");
    }
    // power sums s_n = q^n + 1 - N_n of the inverse roots
    std::vector<BigInt> s(genus + 1, BigInt{});
    for (std::uint32_t n = 1; n <= genus; ++n) {
      s[n] = BigInt{static_cast<long long>(ipow(q, n))} + BigInt{1} -
             BigInt{table.counts[n - 1]};
    }
    std::vector<BigInt> a(2 * genus + 1, BigInt{});
    a[0] = BigInt{1};
    for (std::uint32_t n = 1; n <= genus; ++n) {
      BigInt acc;
      for (std::uint32_t k = 1; k <= n; ++k) acc += s[k] * a[n - k];
      try {
        a[n] = (-acc).divided_exact(n);
      } catch (const std::domain_error&) {
        throw std::domain_error("curve: counts are inconsistent (non-integer coefficient)");
      }
    }
    // functional equation a_{2g-i} = q^{g-i} a_i
    for (std::uint32_t i = 0; i < genus; ++i) {
      a[2 * genus - i] = BigInt{static_cast<long long>(ipow(q, genus - i))} * a[i];
    }
    z.poly = IntPolynomial::from_coeffs(std::move(a));
  }
  // round trip against every provided count
  const auto implied = counts_from_numerator(z, table.n_max());
  for (std::uint32_t n = 1; n <= table.n_max(); ++n) {
    if (implied[n - 1] != table.counts[n - 1]) {
      throw std::domain_error("curve: numerator does not reproduce N_" + std::to_string(n) +
                              " (functional-equation round-trip failure)");
    }
  }
  return z;
}

std::vector<std::int64_t> counts_from_numerator(const ZetaNumerator& z, std::uint32_t n_max) {
  const std::vector<BigInt> ps = power_sums(z.poly, n_max);
  std::vector<std::int64_t> out;
  out.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const BigInt v = BigInt{static_cast<long long>(ipow(z.q, n))} + BigInt{1} - ps[n - 1];
    out.push_back(v.to_int64());
  }
  return out;
}

const char* to_string(Extremality e) {
  switch (e) {
    case Extremality::Maximal: return "maximal";
    case Extremality::Minimal: return "minimal";
    case Extremality::Neither: return "neither";
    case Extremality::NotApplicable: return "not-applicable";
  }
  return "?";
}

Extremality classify_extremality(const ZetaNumerator& z) {
  if (z.genus == 0) return Extremality::NotApplicable;
  std::uint64_t root = 0;
  while ((root + 1) * (root + 1) <= z.q) ++root;
  if (root * root != z.q) return Extremality::NotApplicable;
  // scale (1 ± t)^{2g} binomials by powers of sqrt(q)
  const unsigned deg = 2 * z.genus;
  for (int sign : {+1, -1}) {
    IntPolynomial ref = IntPolynomial::binomial_power(sign, deg);
    std::vector<BigInt> scaled;
    BigInt rk{1};
    for (unsigned k = 0; k <= deg; ++k) {
      scaled.push_back(ref.coeff(k) * rk);
      rk *= BigInt{static_cast<long long>(root)};
    }
    if (z.poly == IntPolynomial::from_coeffs(std::move(scaled))) {
      return sign > 0 ? Extremality::Maximal : Extremality::Minimal;
    }
  }
  return Extremality::Neither;
}

}  // namespace zetaglue::curve
