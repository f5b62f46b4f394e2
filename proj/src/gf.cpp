#include "zetaglue/gf.hpp"

#include <algorithm>
#include <utility>

namespace zetaglue::gf {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t m = 0;
  std::uint32_t deg = 0;   // e*m
  std::uint64_t q = 0;     // p^e
  std::uint64_t size = 0;  // p^deg
  std::vector<std::uint32_t> modulus;  // monic, length deg+1
  // q-power map as a deg x deg matrix over F_p; frob_cols[j] is the
  // representation of (x^j)^q.
  std::vector<std::vector<std::uint32_t>> frob_cols;
};

}  // namespace detail

using detail::FieldData;

namespace {

// ---- raw polynomial arithmetic over F_p, vectors of length data.deg ----

void poly_mul_mod(const FieldData& f, const std::uint32_t* a, const std::uint32_t* b,
                  std::uint32_t* out) {
  const std::uint32_t d = f.deg;
  const std::uint64_t p = f.p;
  std::vector<std::uint64_t> buf(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (std::uint32_t j = 0; j < d; ++j) {
      buf[i + j] += ai * b[j];
    }
  }
  for (auto& v : buf) v %= p;
  // fold x^k = -sum modulus_j x^{k-d+j} from the top down
  for (std::uint32_t k = 2 * d - 2; k >= d; --k) {
    const std::uint64_t t = buf[k];
    if (t != 0) {
      for (std::uint32_t j = 0; j < d; ++j) {
        buf[k - d + j] = (buf[k - d + j] + t * (p - f.modulus[j])) % p;
      }
    }
    if (k == d) break;
  }
  for (std::uint32_t j = 0; j < d; ++j) out[j] = static_cast<std::uint32_t>(buf[j]);
}

void poly_pow_mod(const FieldData& f, const std::uint32_t* base, std::uint64_t exp,
                  std::uint32_t* out) {
  const std::uint32_t d = f.deg;
  std::vector<std::uint32_t> acc(d, 0), sq(base, base + d), tmp(d, 0);
  acc[0] = 1;
  while (exp) {
    if (exp & 1) {
      poly_mul_mod(f, acc.data(), sq.data(), tmp.data());
      acc.swap(tmp);
    }
    exp >>= 1;
    if (exp) {
      poly_mul_mod(f, sq.data(), sq.data(), tmp.data());
      sq.swap(tmp);
    }
  }
  std::copy(acc.begin(), acc.end(), out);
}

// ---- generic dense polynomials over F_p (for irreducibility testing) ----

using PolyP = std::vector<std::uint32_t>;  // constant first, may be denormalized

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on machine ints
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    std::int64_t tmp = t - qq * nt;
    t = nt;
    nt = tmp;
    tmp = r - qq * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

PolyP poly_mod(PolyP a, const PolyP& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t binv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t lead = (static_cast<std::uint64_t>(a.back()) * binv) % p;
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t sub = (lead * b[j]) % p;
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t ipow_checked(std::uint64_t base, std::uint32_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > limit / base) return 0;  // overflow marker
    r *= base;
  }
  return r;
}

bool is_irreducible(const PolyP& f, std::uint32_t p) {
  // f monic of degree D: irreducible iff x^{p^D} = x (mod f) and
  // gcd(x^{p^{D/r}} - x, f) = 1 for every prime r | D.
  const std::uint32_t D = static_cast<std::uint32_t>(f.size()) - 1;
  FieldData scratch;
  scratch.p = p;
  scratch.deg = D;
  scratch.modulus = f;
  std::vector<std::uint32_t> x(D, 0), img(D, 0);
  if (D == 1) return true;
  x[1] = 1;
  const std::uint64_t pD = ipow_checked(p, D, ~std::uint64_t{0});
  poly_pow_mod(scratch, x.data(), pD, img.data());
  if (img != x) return false;
  for (std::uint64_t r : distinct_prime_factors(D)) {
    const std::uint64_t pe = ipow_checked(p, static_cast<std::uint32_t>(D / r), ~std::uint64_t{0});
    poly_pow_mod(scratch, x.data(), pe, img.data());
    PolyP diff(img.begin(), img.end());
    diff[1] = (diff[1] + p - 1) % p;  // subtract x
    PolyP g = poly_gcd(PolyP(f), std::move(diff), p);
    if (g.size() > 1) return false;
  }
  return true;
}

PolyP smallest_irreducible(std::uint32_t p, std::uint32_t D) {
  // candidates scanned by integer encoding of the non-leading coefficients
  PolyP f(D + 1, 0);
  f[D] = 1;
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t v = k;
    for (std::uint32_t j = 0; j < D; ++j) {
      f[j] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (v != 0) break;  // exhausted (cannot happen: irreducibles exist in every degree)
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("gf: no irreducible polynomial found");
}

void check_same_field(const FieldData& a, const FieldData& b) {
  if (&a == &b) return;
  if (a.p != b.p || a.e != b.e || a.m != b.m || a.modulus != b.modulus) {
    throw std::invalid_argument("gf: operation mixes elements of different fields");
  }
}

}  // namespace

// ---- number theory helpers ----

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Field ----

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint32_t m, std::uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
  if (e == 0 || m == 0) throw std::invalid_argument("gf: e and m must be positive");
  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->e = e;
  data->m = m;
  const std::uint64_t deg64 = static_cast<std::uint64_t>(e) * m;
  if (deg64 > 64) throw CapExceeded("gf: field F_" + std::to_string(p) + "^" +
                                    std::to_string(deg64) + " exceeds the cap");
  data->deg = static_cast<std::uint32_t>(deg64);
  data->size = ipow_checked(p, data->deg, cap);
  if (data->size == 0) {
    throw CapExceeded("gf: field of size " + std::to_string(p) + "^" + std::to_string(deg64) +
                      " exceeds the cap " + std::to_string(cap));
  }
  data->q = ipow_checked(p, e, cap);
  data->modulus = smallest_irreducible(p, data->deg);
  // columns of the q-power map: (x^j)^q = (x^q)^j
  std::vector<std::uint32_t> x(data->deg, 0), xq(data->deg, 0);
  if (data->deg == 1) {
    xq[0] = 0;  // unused below; x^q handled by the j-chain starting at 1
  } else {
    x[1] = 1;
    poly_pow_mod(*data, x.data(), data->q, xq.data());
  }
  data->frob_cols.assign(data->deg, std::vector<std::uint32_t>(data->deg, 0));
  data->frob_cols[0][0] = 1;
  std::vector<std::uint32_t> tmp(data->deg, 0);
  for (std::uint32_t j = 1; j < data->deg; ++j) {
    poly_mul_mod(*data, data->frob_cols[j - 1].data(), xq.data(), tmp.data());
    data->frob_cols[j] = tmp;
  }
  return Field(std::move(data));
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::e() const { return data_->e; }
std::uint32_t Field::m() const { return data_->m; }
std::uint64_t Field::q() const { return data_->q; }
std::uint32_t Field::degree() const { return data_->deg; }
std::uint64_t Field::size() const { return data_->size; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const {
  return FieldElement(data_, std::vector<std::uint32_t>(data_->deg, 0));
}

FieldElement Field::one() const { return from_residue(1); }

FieldElement Field::from_residue(std::uint64_t value) const {
  std::vector<std::uint32_t> c(data_->deg, 0);
  c[0] = static_cast<std::uint32_t>(value % data_->p);
  return FieldElement(data_, std::move(c));
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (index >= data_->size) throw std::invalid_argument("gf: element index out of range");
  std::vector<std::uint32_t> c(data_->deg, 0);
  for (std::uint32_t j = 0; j < data_->deg; ++j) {
    c[j] = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return FieldElement(data_, std::move(c));
}

FieldElement Field::from_coeffs(std::vector<std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->deg) throw std::invalid_argument("gf: wrong coefficient count");
  for (std::uint32_t v : coeffs) {
    if (v >= data_->p) throw std::invalid_argument("gf: coefficient out of range");
  }
  return FieldElement(data_, std::move(coeffs));
}

bool Field::same_field(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->e == other.data_->e &&
         data_->m == other.data_->m && data_->modulus == other.data_->modulus;
}

// ---- FieldElement ----

Field FieldElement::field() const { return Field(data_); }

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t j = c_.size(); j-- > 0;) idx = idx * data_->p + c_[j];
  return idx;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(*data_, *rhs.data_);
  std::vector<std::uint32_t> out(c_.size());
  const std::uint32_t p = data_->p;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t s = c_[i] + rhs.c_[i];
    out[i] = s >= p ? s - p : s;
  }
  return FieldElement(data_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(*data_, *rhs.data_);
  std::vector<std::uint32_t> out(c_.size());
  const std::uint32_t p = data_->p;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] = c_[i] >= rhs.c_[i] ? c_[i] - rhs.c_[i] : c_[i] + p - rhs.c_[i];
  }
  return FieldElement(data_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(*data_, *rhs.data_);
  std::vector<std::uint32_t> out(c_.size());
  poly_mul_mod(*data_, c_.data(), rhs.c_.data(), out.data());
  return FieldElement(data_, std::move(out));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  check_same_field(*data_, *rhs.data_);
  return c_ == rhs.c_;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  std::vector<std::uint32_t> out(c_.size());
  poly_pow_mod(*data_, c_.data(), exponent, out.data());
  return FieldElement(data_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("gf: inverse of zero");
  return pow(data_->size - 2);
}

FieldElement frobenius_q(const FieldElement& x) {
  const FieldData& f = *x.data_;
  std::vector<std::uint64_t> acc(f.deg, 0);
  for (std::uint32_t j = 0; j < f.deg; ++j) {
    const std::uint64_t cj = x.c_[j];
    if (cj == 0) continue;
    const auto& col = f.frob_cols[j];
    for (std::uint32_t r = 0; r < f.deg; ++r) acc[r] += cj * col[r];
  }
  std::vector<std::uint32_t> out(f.deg);
  for (std::uint32_t r = 0; r < f.deg; ++r) out[r] = static_cast<std::uint32_t>(acc[r] % f.p);
  return FieldElement(x.data_, std::move(out));
}

std::uint32_t minimal_degree(const FieldElement& x) {
  const std::uint32_t m = x.data_->m;
  FieldElement y = frobenius_q(x);
  std::uint32_t d = 1;
  while (y.coeffs() != x.coeffs()) {
    y = frobenius_q(y);
    ++d;
    if (d > m) throw std::logic_error("gf: Frobenius orbit exceeds field degree");
  }
  if (m % d != 0) throw std::logic_error("gf: orbit size does not divide extension degree");
  return d;
}

std::vector<FieldElement> enumerate_field(const Field& f, std::uint64_t cap) {
  if (f.size() > cap) {
    throw CapExceeded("gf: enumeration of " + std::to_string(f.size()) +
                      " elements exceeds the cap " + std::to_string(cap));
  }
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (std::uint64_t i = 0; i < f.size(); ++i) out.push_back(f.element_at(i));
  return out;
}

}  // namespace zetaglue::gf
