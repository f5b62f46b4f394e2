#include "zetaglue/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace zetaglue {

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPolynomial IntPolynomial::one() { return constant(BigInt{1}); }

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (!c.is_zero()) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
  IntPolynomial p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long long>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.emplace_back(v);
  return from_coeffs(std::move(c));
}

IntPolynomial IntPolynomial::one_minus_t_pow(unsigned d) {
  IntPolynomial p;
  p.c_.assign(d + 1, BigInt{});
  p.c_[0] = BigInt{1};
  p.c_[d] += BigInt{-1};  // d == 0 gives the zero polynomial (1 - 1)
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::binomial_power(int sign, unsigned n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("binomial_power: sign must be +-1");
  std::vector<BigInt> row{BigInt{1}};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BigInt> next(row.size() + 1, BigInt{});
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  if (sign < 0) {
    for (std::size_t k = 1; k < row.size(); k += 2) row[k] = -row[k];
  }
  return from_coeffs(std::move(row));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> out(c_.size() + rhs.c_.size() - 1, BigInt{});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j].is_zero()) continue;
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::divided_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("IntPolynomial: division by zero");
  const BigInt& lead = divisor.c_.back();
  const bool lead_pos = lead == BigInt{1};
  if (!lead_pos && lead != BigInt{-1}) {
    throw std::invalid_argument("IntPolynomial: divisor leading coefficient must be +-1");
  }
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("IntPolynomial: inexact division (degree too small)");
  }
  std::vector<BigInt> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd, BigInt{});
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt q = lead_pos ? rem[i + dd] : -rem[i + dd];
    if (q.is_zero()) continue;
    quot[i] = q;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
      rem[i + j] -= q * divisor.c_[j];
    }
  }
  for (const BigInt& r : rem) {
    if (!r.is_zero()) throw std::domain_error("IntPolynomial: inexact division");
  }
  return from_coeffs(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    BigInt v = c_[i];
    if (out.empty()) {
      if (v.sign() < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += v.sign() < 0 ? " - " : " + ";
      if (v.sign() < 0) v = -v;
    }
    const bool unit = v == BigInt{1};
    if (i == 0) {
      out += v.to_string();
    } else {
      if (!unit) {
        out += v.to_string();
        out += "*";
      }
      out += "t";
      if (i > 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<BigInt> power_sums(const IntPolynomial& f, unsigned n_max) {
  if (f.coeff(0) != BigInt{1}) {
    throw std::invalid_argument("power_sums: constant term must be 1");
  }
  std::vector<BigInt> p(n_max + 1, BigInt{});  // p[0] unused
  for (unsigned n = 1; n <= n_max; ++n) {
    BigInt acc = f.coeff(n) * BigInt{static_cast<long long>(n)};
    for (unsigned k = 1; k < n; ++k) {
      acc += f.coeff(n - k) * p[k];
    }
    p[n] = -acc;
  }
  p.erase(p.begin());
  return p;
}

}  // namespace zetaglue
