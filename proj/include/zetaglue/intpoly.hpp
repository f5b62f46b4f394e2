#ifndef ZETAGLUE_INTPOLY_HPP
#define ZETAGLUE_INTPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaglue/bigint.hpp"

namespace zetaglue {

/// Dense polynomial in t with exact integer coefficients, constant term
/// first. Normalized: no zero leading coefficient; the zero polynomial
/// has an empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  static IntPolynomial one();
  static IntPolynomial constant(BigInt c);
  static IntPolynomial from_coeffs(std::vector<BigInt> coeffs);
  static IntPolynomial from_ints(const std::vector<long long>& coeffs);
  /// 1 - t^d
  static IntPolynomial one_minus_t_pow(unsigned d);
  /// (1 + sign*t)^n with sign in {+1, -1}; coefficients are binomials.
  static IntPolynomial binomial_power(int sign, unsigned n);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt{}; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

  /// Exact division. The divisor must have leading coefficient +1 or -1
  /// (all divisors in this library are 1 - t^d); throws std::domain_error
  /// when a nonzero remainder appears, std::invalid_argument on a bad
  /// divisor.
  IntPolynomial divided_exact(const IntPolynomial& divisor) const;

  bool operator==(const IntPolynomial& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const IntPolynomial& rhs) const { return c_ != rhs.c_; }

  /// Human-readable form like "1 - 2*t + 2*t^2" (diagnostics only).
  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
  void normalize();
};

/// Power sums p_1..p_n of the inverse roots of f, where f = prod (1 - b_j t),
/// computed over exact integers with Newton's identities:
///   p_n = -n*a_n - sum_{k=1}^{n-1} a_{n-k} * p_k      (a_j = 0 past deg f)
/// Requires f(0) = 1 (throws std::invalid_argument otherwise).
std::vector<BigInt> power_sums(const IntPolynomial& f, unsigned n_max);

}  // namespace zetaglue

#endif
