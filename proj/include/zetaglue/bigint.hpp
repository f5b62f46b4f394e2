#ifndef ZETAGLUE_BIGINT_HPP
#define ZETAGLUE_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zetaglue {

/// Exact signed integer of arbitrary size (sign + base-2^32 magnitude).
///
/// Coefficients of expanded singular zeta factors grow far past 64 bits
/// (hundreds of digits for deep gluings), so every polynomial coefficient
/// in the library is a BigInt. Division is only ever needed by small
/// positive integers (Newton's identities), which divided_exact covers.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_string(const std::string& decimal);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  bool fits_int64() const;
  /// Throws std::overflow_error when the value is outside int64 range.
  long long to_int64() const;

  std::string to_string() const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

  /// Quotient by a small positive integer; throws std::domain_error unless
  /// the division is exact.
  BigInt divided_exact(std::uint32_t divisor) const;

  /// Total order; negative/zero/positive like strcmp.
  static int compare(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  // mag_ is little-endian with no leading zero limbs; empty iff sign_ == 0.
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;

  void normalize();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace zetaglue

#endif
