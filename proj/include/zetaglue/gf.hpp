#ifndef ZETAGLUE_GF_HPP
#define ZETAGLUE_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetaglue::gf {

/// Hard ceiling on field cardinality for any enumeration-backed operation.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 24;

/// Thrown when a requested field (or extension tower) exceeds the cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
struct FieldData;
}

class Field;

/// Element of F_{q^m} in the polynomial basis over F_p: a residue vector
/// of length e*m with entries in [0, p). Elements carry their field; any
/// operation mixing distinct fields throws std::invalid_argument.
class FieldElement {
 public:
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Position of this element in the enumeration order of its field
  /// (integer encoding sum c_j p^j, constant coefficient least significant).
  std::uint64_t index() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  FieldElement pow(std::uint64_t exponent) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldElement inverse() const;

 private:
  friend class Field;
  friend FieldElement frobenius_q(const FieldElement&);
  friend std::uint32_t minimal_degree(const FieldElement&);

  FieldElement(std::shared_ptr<const detail::FieldData> data,
               std::vector<std::uint32_t> coeffs)
      : data_(std::move(data)), c_(std::move(coeffs)) {}

  std::shared_ptr<const detail::FieldData> data_;
  std::vector<std::uint32_t> c_;
};

/// Descriptor and arithmetic context for F_{q^m}, q = p^e, realized as
/// F_p[x]/(modulus) with the deterministically chosen modulus: the monic
/// irreducible of degree e*m over F_p with the smallest integer encoding
/// (sum c_j p^j over the non-leading coefficients). Two Field handles with
/// equal (p, e, m, modulus) are the same field.
class Field {
 public:
  /// Builds F_{p^{e*m}} viewed as the degree-m extension of F_q, q = p^e.
  /// Throws std::invalid_argument for non-prime p or zero e/m, CapExceeded
  /// when p^{e*m} > cap.
  static Field make(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                    std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint32_t m() const;
  /// q = p^e, the cardinality of the base field of the Frobenius action.
  std::uint64_t q() const;
  /// Extension degree over F_p (= e*m).
  std::uint32_t degree() const;
  /// p^{e*m}.
  std::uint64_t size() const;
  /// Monic modulus over F_p, constant term first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Embeds an integer residue via the prime subfield (value mod p).
  FieldElement from_residue(std::uint64_t value) const;
  /// Element with the given enumeration index (0 <= index < size()).
  FieldElement element_at(std::uint64_t index) const;
  /// Validates length and ranges.
  FieldElement from_coeffs(std::vector<std::uint32_t> coeffs) const;

  bool same_field(const Field& other) const;

 private:
  friend class FieldElement;
  friend FieldElement frobenius_q(const FieldElement&);
  friend std::uint32_t minimal_degree(const FieldElement&);
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// x |-> x^q, the generator of Gal(F_{q^m}/F_q); applied via the cached
/// matrix of the (F_p-linear) q-power map.
FieldElement frobenius_q(const FieldElement& x);

/// Least d >= 1 with x^{q^d} = x. Always divides m.
std::uint32_t minimal_degree(const FieldElement& x);

/// All field elements in enumeration order. Intended for small fields;
/// prefer element_at for streaming. Throws CapExceeded past the cap.
std::vector<FieldElement> enumerate_field(const Field& f,
                                          std::uint64_t cap = kDefaultFieldCap);

bool is_prime(std::uint64_t n);
/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);
/// Moebius function (0 on non-squarefree n).
int mobius(std::uint64_t n);
/// Ascending divisors of n.
std::vector<std::uint32_t> divisors(std::uint32_t n);

}  // namespace zetaglue::gf

#endif
