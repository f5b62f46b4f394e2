#include "zetaglue/bigint.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace zetaglue {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigInt::BigInt(long long value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // two's-complement-safe magnitude, including LLONG_MIN
  std::uint64_t mag = value < 0 ? 0ULL - static_cast<std::uint64_t>(value)
                                : static_cast<std::uint64_t>(value);
  mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
  if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::normalize() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() < b.size() ? a : b;
  const auto& hi = a.size() < b.size() ? b : a;
  std::vector<std::uint32_t> out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
    out[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    mag_ = add_mag(mag_, rhs.mag_);
  } else {
    int c = compare_mag(mag_, rhs.mag_);
    if (c == 0) {
      sign_ = 0;
      mag_.clear();
    } else if (c > 0) {
      mag_ = sub_mag(mag_, rhs.mag_);
    } else {
      mag_ = sub_mag(rhs.mag_, mag_);
      sign_ = rhs.sign_;
    }
  }
  normalize();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    mag_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(mag_.size() + rhs.mag_.size(), 0);
  for (std::size_t i = 0; i < mag_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = mag_[i];
    for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * rhs.mag_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.mag_.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      ++k;
    }
  }
  mag_ = std::move(out);
  sign_ *= rhs.sign_;
  normalize();
  return *this;
}

BigInt BigInt::divided_exact(std::uint32_t divisor) const {
  if (divisor == 0) throw std::domain_error("BigInt: division by zero");
  if (sign_ == 0) return BigInt{};
  BigInt out;
  out.sign_ = sign_;
  out.mag_.assign(mag_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | mag_[i];
    out.mag_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  if (rem != 0) throw std::domain_error("BigInt: inexact division");
  out.normalize();
  return out;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = compare_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  std::uint64_t v = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
  if (sign_ > 0) return v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max());
  return v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1;
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
  if (sign_ == 0) return 0;
  std::uint64_t v = mag_[0];
  if (mag_.size() == 2) v |= static_cast<std::uint64_t>(mag_[1]) << 32;
  if (sign_ > 0) return static_cast<long long>(v);
  return static_cast<long long>(0ULL - v);
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  // peel off 9 decimal digits at a time
  std::vector<std::uint32_t> work = mag_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

BigInt BigInt::from_string(const std::string& decimal) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
    if (decimal[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  for (; pos < decimal.size(); ++pos) {
    char c = decimal[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in numeral");
    out *= BigInt{10};
    out += BigInt{c - '0'};
  }
  if (sign < 0) out = -out;
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace zetaglue
