#pragma once

// Minimal arbitrary-precision signed integer for the Smith normal form
// computations. Base 2^32, sign-magnitude. Internal to the homology module.

#include <cstdint>
#include <string>
#include <vector>

#include "thoma2/common.hpp"

namespace thoma2 {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v) {  // NOLINT: implicit by design
    if (v < 0) {
      neg_ = true;
      v = -v;
    }
    while (v) {
      mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
  }

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  BigInt abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
  }
  BigInt operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.neg_ ? c > 0 : c < 0;
  }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.neg_ == b.neg_) {
      BigInt r;
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.neg_ = a.neg_ && !r.mag_.empty();
      return r;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    BigInt r;
    if (c == 0) return r;
    if (c > 0) {
      r.mag_ = sub_mag(a.mag_, b.mag_);
      r.neg_ = a.neg_;
    } else {
      r.mag_ = sub_mag(b.mag_, a.mag_);
      r.neg_ = b.neg_;
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                            r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t pos = i + b.mag_.size();
      while (carry) {
        std::uint64_t cur = r.mag_[pos] + carry;
        r.mag_[pos] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        ++pos;
      }
    }
    trim(r.mag_);
    r.neg_ = a.neg_ != b.neg_;
    return r;
  }

  // truncated division: quotient rounds toward zero
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw InvalidArgument("division by zero");
    q = BigInt();
    r = BigInt();
    // magnitude long division, bit by bit
    std::vector<std::uint32_t> rem;
    std::vector<std::uint32_t> quo(a.mag_.size(), 0);
    for (int i = static_cast<int>(a.mag_.size()) * 32 - 1; i >= 0; --i) {
      shift_left1(rem);
      if ((a.mag_[i / 32] >> (i % 32)) & 1u) set_bit0(rem);
      if (cmp_mag(rem, b.mag_) >= 0) {
        rem = sub_mag(rem, b.mag_);
        quo[i / 32] |= (1u << (i % 32));
      }
    }
    trim(quo);
    trim(rem);
    q.mag_ = quo;
    q.neg_ = !q.mag_.empty() && (a.neg_ != b.neg_);
    r.mag_ = rem;
    r.neg_ = !r.mag_.empty() && a.neg_;
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  long long to_ll() const {
    long long v = 0;
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    return neg_ ? -v : v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    BigInt cur = abs();
    std::string digits;
    BigInt ten(10);
    while (!cur.is_zero()) {
      BigInt q, r;
      divmod(cur, ten, q, r);
      digits += static_cast<char>('0' + (r.is_zero() ? 0 : r.mag_[0]));
      cur = q;
    }
    if (neg_) digits += '-';
    return std::string(digits.rbegin(), digits.rend());
  }

 private:
  bool neg_ = false;
  std::vector<std::uint32_t> mag_;  // little-endian limbs

  static void trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
      std::uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r.push_back(static_cast<std::uint32_t>(cur));
      carry = cur >> 32;
    }
    trim(r);
    return r;
  }
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      borrow = 0;
      if (cur < 0) {
        cur += (1ll << 32);
        borrow = 1;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    trim(r);
    return r;
  }
  static void shift_left1(std::vector<std::uint32_t>& m) {
    std::uint32_t carry = 0;
    for (auto& limb : m) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) m.push_back(carry);
  }
  static void set_bit0(std::vector<std::uint32_t>& m) {
    if (m.empty()) m.push_back(1);
    else m[0] |= 1u;
  }
};

inline BigInt big_gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    a = b;
    b = r.abs();
  }
  return a;
}

}  // namespace thoma2
