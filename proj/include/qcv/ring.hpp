#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qcv {

// Coefficient domains for truncated power series.  Two rings are supported:
// exact integers (GMP-backed) and integers modulo m for 2 <= m <= 2^32.
// Ring objects are small values carried by each series; all arithmetic goes
// through them so kernels can be written once.

class ExactRing {
 public:
  using Value = mpz_class;
  // Accumulator for fused multiply-add loops.
  using Acc = mpz_class;

  static constexpr bool is_modular = false;

  bool operator==(const ExactRing&) const = default;

  Value zero() const { return Value(0); }
  Value one() const { return Value(1); }
  Value from_long(long v) const { return Value(v); }

  void add_assign(Value& a, const Value& b) const { a += b; }
  void sub_assign(Value& a, const Value& b) const { a -= b; }
  Value add(const Value& a, const Value& b) const { return Value(a + b); }
  Value sub(const Value& a, const Value& b) const { return Value(a - b); }
  Value mul(const Value& a, const Value& b) const { return Value(a * b); }
  Value neg(const Value& a) const { return Value(-a); }
  void addmul_value(Value& dst, const Value& a, const Value& b) const {
    mpz_addmul(dst.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  bool is_zero(const Value& a) const { return mpz_sgn(a.get_mpz_t()) == 0; }
  bool is_one(const Value& a) const { return mpz_cmp_si(a.get_mpz_t(), 1) == 0; }
  bool is_minus_one(const Value& a) const { return mpz_cmp_si(a.get_mpz_t(), -1) == 0; }
  bool equal(const Value& a, const Value& b) const { return a == b; }

  bool is_unit(const Value& a) const { return is_one(a) || is_minus_one(a); }
  Value unit_inverse(const Value& a) const {
    if (!is_unit(a)) throw std::domain_error("ExactRing: not a unit: " + str(a));
    return a;  // +-1 are self-inverse
  }

  Acc acc_zero() const { return Acc(0); }
  void acc_addmul(Acc& s, const Value& a, const Value& b) const {
    mpz_addmul(s.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  Value acc_value(Acc&& s) const { return std::move(s); }

  std::string str(const Value& a) const { return a.get_str(); }
  std::uint64_t cache_key() const { return 0; }
  std::string name() const { return "Z"; }
};

class ModRing {
 public:
  using Value = std::uint64_t;
  using Acc = unsigned __int128;

  static constexpr bool is_modular = true;

  explicit ModRing(std::uint64_t m) : m_(m) {
    if (m < 2 || m > (std::uint64_t(1) << 32))
      throw std::invalid_argument("ModRing: modulus must lie in [2, 2^32]");
  }

  std::uint64_t modulus() const { return m_; }
  bool operator==(const ModRing&) const = default;

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value from_long(long v) const {
    long long r = static_cast<long long>(v) % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<Value>(r);
  }

  void add_assign(Value& a, Value b) const {
    a += b;
    if (a >= m_) a -= m_;
  }
  void sub_assign(Value& a, Value b) const { a = a >= b ? a - b : a + m_ - b; }
  Value add(Value a, Value b) const {
    add_assign(a, b);
    return a;
  }
  Value sub(Value a, Value b) const {
    sub_assign(a, b);
    return a;
  }
  // Products never overflow: operands are < 2^32.
  Value mul(Value a, Value b) const { return (a * b) % m_; }
  Value neg(Value a) const { return a == 0 ? 0 : m_ - a; }
  void addmul_value(Value& dst, Value a, Value b) const { dst = (dst + a * b) % m_; }

  bool is_zero(Value a) const { return a == 0; }
  bool is_one(Value a) const { return a == 1; }
  bool is_minus_one(Value a) const { return a == m_ - 1; }
  bool equal(Value a, Value b) const { return a == b; }

  bool is_unit(Value a) const { return gcd_u64(a % m_, m_) == 1; }
  Value unit_inverse(Value a) const;

  Acc acc_zero() const { return 0; }
  void acc_addmul(Acc& s, Value a, Value b) const { s += static_cast<Acc>(a * b); }
  Value acc_value(Acc&& s) const { return static_cast<Value>(s % m_); }

  std::string str(Value a) const { return std::to_string(a); }
  std::uint64_t cache_key() const { return m_; }
  std::string name() const { return "Z/" + std::to_string(m_); }

 private:
  static std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
      std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::uint64_t m_;
};

inline ModRing::Value ModRing::unit_inverse(Value a) const {
  a %= m_;
  // extended Euclid over signed 64-bit; m_ <= 2^32 keeps everything in range
  std::int64_t r0 = static_cast<std::int64_t>(m_), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::domain_error("ModRing: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m_));
  if (s0 < 0) s0 += static_cast<std::int64_t>(m_);
  return static_cast<Value>(s0);
}

}  // namespace qcv
