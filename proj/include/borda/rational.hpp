#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace borda {

// Arbitrary-precision signed integer, base 1e9 limbs. Point totals under the
// exponential count exceed 64 bits for large slates (2^65 for a 66-candidate
// contest), so fixed-width arithmetic is not an option here.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, counts convert freely
  static BigInt from_string(std::string_view s);
  static BigInt two_pow(unsigned k);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  bool negative() const { return neg_; }
  BigInt abs() const;

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

  // Truncating division (C semantics: quotient rounds toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);

  bool operator==(const BigInt& o) const;
  std::strong_ordering operator<=>(const BigInt& o) const;

  std::string to_string() const;

  // Exact conversion when the value fits in int64, throws otherwise.
  long long to_int64() const;

 private:
  static constexpr std::uint32_t kBase = 1'000'000'000;
  std::vector<std::uint32_t> limbs_;  // little-endian; empty means zero
  bool neg_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static void add_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static void sub_mag(std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b);
  void mul_small(std::uint32_t m);
};

// Exact rational with reduced numerator and positive denominator. All point
// totals and comparisons in the engine go through this type; near-ties that
// drive the failure detectors must compare exactly, never through doubles.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);
  // Parses "n" or "n/d".
  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const;
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const;
  std::strong_ordering operator<=>(const Rational& o) const;

  BigInt floor() const;  // largest integer <= value

  // "n" when integral, else "n/d". Lossless; this is the JSON encoding.
  std::string to_string() const;
  // Exact decimal ("454203.5") when the denominator is 2^a*5^b, else the
  // fraction form. Used for human-readable tables.
  std::string decimal_string() const;

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

}  // namespace borda
