#include "borda/rational.hpp"

#include <algorithm>
#include <cstdlib>

#include "borda/errors.hpp"

namespace borda {

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  unsigned long long m = neg_ ? -static_cast<unsigned long long>(v)
                              : static_cast<unsigned long long>(v);
  while (m > 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) throw ArgumentError("BigInt::from_string: empty string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ArgumentError("BigInt::from_string: no digits");
  BigInt out;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ArgumentError("BigInt::from_string: bad digit in '" +
                          std::string(s) + "'");
    out.mul_small(10);
    BigInt d(s[i] - '0');
    add_mag(out.limbs_, d.limbs_);
  }
  out.neg_ = neg;
  out.trim();
  return out;
}

BigInt BigInt::two_pow(unsigned k) {
  BigInt out(1);
  for (unsigned i = 0; i < k; ++i) out.mul_small(2);
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.neg_ = !out.neg_;
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  std::uint32_t carry = 0;
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(a[i]) + carry +
                        (i < b.size() ? b[i] : 0u);
    a[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = static_cast<std::uint32_t>(cur / kBase);
  }
  if (carry) a.push_back(carry);
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? b[i] : 0u);
    if (cur < 0) {
      cur += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    a[i] = static_cast<std::uint32_t>(cur);
  }
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    add_mag(limbs_, o.limbs_);
  } else if (cmp_mag(*this, o) >= 0) {
    sub_mag(limbs_, o.limbs_);
  } else {
    std::vector<std::uint32_t> tmp = o.limbs_;
    std::swap(limbs_, tmp);
    sub_mag(limbs_, tmp);
    neg_ = o.neg_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (is_zero() || o.is_zero()) {
    limbs_.clear();
    neg_ = false;
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                          carry;
      out[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  limbs_ = std::move(out);
  neg_ = neg_ != o.neg_;
  trim();
  return *this;
}

void BigInt::mul_small(std::uint32_t m) {
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * m + carry;
    limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
    carry = cur / kBase;
  }
  while (carry) {
    limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw ArgumentError("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q = BigInt(0);
    r = a;
    return;
  }
  // Schoolbook long division, most-significant limb first, with a binary
  // search for each quotient limb. Operands here stay small (a few limbs).
  BigInt rem;
  std::vector<std::uint32_t> qlimbs(a.limbs_.size(), 0);
  BigInt babs = b.abs();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    // rem = rem * base + limb
    rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
    rem.trim();
    std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      BigInt t = babs;
      t.mul_small(mid);
      if (cmp_mag(t, rem) <= 0) {
        digit = mid;
        if (mid == kBase - 1) break;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    if (digit) {
      BigInt t = babs;
      t.mul_small(digit);
      sub_mag(rem.limbs_, t.limbs_);
      rem.trim();
    }
    qlimbs[i] = digit;
  }
  q.limbs_ = std::move(qlimbs);
  q.neg_ = a.neg_ != b.neg_;
  q.trim();
  rem.neg_ = a.neg_;
  rem.trim();
  r = std::move(rem);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

namespace {

// value/2 in place over base-1e9 limbs; returns the dropped low bit.
int half_in_place(std::vector<std::uint32_t>& limbs) {
  std::uint32_t carry = 0;
  for (std::size_t i = limbs.size(); i-- > 0;) {
    std::uint64_t cur = static_cast<std::uint64_t>(carry) * 1'000'000'000ULL +
                        limbs[i];
    limbs[i] = static_cast<std::uint32_t>(cur >> 1);
    carry = static_cast<std::uint32_t>(cur & 1);
  }
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
  return static_cast<int>(carry);
}

bool is_even(const std::vector<std::uint32_t>& limbs) {
  return limbs.empty() || (limbs.front() % 2 == 0);
}

}  // namespace

// Binary gcd: subtract-and-halve only, no long division in the hot path.
BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int shift = 0;
  while (is_even(a.limbs_) && is_even(b.limbs_)) {
    half_in_place(a.limbs_);
    half_in_place(b.limbs_);
    ++shift;
  }
  while (is_even(a.limbs_)) half_in_place(a.limbs_);
  for (;;) {
    while (is_even(b.limbs_)) half_in_place(b.limbs_);
    if (cmp_mag(a, b) > 0) std::swap(a.limbs_, b.limbs_);
    sub_mag(b.limbs_, a.limbs_);
    b.trim();
    if (b.is_zero()) break;
  }
  for (int i = 0; i < shift; ++i) a.mul_small(2);
  return a;
}

bool BigInt::operator==(const BigInt& o) const {
  return neg_ == o.neg_ && limbs_ == o.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (neg_ != o.neg_)
    return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp_mag(*this, o);
  if (neg_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out = neg_ ? "-" : "";
  out += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

long long BigInt::to_int64() const {
  long long out = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (out > (INT64_MAX - limbs_[i]) / static_cast<long long>(kBase))
      throw ArgumentError("BigInt::to_int64: value out of range");
    out = out * kBase + limbs_[i];
  }
  return neg_ ? -out : out;
}

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArgumentError("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view s) {
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    // Integer tallies and equal-denominator accumulations skip the
    // cross-multiplication entirely.
    num_ += o.num_;
    if (!(den_ == BigInt(1))) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first so intermediate products stay small.
  BigInt g1 = BigInt::gcd(num_, o.den_);
  BigInt g2 = BigInt::gcd(o.num_, den_);
  if (!(g1 == BigInt(1))) num_ = num_ / g1;
  if (!(g2 == BigInt(1))) den_ = den_ / g2;
  num_ *= g2 == BigInt(1) ? o.num_ : o.num_ / g2;
  den_ *= g1 == BigInt(1) ? o.den_ : o.den_ / g1;
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) den_ = BigInt(1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArgumentError("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (num_.sign() < 0 && !r.is_zero()) q -= BigInt(1);
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::decimal_string() const {
  if (is_integer()) return num_.to_string();
  // Denominator must be 2^a * 5^b for a finite decimal expansion.
  BigInt d = den_;
  int twos = 0, fives = 0;
  BigInt two(2), five(5), q, r;
  for (;;) {
    BigInt::divmod(d, two, q, r);
    if (!r.is_zero()) break;
    d = q;
    ++twos;
  }
  for (;;) {
    BigInt::divmod(d, five, q, r);
    if (!r.is_zero()) break;
    d = q;
    ++fives;
  }
  if (!(d == BigInt(1))) return to_string();
  int digits = std::max(twos, fives);
  BigInt scaled = num_.abs();
  for (int i = 0; i < std::max(0, digits - twos); ++i) scaled *= BigInt(2);
  for (int i = 0; i < std::max(0, digits - fives); ++i) scaled *= BigInt(5);
  std::string s = scaled.to_string();
  if (static_cast<int>(s.size()) <= digits)
    s = std::string(digits - s.size() + 1, '0') + s;
  s.insert(s.size() - digits, ".");
  return (num_.sign() < 0 ? "-" : "") + s;
}

}  // namespace borda
