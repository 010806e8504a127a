#include "lki/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lki {

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  unsigned long long u = neg_ ? -(unsigned long long)v : (unsigned long long)v;
  while (u) {
    limbs_.push_back((uint32_t)(u & 0xffffffffu));
    u >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) throw std::invalid_argument("BigInt: empty string");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (neg && !r.is_zero()) r.neg_ = true;
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

bool BigInt::fits_i64() const {
  if (limbs_.size() > 2) return false;
  unsigned long long u = 0;
  for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
  if (neg_) return u <= 0x8000000000000000ull;
  return u <= 0x7fffffffffffffffull;
}

long long BigInt::to_i64() const {
  unsigned long long u = 0;
  for (size_t i = limbs_.size(); i-- > 0;) u = (u << 32) | limbs_[i];
  return neg_ ? -(long long)u : (long long)u;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& x = a.limbs_;
  const auto& y = b.limbs_;
  size_t n = std::max(x.size(), y.size());
  r.limbs_.resize(n, 0);
  unsigned long long carry = 0;
  for (size_t i = 0; i < n; ++i) {
    unsigned long long s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    r.limbs_[i] = (uint32_t)(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back((uint32_t)carry);
  return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.resize(a.limbs_.size(), 0);
  long long borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    long long s = (long long)a.limbs_[i] - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
    if (s < 0) {
      s += 0x100000000ll;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_[i] = (uint32_t)s;
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  if (neg_ == o.neg_) {
    BigInt r = add_mag(*this, o);
    r.neg_ = neg_;
    r.trim();
    return r;
  }
  int c = cmp_mag(*this, o);
  if (c == 0) return BigInt();
  if (c > 0) {
    BigInt r = sub_mag(*this, o);
    r.neg_ = neg_;
    r.trim();
    return r;
  }
  BigInt r = sub_mag(o, *this);
  r.neg_ = o.neg_;
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    unsigned long long carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      unsigned long long cur =
          r.limbs_[i + j] + carry + (unsigned long long)limbs_[i] * o.limbs_[j];
      r.limbs_[i + j] = (uint32_t)(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      unsigned long long cur = r.limbs_[k] + carry;
      r.limbs_[k] = (uint32_t)(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.neg_ = neg_ != o.neg_;
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  // bit-by-bit long division on magnitudes
  size_t bits = a.limbs_.size() * 32;
  q.limbs_.assign(a.limbs_.size(), 0);
  BigInt rem;
  for (size_t i = bits; i-- > 0;) {
    // rem = rem*2 + bit i of |a|
    unsigned long long carry = (a.limbs_[i / 32] >> (i % 32)) & 1u;
    for (size_t k = 0; k < rem.limbs_.size(); ++k) {
      unsigned long long cur = ((unsigned long long)rem.limbs_[k] << 1) | carry;
      rem.limbs_[k] = (uint32_t)(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    if (carry) rem.limbs_.push_back((uint32_t)carry);
    if (cmp_mag(rem, b) >= 0) {
      rem = sub_mag(rem, b);
      q.limbs_[i / 32] |= (1u << (i % 32));
    }
  }
  q.trim();
  rem.trim();
  q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
  rem.neg_ = !rem.is_zero() && a.neg_;
  q.trim();
  rem.trim();
  r = rem;
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator<(const BigInt& o) const {
  if (neg_ != o.neg_) return neg_;
  int c = cmp_mag(*this, o);
  return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  BigInt cur = abs();
  BigInt ten(10);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, ten, q, r);
    out.push_back((char)('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    cur = q;
  }
  if (neg_) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
  return (num_ * o.den_) < (o.num_ * den_);
}

Rational Rational::pow(const Rational& base, long long e) {
  if (e < 0) return pow(base.inverse(), -e);
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace lki
