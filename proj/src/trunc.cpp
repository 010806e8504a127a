#include "lki/trunc.hpp"

namespace lki::hopf {

void Trunc::fit() {
  size_t want = order_ == 0 ? 1 : (size_t)order_;
  c_.resize(want, Rational(0));
}

bool Trunc::is_zero() const {
  for (const auto& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

const Rational& Trunc::coeff(int k) const {
  static const Rational zero(0);
  if (k < 0 || k >= (int)c_.size()) return zero;
  return c_[k];
}

Trunc Trunc::operator-() const {
  Trunc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Trunc Trunc::operator+(const Trunc& o) const {
  Trunc r(Rational(0), join(order_, o.order_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff((int)i) + o.coeff((int)i);
  return r;
}

Trunc Trunc::operator-(const Trunc& o) const { return *this + (-o); }

Trunc Trunc::operator*(const Trunc& o) const {
  Trunc r(Rational(0), join(order_, o.order_));
  size_t n = r.c_.size();
  for (size_t i = 0; i < c_.size() && i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size() && i + j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Trunc Trunc::inverse() const {
  if (!is_unit()) throw Error("Trunc: inverse of a non-unit");
  Trunc r(Rational(0), order_);
  Rational inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (size_t k = 1; k < r.c_.size(); ++k) {
    Rational acc(0);
    for (size_t j = 1; j <= k; ++j) acc += coeff((int)j) * r.c_[k - j];
    r.c_[k] = -(inv0 * acc);
  }
  return r;
}

Trunc Trunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Trunc r(Rational(1), order_);
  Trunc b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Trunc::operator==(const Trunc& o) const {
  size_t n = std::max(c_.size(), o.c_.size());
  for (size_t i = 0; i < n; ++i)
    if (coeff((int)i) != o.coeff((int)i)) return false;
  return true;
}

std::string Trunc::to_string() const {
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (out.empty()) {
      if (a.sign() < 0) out += "-", a = -a;
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string coeff = a.to_string();
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += "e";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lki::hopf
