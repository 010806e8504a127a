#pragma once

#include <string>
#include <vector>

#include "lki/errors.hpp"
#include "lki/rational.hpp"

namespace lki::hopf {

/// Element of Q[e]/(e^N), exact rational coefficients.  Order 0 means an
/// exact rational constant; mixed-order arithmetic truncates to the larger
/// declared order.
class Trunc {
public:
  Trunc() : c_{Rational(0)} {}
  explicit Trunc(const Rational& r, int order = 0) : order_(order), c_{r} { fit(); }
  Trunc(long long v) : c_{Rational(v)} {}

  static Trunc eps(int order) {
    Trunc t(Rational(0), order);
    if (order < 2) throw Error("Trunc: eps needs order >= 2");
    t.c_.assign(2, Rational(0));
    t.c_[1] = Rational(1);
    t.fit();
    return t;
  }
  /// t = 1 + e, the value taken by the central grouplike.
  static Trunc t_value(int order) { return Trunc(Rational(1), order) + eps(order); }

  int order() const { return order_; }
  bool is_zero() const;
  bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }
  const Rational& coeff(int k) const;
  Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }

  Trunc operator-() const;
  Trunc operator+(const Trunc& o) const;
  Trunc operator-(const Trunc& o) const;
  Trunc operator*(const Trunc& o) const;
  Trunc& operator+=(const Trunc& o) { *this = *this + o; return *this; }
  Trunc& operator-=(const Trunc& o) { *this = *this - o; return *this; }
  Trunc& operator*=(const Trunc& o) { *this = *this * o; return *this; }

  Trunc inverse() const;  // throws Error if not a unit
  Trunc pow(long long e) const;

  bool operator==(const Trunc& o) const;
  bool operator!=(const Trunc& o) const { return !(*this == o); }

  std::string to_string() const;  // e.g. "1 - e^2 + 2*e^3"

private:
  int order_ = 0;  // 0 = exact constant
  std::vector<Rational> c_;
  void fit();
  static int join(int a, int b) { return a == 0 ? b : (b == 0 ? a : (a < b ? a : b)); }
};

}  // namespace lki::hopf
