#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lki/group.hpp"
#include "lki/morse.hpp"
#include "lki/rational.hpp"

namespace lki::knotgroup {

/// Combinatorial core of a corrected diagram: arcs a_0..a_n along the knot,
/// crossing c_i separates a_{i-1} from a_i, kappa[i] is the overpassing arc,
/// signs[i] the crossing sign (both 1-based like the recursion, stored 0-based
/// at index i-1).
struct WirtingerData {
  int n = 0;
  std::vector<int> kappa;  // size n, values in 0..n
  std::vector<int> signs;  // size n, values +-1
};

/// Extracts arcs/kappa/signs by walking the knot through a corrected word.
WirtingerData wirtinger_from_diagram(const morse::MorseWord& d);

/// Homomorphism counting oracle: enumerates g: {0..n} -> G with g_0 = 1 and
/// g_i = g_{kappa_i} mu^{eps_i} g_{kappa_i}^{-1} g_{i-1}, grouped by g_n.
/// Forward values are forced; arcs referenced before they are reached are
/// branched over the conjugacy-class value of g mu^{+-1} g^{-1} and checked
/// when reached.
struct HomCount {
  std::map<int, unsigned long long> per_lambda;  // g_n -> count
  unsigned long long total = 0;
  // up to witness_cap full assignments g_0..g_n (flattened), grouped in order
  std::vector<std::vector<int>> witnesses;
};
HomCount count_homs(const WirtingerData& w, const setcat::FiniteGroup& g, int mu,
                    std::optional<int> lambda = std::nullopt, size_t witness_cap = 0);

/// Verifies on enumerated homomorphisms that the translations u: w_i -> e_i m
/// e_i^{-1} and v: e_i -> w_{k_i}^{e_i} ... w_{k_1}^{e_1} biject the hom sets
/// of the two presentations with matching (mu, lambda).
bool e_presentation_check(const WirtingerData& w, const setcat::FiniteGroup& g, int mu);

// ---------------------------------------------------------------------------

/// Laurent polynomial in one variable t with rational coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c, int exp = 0) {
    if (!c.is_zero()) c_[exp] = c;
  }
  static LaurentPoly t(int exp = 1) { return LaurentPoly(Rational(1), exp); }
  /// Coefficient vector low..high starting at t^min_exp.
  static LaurentPoly from_coeffs(const std::vector<long long>& coeffs, int min_exp = 0);

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& x) const;  // x must be nonzero if min_exp < 0

  /// Exact division; throws Error if not divisible.
  LaurentPoly divided_by(const LaurentPoly& o) const;

  /// Unit normalization: shift lowest exponent to 0, clear rational content,
  /// make the lowest coefficient positive.  Suitable for up-to-units
  /// comparison.
  LaurentPoly up_to_units() const;

  std::string to_string(const std::string& var = "t") const;

private:
  std::map<int, Rational> c_;
  void prune();
};

/// Alexander polynomial via Fox calculus on the Wirtinger presentation
/// (delete the column of w_0, take the determinant up to units).
LaurentPoly alexander_raw(const WirtingerData& w);

/// Normalized so Delta(1) = 1 and Delta(t) = Delta(1/t); throws Error on
/// degenerate input that cannot be so normalized.
LaurentPoly alexander_normalized(const WirtingerData& w);
LaurentPoly normalize_alexander(const LaurentPoly& raw);

}  // namespace lki::knotgroup
