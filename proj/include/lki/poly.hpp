#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lki/errors.hpp"
#include "lki/rational.hpp"

namespace lki::heis {

/// Variable context shared by a family of polynomials: names plus a block
/// monomial order (blocks most significant first, graded reverse-lex inside
/// each block).
struct PolyRing {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> blocks;

  int nvars() const { return (int)vars.size(); }
  /// Single block over all variables (plain grevlex).
  static PolyRing grevlex(std::vector<std::string> names);
  /// One block per entry of `split`, listed most significant first.
  static PolyRing block(std::vector<std::string> names, std::vector<std::vector<int>> split);
};

using Monomial = std::vector<uint16_t>;

/// -1, 0, +1 as a < b, a == b, a > b in the ring's order.
int mono_cmp(const PolyRing& ring, const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  Rational c;
};

/// Multivariate polynomial with exact rational coefficients, terms sorted
/// descending in the ring order.
class MultiPoly {
public:
  MultiPoly() : ring_(nullptr) {}
  explicit MultiPoly(const PolyRing* ring) : ring_(ring) {}
  MultiPoly(const PolyRing* ring, std::vector<Term> terms);

  static MultiPoly constant(const PolyRing* ring, const Rational& c);
  static MultiPoly var(const PolyRing* ring, int v, int exp = 1);

  const PolyRing* ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
  MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  bool operator==(const MultiPoly& o) const;

  MultiPoly times_term(const Term& t) const;
  MultiPoly scaled(const Rational& c) const;

  /// Monic (leading coefficient 1); zero stays zero.
  MultiPoly monic() const;
  /// Integer coprime coefficients with positive leading coefficient.
  MultiPoly primitive() const;

  /// Substitutes polynomials for variables into a target ring.  `images[v]`
  /// is the image of variable v; exponents apply as powers.
  MultiPoly map_into(const PolyRing* target, const std::vector<MultiPoly>& images) const;

  std::string to_string() const;

private:
  const PolyRing* ring_;
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace lki::heis
