#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lki/hopf.hpp"
#include "lki/morse.hpp"

using namespace lki;
using namespace lki::hopf;

TEST_CASE("truncation ring arithmetic") {
  Trunc t = Trunc::t_value(4);  // 1 + e mod e^4
  Trunc ti = t.inverse();
  CHECK(t * ti == Trunc(Rational(1)));
  CHECK(ti.coeff(0) == Rational(1));
  CHECK(ti.coeff(1) == Rational(-1));
  CHECK(ti.coeff(2) == Rational(1));
  CHECK(ti.coeff(3) == Rational(-1));
  CHECK(Trunc::eps(4).pow(4).is_zero());
  CHECK(t.pow(-2) == ti * ti);
  CHECK(t.to_string() == "1 + e");
}

TEST_CASE("pairing table") {
  CHECK(pairing(PairingForm::Psi, Rational(0), 0, 1) == Rational(1));
  CHECK(pairing(PairingForm::Psi, Rational(0), 0, -4) == Rational(-4));
  CHECK(pairing(PairingForm::Psi, Rational(0), 2, 7) == Rational(0));
  CHECK(pairing(PairingForm::Phi, Rational(0), 1, 5) == Rational(1));
  CHECK(pairing(PairingForm::Phi, Rational(0), 0, 5) == Rational(0));
  CHECK(pairing(PairingForm::UPsi, Rational(2), 0, 3) == Rational(8));
  CHECK(pairing(PairingForm::UPsi, Rational(2), 0, -2) == Rational(1, 4));
  CHECK(pairing(PairingForm::UPsi, Rational(2), 1, 3) == Rational(0));
  CHECK(pairing(PairingForm::EvPhi, Rational(3), 2, 0) == Rational(9));
  CHECK(pairing(PairingForm::EvPhi, Rational(3), 0, 9) == Rational(1));
}

TEST_CASE("standard modules satisfy the commutation relations exactly") {
  for (int n : {1, 2, 3, 4})
    for (int d : {1, 2, 3, 4, 6}) {
      DModule v = standard_module(n, d, Rational(0));
      verify_module_relations(v);  // throws on failure
      CHECK(v.precision() == std::min(n, d));
    }
  // rational offsets keep the relations (Psi shifts diagonally)
  verify_module_relations(standard_module(3, 3, Rational(1, 2)));
  // u^Psi B u^-Psi = u B for rational u and integer offsets
  for (Rational c0 : {Rational(0), Rational(1)}) {
    DModule v = standard_module(3, 3, c0);
    Rational u(2);
    QMatrix upsi(v.qdim, v.qdim), upsi_inv(v.qdim, v.qdim);
    for (int k = 0; k < v.rank; ++k)
      for (int j = 0; j < v.ann[k]; ++j) {
        Rational p = Rational::pow(u, k + (c0 == Rational(1) ? 1 : 0));
        upsi.at(v.index(k, j), v.index(k, j)) = p;
        upsi_inv.at(v.index(k, j), v.index(k, j)) = p.inverse();
      }
    CHECK(upsi * v.Bop * upsi_inv == v.Bop.scaled(u));
  }
}

TEST_CASE("rank-1 module gives the swap R-matrix") {
  DModule v = standard_module(3, 1, Rational(0));
  CHECK(v.qdim == 1);
  CHECK(r_matrix(v) == QMatrix::identity(1));
}

TEST_CASE("r_V is the swap modulo nilpotents and satisfies Yang-Baxter exactly") {
  DModule v = standard_module(3, 2, Rational(0));
  int q = v.qdim;  // 2 + 1
  QMatrix r = r_matrix(v);
  auto rinv = r.inverse();
  REQUIRE(rinv.has_value());
  CHECK(r * *rinv == QMatrix::identity(q * q));
  QMatrix id = QMatrix::identity(q);
  QMatrix r1 = r.kron(id), r2 = id.kron(r);
  CHECK(r1 * r2 * r1 == r2 * r1 * r2);

  DModule v2 = standard_module(2, 3, Rational(1));
  QMatrix rr = r_matrix(v2);
  int qq = v2.qdim;
  QMatrix i2 = QMatrix::identity(qq);
  CHECK(rr.kron(i2) * i2.kron(rr) * rr.kron(i2) == i2.kron(rr) * rr.kron(i2) * i2.kron(rr));
}

TEST_CASE("vect_datum passes the rigidity derivation") {
  DModule v = standard_module(3, 3, Rational(0));
  auto d = vect_datum(v);  // throws if zig-zags or tilde inverses fail
  rt::MatCat<Rational> cat(v.qdim);
  CHECK(cat.equal(cat.compose(d.mor[rt::DTildeRinv], d.mor[rt::DTildeR]),
                  cat.identity(v.qdim * v.qdim)));
}

TEST_CASE("conjecture: unknot") {
  auto rep = conjecture_check(morse::trivial_word(), 4, 4, Rational(0));
  CHECK(rep.computed_is_scalar);
  CHECK(rep.equal);
  CHECK(rep.predicted_scalar == Trunc(Rational(1), 4));
}

TEST_CASE("conjecture: trefoil matches the inverse Alexander series") {
  auto tre = morse::from_braid({1, 1, 1}, 2);
  auto rep = conjecture_check(tre, 4, 4, Rational(0));
  CHECK(rep.computed_is_scalar);
  CHECK(rep.equal);
  // predicted = (1 + e^2 (1+e)^-1)^-1
  Trunc e = Trunc::eps(4);
  Trunc one(Rational(1));
  Trunc expect = (one + e * e * Trunc::t_value(4).inverse()).inverse();
  CHECK(rep.predicted_scalar == expect);
}

TEST_CASE("conjecture scalar is independent of rank and offset") {
  auto tre = morse::from_braid({1, 1, 1}, 2);
  auto a = conjecture_check(tre, 3, 3, Rational(0));
  auto b = conjecture_check(tre, 3, 4, Rational(1));
  auto c = conjecture_check(tre, 3, 5, Rational(1, 2));
  CHECK(a.computed_is_scalar);
  CHECK(b.computed_is_scalar);
  CHECK(c.computed_is_scalar);
  CHECK(a.computed_scalar == b.computed_scalar);
  CHECK(a.computed_scalar == c.computed_scalar);
  CHECK(a.equal);
  CHECK(b.equal);
}

TEST_CASE("pairing table sweep m <= 5, |n| <= 5") {
  for (int m = 0; m <= 5; ++m)
    for (long long n = -5; n <= 5; ++n) {
      CHECK(pairing(PairingForm::Psi, Rational(0), m, n) ==
            (m == 0 ? Rational(n) : Rational(0)));
      CHECK(pairing(PairingForm::Phi, Rational(0), m, n) ==
            (m == 1 ? Rational(1) : Rational(0)));
      Rational u(3, 2), v(-2);
      CHECK(pairing(PairingForm::UPsi, u, m, n) ==
            (m == 0 ? Rational::pow(u, n) : Rational(0)));
      CHECK(pairing(PairingForm::EvPhi, v, m, n) == Rational::pow(v, m));
    }
}
