#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lki/knotgroup.hpp"
#include "lki/moves.hpp"

using namespace lki;
using namespace lki::knotgroup;
using setcat::FiniteGroup;

static WirtingerData corrected_wirtinger(const std::vector<int>& braid, int strands) {
  return wirtinger_from_diagram(morse::corrected(morse::from_braid(braid, strands)));
}

TEST_CASE("wirtinger data of the trivial and unknotted words") {
  WirtingerData w = wirtinger_from_diagram(morse::trivial_word());
  CHECK(w.n == 0);
  // xi(1) . xi(-1) is unknotted but has four crossings
  WirtingerData u =
      wirtinger_from_diagram(morse::corrected(morse::compose(morse::xi(1), morse::xi(-1))));
  CHECK(u.n == 4);
  int sum = 0;
  for (int s : u.signs) sum += s;
  CHECK(sum == 0);
  // its group is Z: over any (G, mu) there is exactly one hom per class value
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  HomCount h = count_homs(u, s3, s3.element("(1 2)"));
  CHECK(h.total == 1);
  CHECK(h.per_lambda.at(s3.identity()) == 1);
}

TEST_CASE("trefoil hom counts over S3") {
  WirtingerData w = corrected_wirtinger({1, 1, 1}, 2);
  int sum = 0;
  for (int s : w.signs) sum += s;
  CHECK(sum == 0);
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  HomCount h = count_homs(w, s3, s3.element("(1 2)"));
  // homs of the trefoil group sending the meridian to a fixed transposition:
  // one abelian plus two surjections onto S3 (the longitude separates them)
  CHECK(h.total == 3);
  CHECK(h.per_lambda.at(s3.identity()) >= 1);
}

TEST_CASE("trefoil over Z2 has exactly the abelian hom") {
  WirtingerData w = corrected_wirtinger({1, 1, 1}, 2);
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  HomCount h = count_homs(w, z2, z2.element("1"));
  CHECK(h.total == 1);
  CHECK(h.per_lambda.count(z2.identity()) == 1);
}

TEST_CASE("e-presentation translations biject hom sets") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  WirtingerData unknot = wirtinger_from_diagram(morse::trivial_word());
  CHECK(e_presentation_check(unknot, s3, s3.element("(1 2)")));
  WirtingerData tre = corrected_wirtinger({1, 1, 1}, 2);
  CHECK(e_presentation_check(tre, s3, s3.element("(1 2)")));
  WirtingerData fig8 = corrected_wirtinger({1, -2, 1, -2}, 3);
  CHECK(e_presentation_check(fig8, s4, s4.element("(1 2)")));
}

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly p = LaurentPoly::from_coeffs({1, -1, 1});  // 1 - t + t^2
  CHECK(p.eval(Rational(1)) == Rational(1));
  CHECK((p * p).coeff(2) == Rational(3));
  LaurentPoly q = LaurentPoly::from_coeffs({2, -2, 2}, -1);
  CHECK(q.up_to_units() == p);
  CHECK((p * q).divided_by(q) == p);
  CHECK(p.to_string() == "1 - t + t^2");
}

TEST_CASE("alexander polynomials match the classical values") {
  CHECK(alexander_raw(wirtinger_from_diagram(morse::trivial_word())).up_to_units() ==
        LaurentPoly::from_coeffs({1}));

  WirtingerData tre = corrected_wirtinger({1, 1, 1}, 2);
  CHECK(alexander_raw(tre).up_to_units() == LaurentPoly::from_coeffs({1, -1, 1}));
  // normalized: t^-1 - 1 + t
  LaurentPoly n = alexander_normalized(tre);
  CHECK(n == LaurentPoly::from_coeffs({1, -1, 1}, -1));

  WirtingerData fig8 = corrected_wirtinger({1, -2, 1, -2}, 3);
  CHECK(alexander_raw(fig8).up_to_units() == LaurentPoly::from_coeffs({1, -3, 1}));
  LaurentPoly n8 = alexander_normalized(fig8);
  CHECK(n8 == LaurentPoly::from_coeffs({-1, 3, -1}, -1));
  CHECK(n8.eval(Rational(1)) == Rational(1));
}

TEST_CASE("alexander is multiplicative under composition (connected sum)") {
  auto tre = morse::from_braid({1, 1, 1}, 2);
  auto sum = morse::compose(tre, tre);
  LaurentPoly d1 = alexander_raw(corrected_wirtinger({1, 1, 1}, 2)).up_to_units();
  LaurentPoly d2 = alexander_raw(wirtinger_from_diagram(morse::corrected(sum))).up_to_units();
  CHECK(d2 == (d1 * d1).up_to_units());
}

TEST_CASE("hom counts are invariant under random moves") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  int mu = s3.element("(1 2)");
  auto tre = morse::from_braid({1, 1, 1}, 2);
  HomCount base = count_homs(wirtinger_from_diagram(morse::corrected(tre)), s3, mu);
  for (uint64_t seed : {11u, 22u}) {
    auto moved = morse::random_move_sequence(tre, seed, 8, 12);
    HomCount h = count_homs(wirtinger_from_diagram(morse::corrected(moved)), s3, mu);
    CHECK(h.per_lambda == base.per_lambda);
  }
}
