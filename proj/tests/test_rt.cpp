#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lki/moves.hpp"
#include "lki/rt.hpp"
#include "lki/setcat.hpp"
#include "lki/trunc.hpp"

using namespace lki;
using namespace lki::setcat;
using namespace lki::rt;
using lki::morse::MorseWord;

namespace {

template <class S>
RMatrixDatum<SpanCat<S>> rack_datum(const SpanCat<S>& cat, const RackTable& rack) {
  auto base = rmatrix_from_rack<S>(rack);
  return derive_tildes(cat, 1, 1, base.eps, base.eta, base.r, base.r_inv);
}

RackTable s3_rack() {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  return rack_from_pointed_group(s3, s3.element("(1 2)"));
}

}  // namespace

TEST_CASE("rack tildes realize the structure maps") {
  SpanBackend cat(6);
  RackTable rack = s3_rack();
  auto d = rack_datum(cat, rack);
  // r^-1 = tilde r = s', (tilde r)^-1 = r, tilde(r^-1) = double tilde r = s,
  // (tilde(r^-1))^-1 = double tilde(r^-1) = r'
  auto s = rack_graph<NatSemiring>(rack, RackMap::SMap);
  auto sp = rack_graph<NatSemiring>(rack, RackMap::SPrimeMap);
  auto rp = rack_graph<NatSemiring>(rack, RackMap::RPrime);
  CHECK(cat.equal(d.mor[TildeR], sp));
  CHECK(cat.equal(d.mor[TildeR], d.mor[Rinv]));
  CHECK(cat.equal(d.mor[InvTildeR], d.mor[R]));
  CHECK(cat.equal(d.mor[TildeRinv], s));
  CHECK(cat.equal(d.mor[DTildeR], s));
  CHECK(cat.equal(d.mor[InvTildeRinv], rp));
  CHECK(cat.equal(d.mor[DTildeRinv], rp));
}

TEST_CASE("Yang-Baxter and RII identities hold for the rack datum") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  auto id1 = cat.identity(1);
  auto r1 = cat.tensor(d.mor[R], id1);
  auto r2 = cat.tensor(id1, d.mor[R]);
  CHECK(cat.equal(cat.compose(r1, cat.compose(r2, r1)), cat.compose(r2, cat.compose(r1, r2))));

  auto id2 = cat.identity(2);
  CHECK(cat.equal(cat.compose(d.mor[TildeR], d.mor[InvTildeR]), id2));
  CHECK(cat.equal(cat.compose(d.mor[InvTildeRinv], d.mor[TildeRinv]), id2));
  CHECK(cat.equal(cat.compose(d.mor[DTildeRinv], d.mor[DTildeR]), id2));
}

TEST_CASE("evaluate: trivial word gives the identity span") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  auto j = evaluate(cat, d, morse::trivial_word());
  CHECK(cat.equal(j, cat.identity(1)));
}

TEST_CASE("evaluate matches the hand-built composite for xi(-1)") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  auto id1 = cat.identity(1);
  auto f0 = cat.tensor(id1, d.mor[Eta]);
  auto f1 = cat.tensor(id1, d.mor[InvTildeR]);
  auto f2 = cat.tensor(d.mor[InvTildeR], id1);
  auto f3 = cat.tensor(d.mor[Eps], id1);
  auto by_hand = cat.compose(f3, cat.compose(f2, cat.compose(f1, f0)));
  CHECK(cat.equal(evaluate(cat, d, morse::xi(-1)), by_hand));
}

TEST_CASE("evaluate is insensitive to slice refinement") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  // two independent zigzags on a two-strand fragment, in shared slices vs split
  MorseWord wide = morse::parse_morse(
      "cupRL u cupRL u\n"
      "u capRL u capRL\n");
  MorseWord refined = morse::parse_morse(
      "cupRL u u\n"
      "u d u cupRL u\n"
      "u capRL u capRL\n");
  CHECK(cat.equal(evaluate(cat, d, wide), evaluate(cat, d, refined)));
  CHECK(cat.equal(evaluate(cat, d, wide), cat.identity(2)));
  // two crossings sharing a slice vs one per slice
  MorseWord wide2 = morse::parse_morse("x+uu x-uu\n");
  MorseWord refined2 = morse::parse_morse(
      "x+uu u u\n"
      "u u x-uu\n");
  CHECK(cat.equal(evaluate(cat, d, wide2), evaluate(cat, d, refined2)));
}

TEST_CASE("invariant: unknotted words give the identity in Rel, Span, matrix") {
  MorseWord unknotted = morse::compose(morse::xi(1), morse::xi(-1));
  {
    SpanBackend cat(6);
    auto d = rack_datum(cat, s3_rack());
    CHECK(cat.equal(invariant(cat, d, unknotted), cat.identity(1)));
  }
  {
    RelBackend cat(6);
    auto d = rack_datum(cat, s3_rack());
    CHECK(cat.equal(invariant(cat, d, unknotted), cat.identity(1)));
  }
}

TEST_CASE("invariant is constant under random move sequences (rack backend)") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  MorseWord tre = morse::from_braid({1, 1, 1}, 2);
  auto j0 = invariant(cat, d, tre);
  for (uint64_t seed : {1u, 2u, 3u}) {
    MorseWord moved = morse::random_move_sequence(tre, seed, 10, 12);
    CHECK(cat.equal(invariant(cat, d, moved), j0));
  }
}

TEST_CASE("varpi intertwines the Span and Rel invariants") {
  SpanBackend span(6);
  RelBackend rel(6);
  auto ds = rack_datum(span, s3_rack());
  auto dr = rack_datum(rel, s3_rack());
  MorseWord tre = morse::from_braid({1, 1, 1}, 2);
  auto js = invariant(span, ds, tre);
  auto jr = invariant(rel, dr, tre);
  CHECK(rel.equal(varpi(js), jr));
}

TEST_CASE("matrix backend with the one-dimensional object is trivially rigid") {
  MatCat<hopf::Trunc> cat(1);
  using M = Matrix<hopf::Trunc>;
  M one = M::identity(1);
  auto d = derive_tildes(cat, 1, 1, one, one, one, one);
  for (int t = 0; t < MorTagCount; ++t) CHECK(cat.equal(d.mor[t], one));
  CHECK(cat.equal(invariant(cat, d, morse::xi(2)), one));
}

TEST_CASE("evaluate rejects non-normal words; non-rigid data are reported") {
  SpanBackend cat(2);
  RackTable triv;
  triv.n = 2;
  triv.dot = {{0, 1}, {0, 1}};
  triv.star = {{0, 1}, {0, 1}};
  auto d = rack_datum(cat, triv);
  MorseWord bad = morse::parse_morse("u cupLR\ncapLR u\n");
  CHECK_THROWS_AS(evaluate(cat, d, bad), lki::NotNormalError);

  // r = id on X^2 satisfies Yang-Baxter but its sideways transpose is the
  // rank-one eta.eps composite, which has no inverse
  auto base = rmatrix_from_rack<NatSemiring>(triv);
  auto id2 = cat.identity(2);
  CHECK_THROWS_AS(derive_tildes(cat, 1, 1, base.eps, base.eta, id2, id2),
                  lki::NotRigidError);
}

TEST_CASE("a two-strand RII pair evaluates to the identity on G tensor G") {
  SpanBackend cat(6);
  auto d = rack_datum(cat, s3_rack());
  MorseWord pair = morse::parse_morse("x+uu\nx-uu\n");
  CHECK(cat.equal(evaluate(cat, d, pair), cat.identity(2)));
  MorseWord mixed = morse::parse_morse("x+du\nx-du\n");  // tilde pair, F tensor G
  CHECK(cat.equal(evaluate(cat, d, mixed), cat.identity(2)));
}
