#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lki/morse.hpp"

using namespace lki::morse;

TEST_CASE("trivial word is the identity diagram") {
  MorseWord t = trivial_word();
  CHECK(is_long_knot(t));
  CHECK(writhe(t) == 0);
  CHECK(is_normal(t));
  CHECK(words_equal(normalize(t), t));
}

TEST_CASE("xi words have writhe 2n and are normal") {
  for (int n = -5; n <= 5; ++n) {
    MorseWord w = xi(n);
    CHECK(is_long_knot(w));
    CHECK(is_normal(w));
    CHECK(writhe(w) == 2 * n);
  }
}

TEST_CASE("xi(1) matches the documented two-crossing word") {
  MorseWord w = parse_morse(
      "u cupRL\n"
      "u x+du\n"
      "x+du u\n"
      "capRL u\n");
  CHECK(words_equal(w, xi(1)));
  CHECK(writhe(w) == 2);
}

TEST_CASE("parser reports errors with position") {
  CHECK_THROWS_AS(parse_morse("u frob\n"), lki::ParseError);
  // two caps with nothing to cap off
  CHECK_THROWS_AS(parse_morse("capRL capRL\nu\n"), lki::ValidationError);
}

TEST_CASE("serializer round trips") {
  MorseWord w = xi(-2);
  CHECK(words_equal(parse_morse(serialize(w)), w));
  CHECK(words_equal(from_json(to_json(w)), w));
  CHECK(words_equal(parse_morse(serialize(trivial_word())), trivial_word()));
}

TEST_CASE("compose is monoidal with the trivial word as unit") {
  MorseWord d = xi(2);
  CHECK(words_equal(compose(trivial_word(), d), d));
  CHECK(words_equal(compose(d, trivial_word()), d));
  CHECK(words_equal(compose(xi(2), xi(1)), xi(3)));
  CHECK(writhe(compose(xi(1), xi(-1))) == 0);
  // associativity
  CHECK(words_equal(compose(compose(xi(1), xi(-1)), xi(1)),
                    compose(xi(1), compose(xi(-1), xi(1)))));
}

TEST_CASE("normalization removes left-to-right extrema and is idempotent") {
  // an up strand isotoped through a left-to-right zigzag
  MorseWord w = parse_morse(
      "u cupLR\n"
      "capLR u\n");
  CHECK(!is_normal(w));
  MorseWord n = normalize(w);
  CHECK(is_normal(n));
  CHECK(is_long_knot(n));
  int crossings = 0;
  for (const auto& s : n.slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::Crossing) ++crossings;
  CHECK(crossings == 2);  // one per eliminated extremum
  CHECK(words_equal(normalize(n), n));
  CHECK(words_equal(normalize(xi(1)), xi(1)));
}

TEST_CASE("corrected always has writhe zero") {
  CHECK(words_equal(corrected(trivial_word()), trivial_word()));
  MorseWord c = corrected(xi(1));
  CHECK(writhe(c) == 0);
  CHECK(is_long_knot(c));
  CHECK(words_equal(c, compose(xi(1), xi(-1))));
}

TEST_CASE("from_braid builds valid long-knot words") {
  MorseWord tre = from_braid({1, 1, 1}, 2);
  CHECK(is_long_knot(tre));
  CHECK(writhe(tre) == 3);
  int crossings = 0;
  for (const auto& s : tre.slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::Crossing) ++crossings;
  CHECK(crossings == 3);
  MorseWord fig8 = from_braid({1, -2, 1, -2}, 3);
  CHECK(is_long_knot(fig8));
  CHECK(writhe(fig8) == 0);
  // normalization adds one crossing per closure cap
  int norm_crossings = 0;
  for (const auto& s : normalize(fig8).slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::Crossing) ++norm_crossings;
  CHECK(norm_crossings == 4 + 2);
  CHECK(words_equal(from_braid({}, 1), trivial_word()));

  CHECK_THROWS_AS(from_braid({3}, 2), lki::ValidationError);
  // sigma_1^2 on 3 strands closes to a knot plus a circle
  CHECK_THROWS_AS(from_braid({1, 1}, 3), lki::ValidationError);
}

TEST_CASE("corrected braid closures have writhe zero and even normal writhe") {
  for (auto braid : {std::vector<int>{1, 1, 1}, {1, -2, 1, -2}, {1, 1, 1, -2, 1, -2}}) {
    MorseWord w = from_braid(braid, braid.size() == 3 ? 2 : 3);
    MorseWord nd = normalize(w);
    CHECK(writhe(nd) % 2 == 0);
    CHECK(writhe(corrected(w)) == 0);
  }
}

TEST_CASE("trace_crossings walks every crossing twice") {
  MorseWord tre = corrected(from_braid({1, 1, 1}, 2));
  auto passages = trace_crossings(tre);
  int total = 0;
  for (const auto& s : tre.slices)
    for (const auto& e : s.events)
      if (e.kind == EventKind::Crossing) ++total;
  CHECK((int)passages.size() == 2 * total);
  int unders = 0;
  for (const auto& p : passages) unders += p.under;
  CHECK(unders == total);
}
