#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "lki/catalog.hpp"
#include "lki/heisenberg.hpp"
#include "lki/knotgroup.hpp"

using namespace lki;

TEST_CASE("builtin catalog validates against the expected Alexander column") {
  const auto& cat = catalog::builtin();
  CHECK(cat.entries.size() >= 9);
  catalog::validate(cat);  // throws on any mismatch
  CHECK(cat.has("3_1"));
  CHECK(cat.find("3_1").crossings() == 3);
  CHECK_THROWS_AS(cat.find("nope"), Error);
}

TEST_CASE("narrow words agree with braid closures") {
  const auto& cat = catalog::builtin();
  for (const char* name : {"4_1", "6_2"}) {
    const auto& e = cat.find(name);
    REQUIRE(!e.morse_text.empty());
    auto a = knotgroup::alexander_raw(
                 knotgroup::wirtinger_from_diagram(morse::corrected(e.narrow_word())))
                 .up_to_units();
    auto b = knotgroup::alexander_raw(
                 knotgroup::wirtinger_from_diagram(morse::corrected(e.word())))
                 .up_to_units();
    CHECK(a == b);
  }
}

TEST_CASE("knots with equal ideals and different Alexander polynomials") {
  // the 8_10 and 8_20 rows have different Delta but one and the same ideal
  const auto& cat = catalog::builtin();
  auto ideal = [&](const char* n) {
    return heis::ideal_invariant(
        knotgroup::wirtinger_from_diagram(morse::corrected(cat.find(n).word())));
  };
  auto a = ideal("8_10");
  auto b = ideal("8_20");
  CHECK(heis::ideal_equal(a, b));
  auto t1 = ideal("3_1");
  CHECK(!heis::ideal_equal(a, t1));
  // 8_18 and 9_24 share Delta but have different ideals
  auto c = ideal("8_18");
  auto d = ideal("9_24");
  CHECK(!heis::ideal_equal(c, d));
}

TEST_CASE("catalog file loading reports bad paths and content") {
  CHECK_THROWS_AS(catalog::load_file("/nonexistent/knots.json"), Error);
  std::ofstream out("/tmp/lki_bad_catalog.json");
  out << "{ not json";
  out.close();
  CHECK_THROWS_AS(catalog::load_file("/tmp/lki_bad_catalog.json"), Error);
}

TEST_CASE("catalog json round trip") {
  catalog::Catalog c = catalog::from_json(
      R"({"version":1,"knots":[{"name":"k","braid":[1,1,1],"strands":2,
          "alexander":[1,-1,1]}]})");
  CHECK(c.entries.size() == 1);
  catalog::validate(c);
}
