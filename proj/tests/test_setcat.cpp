#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "lki/group.hpp"
#include "lki/setcat.hpp"

using namespace lki::setcat;

TEST_CASE("group constructors satisfy the axioms and label lookups work") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.size() == 6);
  int mu = s3.element("(1 2)");
  CHECK(s3.mul(mu, mu) == s3.identity());
  FiniteGroup z5 = FiniteGroup::cyclic(5);
  CHECK(z5.mul(z5.element("3"), z5.element("4")) == z5.element("2"));
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.size() == 8);
  int s = d4.element("s0");
  CHECK(d4.mul(s, s) == d4.identity());
  int r = d4.element("r1");
  CHECK(d4.pow(r, 4) == d4.identity());
  // s r s = r^-1
  CHECK(d4.mul(d4.mul(s, r), s) == d4.inv(r));
}

TEST_CASE("group json loader round trips Z3") {
  FiniteGroup z3 = FiniteGroup::from_json(
      R"({"name":"Z3","elements":["0","1","2"],
          "table":[[0,1,2],[1,2,0],[2,0,1]]})");
  CHECK(z3.size() == 3);
  CHECK(z3.inv(z3.element("1")) == z3.element("2"));
}

TEST_CASE("pointed-group racks satisfy the rack axioms") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  RackTable rack = rack_from_pointed_group(s3, s3.element("(1 2)"));
  // dot((1 3),(2 3)) = e
  CHECK(rack.dot[s3.element("(1 3)")][s3.element("(2 3)")] == s3.identity());
  // trivial rack from mu = e: dot(g,h) = h
  RackTable triv = rack_from_pointed_group(s3, s3.identity());
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) CHECK(triv.dot[g][h] == h);
  // abelian group: conjugation is trivial, dot(g,h) = mu+h
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  RackTable zr = rack_from_pointed_group(z3, z3.element("1"));
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h) CHECK(zr.dot[g][h] == z3.mul(z3.element("1"), h));
}

TEST_CASE("span composition is matrix product over the naturals") {
  SpanBackend cat(2);
  SpanNat a;  // multiplicity matrix [[2,0],[1,3]]
  a.base = 2;
  a.src_ar = a.dst_ar = 1;
  a.m[0][0] = 2;
  a.m[1][0] = 1;
  a.m[1][1] = 3;
  SpanMatrix am = to_matrix(a);
  CHECK(fiber_count(am, 0, 0) == 2);
  SpanMatrix vm = varpi(am);
  CHECK(vm.mult == std::vector<std::vector<unsigned long long>>{{1, 0}, {1, 1}});

  SpanNat sq = cat.compose(a, a);
  // [[2,0],[1,3]]^2 = [[4,0],[5,9]] acting on row tuples
  SpanMatrix sm = to_matrix(sq);
  CHECK(sm.mult[0][0] == 4);
  CHECK(sm.mult[1][0] == 5);
  CHECK(sm.mult[1][1] == 9);

  // varpi is functorial: varpi(a . a) == varpi(varpi(a) . varpi(a))
  RelBackend rel(2);
  SpanBool ra = varpi(a);
  CHECK(rel.equal(varpi(sq), rel.compose(ra, ra)));
}

TEST_CASE("span identities and inverses") {
  SpanBackend cat(3);
  auto id2 = cat.identity(2);
  CHECK(cat.equal(cat.compose(id2, id2), id2));
  auto inv = cat.invert(id2);
  REQUIRE(inv.has_value());
  CHECK(cat.equal(*inv, id2));
  // a non-bijective span has no inverse
  SpanNat bad = id2;
  bad.m[0][0] = 2;
  CHECK(!cat.invert(bad).has_value());
}

TEST_CASE("group spec accepts table files") {
  {
    std::ofstream out("/tmp/lki_z3.json");
    out << R"({"name":"Z3file","elements":["0","1","2"],
               "table":[[0,1,2],[1,2,0],[2,0,1]]})";
  }
  FiniteGroup g = FiniteGroup::make("/tmp/lki_z3.json");
  CHECK(g.size() == 3);
  CHECK(g.name() == "Z3file");
  CHECK_THROWS_AS(FiniteGroup::make("/tmp/absent_group.json"), lki::Error);
  // malformed table: not associative
  CHECK_THROWS_AS(FiniteGroup::from_json(
                      R"({"elements":["a","b"],"table":[[0,0],[0,1]]})"),
                  lki::Error);
}
