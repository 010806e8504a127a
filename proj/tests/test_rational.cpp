#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lki/rational.hpp"

using lki::BigInt;
using lki::Rational;

TEST_CASE("bigint arithmetic round trips through strings") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("-98765432109876543210");
  CHECK(a.to_string() == "123456789012345678901234567890");
  CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
  CHECK((a + b).to_string() == "123456788913580246791358024680");
  CHECK((a - a).is_zero());
}

TEST_CASE("bigint divmod truncates toward zero") {
  BigInt a(-7), b(2);
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK(q.to_i64() == -3);
  CHECK(r.to_i64() == -1);
  BigInt big = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
  CHECK((big % BigInt(997)).to_i64() == 299);
  CHECK(((big / BigInt(12345)) * BigInt(12345) + big % BigInt(12345)) == big);
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).to_i64() == 6);
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_i64() == 5);
}

TEST_CASE("rationals normalize") {
  Rational r(6, -4);
  CHECK(r.to_string() == "-3/2");
  CHECK((r + Rational(3, 2)).is_zero());
  CHECK((r * r).to_string() == "9/4");
  CHECK(Rational::pow(Rational(2, 3), -2).to_string() == "9/4");
  CHECK(Rational(5, 1).is_integer());
  CHECK(Rational(1, 3) < Rational(1, 2));
}
