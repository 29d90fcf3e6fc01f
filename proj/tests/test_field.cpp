#include <doctest.h>

#include "vbcm/field.hpp"

using namespace vbcm;

TEST_CASE("rational arithmetic is exact and canonical") {
  Field q = Field::rationals();
  FieldElem a = q.parse("2/4");
  CHECK(a.to_string() == "1/2");
  FieldElem b = q.parse("-3/-6");
  CHECK(b.to_string() == "1/2");
  CHECK(a == b);
  CHECK((a + b).to_string() == "1/1");
  CHECK((a - b).is_zero());
  CHECK((a * q.parse("2/3")).to_string() == "1/3");
  CHECK((a / q.parse("1/7")).to_string() == "7/2");
  CHECK(q.parse("0/5").is_zero());
}

TEST_CASE("very large rationals stay exact") {
  Field q = Field::rationals();
  FieldElem big = q.parse("123456789123456789123456789/2");
  FieldElem twice = big + big;
  CHECK(twice.to_string() == "123456789123456789123456789/1");
}

TEST_CASE("finite field arithmetic") {
  Field f7 = Field::fp(7);
  CHECK(f7.from_int(10).to_string() == "3");
  CHECK(f7.from_int(-1).to_string() == "6");
  CHECK((f7.from_int(3) * f7.from_int(5)).to_string() == "1");
  CHECK(f7.from_int(3).inverse().to_string() == "5");
  CHECK(f7.parse("1/2").to_string() == "4");  // 2 * 4 = 1 mod 7
  CHECK_THROWS_AS(f7.parse("1/7"), error);    // denominator divisible by p
  CHECK_THROWS_AS(Field::fp(6), error);
  CHECK_THROWS_AS(Field::fp(1), error);
}

TEST_CASE("primality check") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(2147483647ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
  CHECK_FALSE(is_prime_u64(1000000016000000063ull));
}

TEST_CASE("mixing fields is rejected") {
  FieldElem a = Field::rationals().one();
  FieldElem b = Field::fp(5).one();
  CHECK_THROWS_AS(a + b, error);
}

TEST_CASE("field spec strings") {
  CHECK(Field::parse_name("q") == Field::rationals());
  CHECK(Field::parse_name("fp:11") == Field::fp(11));
  CHECK_THROWS_AS(Field::parse_name("fp:9"), error);
  CHECK_THROWS_AS(Field::parse_name("float"), error);
}
