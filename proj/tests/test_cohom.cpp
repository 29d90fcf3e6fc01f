#include <doctest.h>

#include "support.hpp"
#include "vbcm/cohom.hpp"

using namespace vbcm;
using namespace vbcm::cohom;
using band::BandDatum;
using testsupport::Rng;

TEST_CASE("positive and negative parts of integers") {
  CHECK(pos_part(3) == 3);
  CHECK(neg_part(3) == 0);
  CHECK(pos_part(0) == 0);
  CHECK(neg_part(0) == 0);
  CHECK(pos_part(-2) == 0);
  CHECK(neg_part(-2) == 2);
}

TEST_CASE("positive parts of a sequence") {
  auto parts = positive_parts({1, -1, 2, 0, -1});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].start == 0);
  CHECK(parts[0].entries == std::vector<long long>{1});
  CHECK(parts[1].start == 2);
  CHECK(parts[1].entries == std::vector<long long>{2, 0});

  auto whole = positive_parts({2, 0, 1});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].length == 3);

  CHECK(positive_parts({-1, -2}).empty());

  // wrap-around run
  auto wrapped = positive_parts({1, -1, 0});
  REQUIRE(wrapped.size() == 1);
  CHECK(wrapped[0].start == 2);
  CHECK(wrapped[0].entries == std::vector<long long>{0, 1});
}

TEST_CASE("theta") {
  CHECK(theta({0, 0, 0}) == 3);
  CHECK(theta({1, -1}) == 2);
  CHECK(theta({-1, -3}) == 0);
  CHECK(theta({2, 0, 1}) == 3);      // whole cycle
  CHECK(theta({1, -1, 2, -1}) == 4); // two short parts, each counts l+1
  CHECK(theta({1, -1, 0, -1}) == 3); // the zero part counts bare length
  CHECK(theta({0, -1}) == 1);
}

TEST_CASE("theta is bounded by parts plus lengths") {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.int_in(1, 10));
    std::vector<long long> d(n);
    for (auto& v : d) v = rng.int_in(-3, 3);
    auto parts = positive_parts(d);
    long long lengths = 0;
    for (const auto& p : parts) lengths += static_cast<long long>(p.length);
    CHECK(theta(d) <= static_cast<long long>(parts.size()) + lengths);
    CHECK(theta(d) >= lengths);
  }
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(theta(std::vector<long long>(n, 0)) == static_cast<long long>(n));
}

TEST_CASE("cohomology of pinned band bundles") {
  Field f = Field::rationals();
  CHECK(cohomology(BandDatum{1, {0}, 1, f.one()}) == CohomDims{1, 1});
  CHECK(cohomology(BandDatum{1, {2}, 1, f.from_int(5)}) == CohomDims{2, 0});
  CHECK(cohomology(BandDatum{1, {-1}, 1, f.from_int(2)}) == CohomDims{0, 1});
  // structure sheaves on longer cycles
  for (int s = 2; s <= 6; ++s) {
    BandDatum b{s, std::vector<long long>(static_cast<std::size_t>(s), 0), 1, f.one()};
    CHECK(cohomology(b) == CohomDims{1, 1});
  }
  // the delta term needs lambda = 1
  CHECK(cohomology(BandDatum{1, {0}, 1, f.from_int(2)}) == CohomDims{0, 0});
  CHECK(cohomology(BandDatum{1, {0}, 2, f.one()}) == CohomDims{1, 1});
}

TEST_CASE("Euler characteristic identity on random band data") {
  Field f = Field::rationals();
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    BandDatum b = testsupport::random_band(rng, f, 12, -5, 5, 4);
    auto c = cohomology(b);
    long long total = 0;
    for (long long v : b.d) total += v;
    CHECK(c.h0 - c.h1 == static_cast<long long>(b.m) * total);
  }
}

TEST_CASE("suitability") {
  CHECK(is_suitable({2, 3}));
  CHECK_FALSE(is_suitable({0, 1, 1, 0, 2}));
  CHECK_FALSE(is_suitable({1, 1, 0}));   // a shift is (0,1,1)
  CHECK_FALSE(is_suitable({0, 0, 5}));   // contains (0,0)
  CHECK_FALSE(is_suitable({0}));         // not positive
  CHECK_FALSE(is_suitable({2, -1}));     // negative entry
  CHECK(is_suitable({0, 2}));            // zero separated by entries > 1
  CHECK(is_suitable({1}));
  CHECK(is_suitable({0, 2, 0, 3}));
  CHECK_FALSE(is_suitable({0, 1, 0, 3}));  // pattern 0,1,0
  CHECK_FALSE(is_suitable({1, 1, 1, 0}));  // shift of (0,1,1,1)
}

TEST_CASE("generic spannedness") {
  Field f = Field::rationals();
  CHECK(is_generically_spanned(BandDatum{3, {0, 0, 0}, 1, f.one()}));
  CHECK_FALSE(is_generically_spanned(BandDatum{3, {0, 0, 0}, 2, f.one()}));
  CHECK_FALSE(is_generically_spanned(BandDatum{3, {0, 0, 0}, 1, f.from_int(2)}));
  CHECK(is_generically_spanned(BandDatum{1, {2, 3}, 2, f.from_int(9)}));
  CHECK_FALSE(is_generically_spanned(BandDatum{1, {1, 1, 0}, 1, f.one()}));
}

TEST_CASE("suitable sequences have vanishing h1") {
  Field f = Field::rationals();
  for (int n = 1; n <= 5; ++n) {
    std::vector<long long> d(static_cast<std::size_t>(n), 0);
    for (;;) {
      if (band::is_nonperiodic(d, 1) && is_suitable(d)) {
        BandDatum b{1, d, 2, f.from_int(3)};
        CHECK(cohomology(b).h1 == 0);
      }
      std::size_t pos = 0;
      while (pos < d.size() && d[pos] == 3) d[pos++] = 0;
      if (pos == d.size()) break;
      ++d[pos];
    }
  }
}

TEST_CASE("Cech oracle matches the pinned examples") {
  Field f = Field::rationals();
  auto run = [&](const BandDatum& b) {
    return cech_oracle(band::build_gluing(b), b.d);
  };
  CHECK(run(BandDatum{1, {0}, 1, f.one()}) == CohomDims{1, 1});
  CHECK(run(BandDatum{1, {2}, 1, f.from_int(4)}) == CohomDims{2, 0});
  auto two = run(BandDatum{2, {1, 1}, 1, f.from_int(4)});
  CHECK(two.h0 - two.h1 == 2);
}

TEST_CASE("Cech oracle equals the closed formula on a sample") {
  Rng rng(52);
  for (Field f : {Field::rationals(), Field::fp(7)}) {
    for (int trial = 0; trial < 60; ++trial) {
      BandDatum b = testsupport::random_band(rng, f, 6, -2, 2, 2);
      CHECK(cech_oracle(band::build_gluing(b), b.d) == cohomology(b));
    }
  }
}

TEST_CASE("Atiyah cohomology table") {
  CHECK(atiyah_cohom(2, 3, 1, false) == CohomDims{3, 0});
  CHECK(atiyah_cohom(1, 0, 1, true) == CohomDims{1, 1});
  CHECK(atiyah_cohom(3, -2, 2, false) == CohomDims{0, 4});
  CHECK(atiyah_cohom(1, 0, 2, false) == CohomDims{0, 0});
  CHECK_THROWS_AS(atiyah_cohom(2, 4, 1, false), error);   // not coprime
  CHECK_THROWS_AS(atiyah_cohom(2, 0, 1, false), error);   // gcd(2, 0) = 2
  CHECK_THROWS_AS(atiyah_cohom(2, 3, 0, false), error);   // n must be >= 1
  // Riemann-Roch on genus one: h0 - h1 = n d
  for (long long r = 1; r <= 3; ++r)
    for (long long d = -4; d <= 4; ++d) {
      if (std::gcd(r, d < 0 ? -d : d) != 1) continue;
      for (long long n = 1; n <= 3; ++n) {
        auto c = atiyah_cohom(r, d, n, false);
        CHECK(c.h0 - c.h1 == n * d);
      }
    }
}
