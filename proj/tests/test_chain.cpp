#include <doctest.h>

#include <map>

#include "support.hpp"
#include "vbcm/chain.hpp"

using namespace vbcm;
using namespace vbcm::chain;
using testsupport::Rng;

namespace {

ChainData identity_chain(Field f, int s, int r, std::vector<std::vector<long long>> weights) {
  ChainData d;
  d.field = f;
  d.s = s;
  d.ranks.assign(static_cast<std::size_t>(s), r);
  d.node_dims.assign(static_cast<std::size_t>(s - 1), r);
  d.weights = std::move(weights);
  for (int i = 0; i + 1 < s; ++i) {
    d.m_prime.push_back(Mat::identity(f, r));
    d.m_dblprime.push_back(Mat::identity(f, r));
  }
  return d;
}

std::multiset<std::vector<long long>> bundle_multiset(const std::vector<VectorDegree>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("identity chain data reads off its bundles") {
  Field f = Field::rationals();
  ChainData d = identity_chain(f, 2, 2, {{3, 1}, {0, 0}});
  auto res = reduce_chain(d);
  CHECK(bundle_multiset(res.bundles) ==
        std::multiset<std::vector<long long>>{{1, 0}, {3, 0}});
  CHECK(res.transformed.m_prime[0].is_identity());
  CHECK(res.transformed.m_dblprime[0].is_identity());
  // transformed data classifies identically
  auto again = reduce_chain(res.transformed);
  CHECK(again.bundles == res.bundles);
}

TEST_CASE("1x1 scaling node") {
  Field f = Field::rationals();
  ChainData d = identity_chain(f, 2, 1, {{4}, {-1}});
  d.m_prime[0].at(0, 0) = f.from_int(5);
  d.m_dblprime[0].at(0, 0) = f.from_int(-2);
  auto res = reduce_chain(d);
  CHECK(res.bundles == std::vector<VectorDegree>{{4, -1}});
}

TEST_CASE("a permuting node matrix crosses the strands") {
  Field f = Field::rationals();
  ChainData d = identity_chain(f, 2, 2, {{3, 1}, {5, 0}});
  // swap on one side only: row weights (3,1) on the left pair with (0,5)
  d.m_dblprime[0] = Mat::from_rows(f, {{0, 1}, {1, 0}});
  auto res = reduce_chain(d);
  CHECK(bundle_multiset(res.bundles) ==
        std::multiset<std::vector<long long>>{{3, 0}, {1, 5}});
}

TEST_CASE("an upper-weight perturbation does not change the class") {
  Field f = Field::rationals();
  ChainData d = identity_chain(f, 2, 2, {{3, 1}, {5, 0}});
  // adding the weight-1 row into the weight-3 row is admissible, so this
  // data is isomorphic to the identity data
  d.m_prime[0] = Mat::from_rows(f, {{1, 1}, {0, 1}});
  auto res = reduce_chain(d);
  CHECK(bundle_multiset(res.bundles) ==
        std::multiset<std::vector<long long>>{{3, 5}, {1, 0}});
}

TEST_CASE("singular or mismatched data is rejected") {
  Field f = Field::rationals();
  ChainData d = identity_chain(f, 2, 2, {{3, 1}, {0, 0}});
  d.m_prime[0].at(0, 0) = f.zero();
  d.m_prime[0].at(1, 1) = f.zero();
  d.m_prime[0].at(0, 1) = f.one();
  d.m_prime[0].at(1, 0) = f.zero();  // becomes singular
  CHECK_THROWS_AS(reduce_chain(d), error);

  ChainData bad = identity_chain(f, 2, 2, {{3, 1}, {0, 0}});
  bad.ranks[1] = 1;
  bad.weights[1] = {0};
  CHECK_THROWS_AS(reduce_chain(bad), error);
}

TEST_CASE("reduction is invariant under admissible transformations") {
  Rng rng(31);
  for (Field f : {Field::rationals(), Field::fp(7)}) {
    for (int trial = 0; trial < 25; ++trial) {
      int s = static_cast<int>(rng.int_in(1, 4));
      int r = static_cast<int>(rng.int_in(1, 3));
      ChainData d = testsupport::random_vb_chain(rng, f, s, r);
      auto base = reduce_chain(d).bundles;
      for (int k = 0; k < 3; ++k) {
        ChainData t = random_admissible_transform(d, rng.g());
        CHECK(reduce_chain(t).bundles == base);
      }
    }
  }
}

TEST_CASE("degree is conserved componentwise") {
  Rng rng(32);
  Field f = Field::rationals();
  for (int trial = 0; trial < 20; ++trial) {
    int s = static_cast<int>(rng.int_in(1, 4));
    int r = static_cast<int>(rng.int_in(1, 3));
    ChainData d = testsupport::random_vb_chain(rng, f, s, r);
    auto res = reduce_chain(d);
    for (int c = 0; c < s; ++c) {
      long long in_sum = 0, out_sum = 0;
      for (long long w : d.weights[static_cast<std::size_t>(c)]) in_sum += w;
      for (const auto& b : res.bundles) out_sum += b[static_cast<std::size_t>(c)];
      CHECK(in_sum == out_sum);
    }
  }
}

TEST_CASE("torsion-free decomposition agrees with reduce_chain on bundles") {
  Rng rng(33);
  Field f = Field::fp(5);
  for (int trial = 0; trial < 15; ++trial) {
    int s = static_cast<int>(rng.int_in(1, 4));
    int r = static_cast<int>(rng.int_in(1, 3));
    ChainData d = testsupport::random_vb_chain(rng, f, s, r);
    auto intervals = decompose_torsion_free(d);
    auto bundles = reduce_chain(d).bundles;
    REQUIRE(intervals.size() == bundles.size());
    std::multiset<std::vector<long long>> from_iv;
    for (const auto& iv : intervals) {
      CHECK(iv.start == 1);
      CHECK(iv.end == s);
      from_iv.insert(iv.degrees);
    }
    CHECK(from_iv == bundle_multiset(bundles));
  }
}

TEST_CASE("fully split sheaf with empty node") {
  Field f = Field::rationals();
  ChainData d;
  d.field = f;
  d.s = 2;
  d.ranks = {1, 1};
  d.node_dims = {0};
  d.weights = {{7}, {-2}};
  d.m_prime = {Mat(f, 1, 0)};
  d.m_dblprime = {Mat(f, 1, 0)};
  auto ivs = decompose_torsion_free(d);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0] == IntervalLineBundle{1, 1, {7}});
  CHECK(ivs[1] == IntervalLineBundle{2, 2, {-2}});
}

TEST_CASE("partial projection splits off a short interval") {
  Field f = Field::rationals();
  ChainData d;
  d.field = f;
  d.s = 2;
  d.ranks = {2, 1};
  d.node_dims = {1};
  d.weights = {{3, 1}, {0}};
  d.m_prime = {Mat::from_rows(f, {{1}, {0}})};
  d.m_dblprime = {Mat::from_rows(f, {{1}})};
  auto ivs = decompose_torsion_free(d);
  REQUIRE(ivs.size() == 2);
  CHECK(ivs[0] == IntervalLineBundle{1, 1, {1}});
  CHECK(ivs[1] == IntervalLineBundle{1, 2, {3, 0}});
}

TEST_CASE("dependent node columns are rejected") {
  Field f = Field::rationals();
  ChainData d;
  d.field = f;
  d.s = 2;
  d.ranks = {1, 1};
  d.node_dims = {2};
  d.weights = {{0}, {0}};
  d.m_prime = {Mat::from_rows(f, {{1, 1}})};
  d.m_dblprime = {Mat::from_rows(f, {{1, 1}})};
  CHECK_THROWS_AS(decompose_torsion_free(d), error);
}

TEST_CASE("torsion-free classification is invariant and counts ranks") {
  Rng rng(34);
  for (Field f : {Field::rationals(), Field::fp(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      int s = static_cast<int>(rng.int_in(1, 4));
      ChainData d = testsupport::random_tf_chain(rng, f, s);
      auto base = decompose_torsion_free(d);

      // every component is covered by exactly rank-many intervals
      for (int c = 1; c <= s; ++c) {
        int count = 0;
        for (const auto& iv : base) count += (iv.start <= c && c <= iv.end) ? 1 : 0;
        CHECK(count == d.ranks[static_cast<std::size_t>(c - 1)]);
      }

      std::multiset<IntervalLineBundle> base_set(base.begin(), base.end());
      for (int k = 0; k < 3; ++k) {
        ChainData t = random_admissible_transform(d, rng.g());
        auto got = decompose_torsion_free(t);
        CHECK(std::multiset<IntervalLineBundle>(got.begin(), got.end()) == base_set);
      }
    }
  }
}
