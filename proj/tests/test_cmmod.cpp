#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "vbcm/cmmod.hpp"

using namespace vbcm;
using namespace vbcm::cmmod;
using testsupport::Rng;

namespace {

// Independent evaluation of n_d straight from its two ingredients.
long long nd_oracle(const std::vector<long long>& d, const CuspSingularity& sing) {
  long long sum = 0;
  std::vector<long long> diff(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    long long bi = sing.b[i % static_cast<std::size_t>(sing.s)];
    sum += std::max(d[i] - bi + 1, 0ll);
    diff[i] = d[i] - bi;
  }
  return sum - cohom::theta(diff);
}

long long euler_phi(long long m) {
  long long out = m;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    out -= out / p;
  }
  if (m > 1) out -= out / m;
  return out;
}

}  // namespace

TEST_CASE("n_d on pinned cases") {
  CuspSingularity s1{1, {3}};
  CHECK(n_d({3}, s1) == 0);   // d = B
  CHECK(n_d({4}, s1) == 1);   // (4-3+1)^+ = 2, theta((1)) = 1
  CHECK(n_d({1}, s1) == 0);   // entries below b-1 contribute nothing
  CHECK(n_d({5}, s1) == 2);
  CHECK_THROWS_AS(n_d({1, 2}, CuspSingularity{3, {2, 2, 2}}), error);
}

TEST_CASE("n_d(B) vanishes for every small cusp singularity") {
  for (int s = 1; s <= 4; ++s) {
    std::vector<long long> b(static_cast<std::size_t>(s), 1);
    for (;;) {
      CuspSingularity sing{s, b};
      std::vector<long long> B;
      for (int rep = 0; rep < 1; ++rep) B.insert(B.end(), b.begin(), b.end());
      CHECK(n_d(B, sing) == 0);
      CHECK(n_d(B, sing) == nd_oracle(B, sing));
      std::size_t pos = 0;
      while (pos < b.size() && b[pos] == 5) b[pos++] = 1;
      if (pos == b.size()) break;
      ++b[pos];
    }
  }
}

TEST_CASE("advisory flag on the intersection data") {
  CHECK(validate_cusp(CuspSingularity{1, {3}}));
  CHECK_FALSE(validate_cusp(CuspSingularity{1, {2}}));   // sum(b_i - 2) = 0
  CHECK_FALSE(validate_cusp(CuspSingularity{2, {1, 4}}));  // some b_i < 2
  CHECK_THROWS_AS(validate_cusp(CuspSingularity{1, {0}}), error);
}

TEST_CASE("cusp enumeration at rank 1 matches the hand count") {
  CuspSingularity sing{1, {3}};
  auto list = enumerate_cm_cusp(sing, 1);
  REQUIRE(list.size() == 4);
  CHECK(list[0].variant == Variant::kRing);
  CHECK(list[1].variant == Variant::kBand);
  CHECK(list[1].d == std::vector<long long>{1});
  CHECK(list[2].d == std::vector<long long>{2});
  CHECK(list[3].d == std::vector<long long>{3});
  CHECK(list[3].lambda_excluded == std::vector<std::string>{"0", "1"});
  CHECK(list[1].lambda_excluded == std::vector<std::string>{"0"});
}

TEST_CASE("cusp enumeration contains the special module at rank m+1") {
  CuspSingularity sing{1, {3}};
  for (long long rank = 2; rank <= 5; ++rank) {
    auto list = enumerate_cm_cusp(sing, rank);
    bool has_special = false;
    for (const auto& d : list)
      if (d.variant == Variant::kSpecial) {
        has_special = true;
        CHECK(d.rank == d.m + 1);
        CHECK(d.m == rank - 1);
      }
    CHECK(has_special);
  }
  CHECK(enumerate_cm_cusp(sing, 0).empty());
}

TEST_CASE("every emitted band family recomputes its rank and is suitable") {
  for (const CuspSingularity& sing :
       {CuspSingularity{1, {3}}, CuspSingularity{2, {2, 3}}, CuspSingularity{3, {2, 2, 3}}}) {
    long long max_rank = sing.s >= 3 ? 3 : 4;
    for (long long rank = 1; rank <= max_rank; ++rank) {
      auto list = enumerate_cm_cusp(sing, rank);
      CHECK(!list.empty());
      for (const auto& desc : list) {
        if (desc.variant != Variant::kBand) continue;
        CHECK(cohom::is_suitable(desc.d));
        CHECK(band::is_nonperiodic(desc.d, sing.s));
        CHECK(band::canonical_shift(desc.d, sing.s) == desc.d);
        long long r = static_cast<long long>(desc.d.size()) / sing.s;
        CHECK(desc.rank == desc.m * (r + nd_oracle(desc.d, sing)));
      }
      // deterministic and duplicate-free
      CHECK(list == enumerate_cm_cusp(sing, rank));
      for (std::size_t i = 0; i + 1 < list.size(); ++i) CHECK(!(list[i] == list[i + 1]));
    }
  }
}

TEST_CASE("sample lambda instantiation avoids excluded values") {
  Field f = Field::rationals();
  CuspSingularity sing{1, {3}};
  auto list = enumerate_cm_cusp(sing, 1, f.one());
  for (const auto& desc : list) {
    if (desc.variant != Variant::kBand) continue;
    REQUIRE(desc.lambda_sample.has_value());
    if (desc.d == std::vector<long long>{3})
      CHECK(*desc.lambda_sample == "2/1");  // 1 is excluded for d = B
    else
      CHECK(*desc.lambda_sample == "1/1");
  }
}

TEST_CASE("simple elliptic rank formula") {
  SimpleEllipticSingularity b1{1};
  CHECK(rank_simple_elliptic(1, 1, 1, b1) == 1);
  SimpleEllipticSingularity b2{2};
  CHECK(rank_simple_elliptic(1, 3, 2, b2) == 4);  // (b+1-b)^+ = 1
  CHECK_THROWS_AS(rank_simple_elliptic(2, 4, 1, b1), error);  // not coprime
  CHECK_THROWS_AS(rank_simple_elliptic(3, 2, 1, b1), error);  // r > d
  CHECK_THROWS_AS(rank_simple_elliptic(1, 1, 0, b1), error);
}

TEST_CASE("simple elliptic enumeration at rank 1") {
  SimpleEllipticSingularity sing{1};
  auto list = enumerate_cm_elliptic(sing, 1);
  REQUIRE(list.size() == 2);
  CHECK(list[0].variant == Variant::kRing);
  CHECK(list[1].variant == Variant::kBand);
  CHECK(list[1].d == std::vector<long long>{1, 1});
  CHECK(list[1].m == 1);
  CHECK(list[1].point_excluded_origin);
  CHECK(enumerate_cm_elliptic(sing, 0).empty());
}

TEST_CASE("family ranks recompute and the special module appears") {
  for (long long b : {1, 2, 3}) {
    SimpleEllipticSingularity sing{b};
    for (long long rank = 1; rank <= 6; ++rank) {
      auto list = enumerate_cm_elliptic(sing, rank);
      bool has_special = false;
      long long n1_families = 0;
      for (const auto& desc : list) {
        if (desc.variant == Variant::kSpecial) {
          has_special = true;
          CHECK(desc.rank == desc.m + 1);
        }
        if (desc.variant == Variant::kBand) {
          long long r = desc.d[0], d = desc.d[1], n = desc.m;
          CHECK(rank_simple_elliptic(r, d, n, sing) == rank);
          CHECK(desc.point_excluded_origin == (r == 1 && d == sing.b));
          if (n == 1) ++n1_families;
        }
      }
      CHECK(has_special == (rank >= 2));
      // family count bound per rank value
      CHECK(n1_families <= b * euler_phi(rank) + 1);
    }
  }
}

TEST_CASE("sigma action on band data") {
  Field f = Field::rationals();
  auto res = sigma_act({1, 2, 3}, 1, f.from_int(2), 3);
  CHECK(res.d == std::vector<long long>{1, 3, 2});
  CHECK(res.lambda == f.parse("1/2"));

  auto single = sigma_act({7}, 2, f.from_int(3), 1);
  CHECK(single.d == std::vector<long long>{7});
  CHECK(single.m == 2);

  CHECK_THROWS_AS(sigma_act({1, 2}, 1, f.zero(), 2), error);
  CHECK_THROWS_AS(sigma_act({1, 2, 3}, 1, f.one(), 2), error);
}

TEST_CASE("sigma is an involution") {
  Field f = Field::fp(11);
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    int t = static_cast<int>(rng.int_in(1, 4));
    int r = static_cast<int>(rng.int_in(1, 3));
    std::vector<long long> d(static_cast<std::size_t>(t * r));
    for (auto& v : d) v = rng.int_in(-4, 4);
    FieldElem lam = rng.nonzero(f);
    auto once = sigma_act(d, 2, lam, t);
    auto twice = sigma_act(once.d, once.m, once.lambda, t);
    CHECK(twice.d == d);
    CHECK(twice.lambda == lam);
    CHECK(is_sigma_shift_symmetric(d, t) == is_sigma_shift_symmetric(once.d, t));
  }
}

TEST_CASE("sigma shift symmetry") {
  CHECK(is_sigma_shift_symmetric({2, 2, 2}, 3));  // B with constant b
  CHECK_FALSE(is_sigma_shift_symmetric({1, 2, 3, 4}, 2));
  CHECK(is_sigma_shift_symmetric({5, 1, 1}, 3));  // palindromic after the head
  CHECK(is_sigma_shift_symmetric({1, 2, 3, 2}, 2));
  CHECK_FALSE(is_sigma_shift_symmetric({1, 2, 2, 1}, 2));  // reversal is not a 2-shift
}

TEST_CASE("Q-cusp data validation") {
  CHECK_NOTHROW(validate_qcusp(QCuspData{3, {2, 3, 3}}));  // b_2 = b_3 mirrored
  CHECK_THROWS_AS(validate_qcusp(QCuspData{3, {2, 3, 4}}), error);
  CHECK_NOTHROW(validate_qcusp(QCuspData{1, {3}}));
  CHECK_NOTHROW(validate_qcusp(QCuspData{4, {2, 3, 5, 3}}));
}

TEST_CASE("Q-cusp enumeration structure") {
  QCuspData data{1, {3}};
  auto rank1 = enumerate_cm_qcusp(data, 1);
  bool has_a = false, has_bminus = false;
  for (const auto& d : rank1) {
    if (d.family == "A") has_a = true;
    if (d.family == "B_minus") has_bminus = true;
    if (d.family == "N") {
      // every length-1 sequence is sigma-symmetric
      CHECK(d.lambda_excluded == std::vector<std::string>{"0", "1", "-1"});
    }
  }
  CHECK(has_a);
  CHECK(has_bminus);

  auto rank2 = enumerate_cm_qcusp(data, 2);
  int special_halves = 0, minus_halves = 0;
  for (const auto& d : rank2) {
    if (d.from_special) {
      ++special_halves;
      CHECK(d.lambda == "1");
      CHECK(d.m == 1);
      CHECK(d.d == std::vector<long long>{3});
    }
    if ((d.family == "N_prime" || d.family == "N_dblprime") && d.lambda == "-1" &&
        d.d == std::vector<long long>{3})
      ++minus_halves;
  }
  CHECK(special_halves == 2);  // N' and N'' of the rank-2 special module
  // lambda = -1 splits for d = B with m = 2 live in the rank-2 bucket
  CHECK(minus_halves == 2);
}

TEST_CASE("non-symmetric orbits appear once with free lambda") {
  QCuspData data{2, {2, 2}};
  // rank 3 allows sequences of length 6 over the cover
  auto list = enumerate_cm_qcusp(data, 3);
  for (const auto& d : list) {
    if (d.family != "N") continue;
    bool symmetric = is_sigma_shift_symmetric(d.d, data.t);
    if (symmetric)
      CHECK(d.lambda_excluded.size() == 3);
    else
      CHECK(d.lambda_excluded == std::vector<std::string>{"0"});
  }
  // no two entries share (family, d, m, lambda)
  for (std::size_t i = 0; i + 1 < list.size(); ++i) CHECK(!(list[i] == list[i + 1]));
}
