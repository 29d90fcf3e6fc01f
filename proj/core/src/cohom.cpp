#include "vbcm/cohom.hpp"

#include <numeric>

namespace vbcm {
namespace cohom {

long long pos_part(long long a) { return a > 0 ? a : 0; }
long long neg_part(long long a) { return a < 0 ? -a : 0; }

std::vector<PositivePart> positive_parts(const std::vector<long long>& d) {
  std::vector<PositivePart> out;
  std::size_t n = d.size();
  if (n == 0) return out;
  bool all_nonneg = true;
  for (long long v : d) all_nonneg = all_nonneg && v >= 0;
  if (all_nonneg) {
    out.push_back(PositivePart{0, n, d});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    // a part starts at i when d[i] >= 0 and the cyclic predecessor is negative
    if (d[i] < 0 || d[(i + n - 1) % n] >= 0) continue;
    PositivePart p;
    p.start = i;
    for (std::size_t k = 0; k < n && d[(i + k) % n] >= 0; ++k) {
      p.entries.push_back(d[(i + k) % n]);
      ++p.length;
    }
    out.push_back(std::move(p));
  }
  return out;
}

long long theta(const std::vector<long long>& d) {
  long long total = 0;
  for (const PositivePart& p : positive_parts(d)) {
    bool whole = p.length == d.size();
    bool zero = std::all_of(p.entries.begin(), p.entries.end(), [](long long v) { return v == 0; });
    total += static_cast<long long>(p.length) + ((whole || zero) ? 0 : 1);
  }
  return total;
}

CohomDims cohomology(const band::BandDatum& b) {
  band::validate(b);
  long long rs = static_cast<long long>(b.d.size());
  long long sum_pos = 0, sum_neg = 0, total = 0;
  for (long long v : b.d) {
    sum_pos += pos_part(v + 1);
    sum_neg += neg_part(v + 1);
    total += v;
  }
  long long th = theta(b.d);
  bool zero_seq = std::all_of(b.d.begin(), b.d.end(), [](long long v) { return v == 0; });
  long long delta = (zero_seq && b.lambda.is_one()) ? 1 : 0;
  CohomDims out;
  out.h0 = static_cast<long long>(b.m) * (sum_pos - th) + delta;
  out.h1 = static_cast<long long>(b.m) * (sum_neg + rs - th) + delta;
  if (out.h0 - out.h1 != static_cast<long long>(b.m) * total)
    fail(errc::internal, "Euler characteristic identity violated");
  return out;
}

bool is_suitable(const std::vector<long long>& d) {
  std::size_t n = d.size();
  if (n == 0) return false;
  bool positive = false;
  for (long long v : d) {
    if (v < 0) return false;
    if (v > 0) positive = true;
  }
  if (!positive) return false;
  // condition 3: some shift equals (0,1,...,1) iff exactly one zero, rest ones
  std::size_t zeros = 0, ones = 0;
  for (long long v : d) {
    if (v == 0) ++zeros;
    if (v == 1) ++ones;
  }
  if (zeros == 1 && ones == n - 1) return false;
  // condition 2: a cyclic substring 0,1,...,1,0 (the run of ones may be empty)
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] != 0) continue;
    for (std::size_t k = 1; k < n; ++k) {
      long long v = d[(i + k) % n];
      if (v == 1) continue;
      if (v == 0) return false;
      break;
    }
  }
  return true;
}

bool is_generically_spanned(const band::BandDatum& b) {
  band::validate(b);
  bool zero_seq = std::all_of(b.d.begin(), b.d.end(), [](long long v) { return v == 0; });
  if (zero_seq && b.m == 1 && b.lambda.is_one()) return true;
  return is_suitable(b.d);
}

CohomDims cech_oracle(const band::GluingData& g, const std::vector<long long>& degrees) {
  if (static_cast<int>(degrees.size()) != g.r * g.s)
    fail(errc::size_mismatch, "degree list does not match the gluing data");
  Field f = g.field;
  int rs = g.r * g.s;
  int m = g.m;

  // Unknowns: for strand j and copy k, the coefficients of a polynomial of
  // degree <= d_j (none when d_j < 0).
  std::vector<int> offset(static_cast<std::size_t>(rs) + 1, 0);
  for (int j = 0; j < rs; ++j) {
    long long dim1 = pos_part(degrees[static_cast<std::size_t>(j)] + 1);
    offset[static_cast<std::size_t>(j) + 1] =
        offset[static_cast<std::size_t>(j)] + static_cast<int>(dim1) * m;
  }
  int nvars = offset[static_cast<std::size_t>(rs)];

  // Gluing j identifies the value of strand j at t=0 (constant coefficient)
  // with the value of strand j+1 at t=infinity (top coefficient) through the
  // transpose of the identification matrix.
  Mat sys(f, m * rs, nvars);
  int row = 0;
  for (int j = 0; j < rs; ++j) {
    int jn = (j + 1) % rs;
    const Mat& c = g.pair_mats[static_cast<std::size_t>(j)];
    long long dj = degrees[static_cast<std::size_t>(j)];
    long long djn = degrees[static_cast<std::size_t>(jn)];
    int per_j = static_cast<int>(pos_part(dj + 1));
    int per_jn = static_cast<int>(pos_part(djn + 1));
    for (int k = 0; k < m; ++k) {
      // v_k - sum_l C^T[k][l] u_l = 0, u = values at 0 on strand j, v = values
      // at infinity on strand j+1
      if (per_jn > 0) {
        int top_idx = offset[static_cast<std::size_t>(jn)] + k * per_jn + (per_jn - 1);
        sys.at(row, top_idx) += f.one();
      }
      if (per_j > 0) {
        for (int l = 0; l < m; ++l) {
          if (c.at(l, k).is_zero()) continue;  // C^T[k][l] = C[l][k]
          int const_idx = offset[static_cast<std::size_t>(j)] + l * per_j;
          sys.at(row, const_idx) -= c.at(l, k);
        }
      }
      ++row;
    }
  }

  long long h0 = nvars - sys.rank();
  long long chi = 0;
  for (long long v : degrees) chi += v;
  chi *= m;
  CohomDims out;
  out.h0 = h0;
  out.h1 = h0 - chi;
  if (out.h1 < 0) fail(errc::internal, "negative h1 from the section system");
  return out;
}

CohomDims atiyah_cohom(long long r, long long d, long long n, bool at_origin) {
  if (r <= 0) fail(errc::range_violation, "rank parameter must be positive");
  if (n < 1) fail(errc::range_violation, "twist length must be >= 1");
  if (std::gcd(r, d < 0 ? -d : d) != 1) fail(errc::not_coprime, "rank and degree must be coprime");
  CohomDims out;
  if (d > 0) {
    out.h0 = n * d;
    out.h1 = 0;
  } else if (d < 0) {
    out.h0 = 0;
    out.h1 = n * (-d);
  } else {
    out.h0 = out.h1 = at_origin ? 1 : 0;
  }
  return out;
}

}  // namespace cohom
}  // namespace vbcm
