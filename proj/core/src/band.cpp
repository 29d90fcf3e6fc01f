#include "vbcm/band.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vbcm {
namespace band {

bool is_nonperiodic(const std::vector<long long>& d, int s) {
  if (s < 1) fail(errc::invalid_argument, "cycle length must be >= 1");
  if (d.empty() || d.size() % static_cast<std::size_t>(s) != 0)
    fail(errc::length_not_multiple, "sequence length must be a positive multiple of s");
  std::size_t r = d.size() / static_cast<std::size_t>(s);
  for (std::size_t l = 1; l < r; ++l) {
    if (r % l != 0) continue;
    std::size_t period = l * static_cast<std::size_t>(s);
    bool repeats = true;
    for (std::size_t j = period; j < d.size() && repeats; ++j)
      repeats = d[j] == d[j - period];
    if (repeats) return false;
  }
  return true;
}

void validate(const BandDatum& b) {
  if (b.s < 1) fail(errc::invalid_band_datum, "cycle length must be >= 1");
  if (b.m < 1) fail(errc::invalid_band_datum, "multiplicity must be >= 1");
  if (b.lambda.is_zero()) fail(errc::invalid_band_datum, "lambda must be nonzero");
  bool nonper;
  try {
    nonper = is_nonperiodic(b.d, b.s);
  } catch (const error&) {
    fail(errc::invalid_band_datum, "sequence length must be a positive multiple of s");
  }
  if (!nonper) fail(errc::invalid_band_datum, "sequence is s-periodic");
}

std::vector<long long> canonical_shift(const std::vector<long long>& d, int s) {
  std::size_t n = d.size();
  std::vector<long long> best = d;
  std::vector<long long> cur(n);
  for (std::size_t k = static_cast<std::size_t>(s); k < n; k += static_cast<std::size_t>(s)) {
    for (std::size_t j = 0; j < n; ++j) cur[j] = d[(j + k) % n];
    if (cur < best) best = cur;
  }
  return best;
}

BandDatum canonical_form(const BandDatum& b) {
  validate(b);
  BandDatum out = b;
  out.d = canonical_shift(b.d, b.s);
  return out;
}

bool are_isomorphic(const BandDatum& a, const BandDatum& b) {
  validate(a);
  validate(b);
  if (a.s != b.s) fail(errc::invalid_band_datum, "band data live on different cycles");
  if (a.m != b.m || a.lambda != b.lambda || a.d.size() != b.d.size()) return false;
  return canonical_shift(a.d, a.s) == canonical_shift(b.d, b.s);
}

RankDegree rank_degree(const BandDatum& b) {
  validate(b);
  std::size_t rs = b.d.size();
  RankDegree out;
  out.rank = static_cast<long long>(b.m) * static_cast<long long>(rs / static_cast<std::size_t>(b.s));
  out.degree.assign(static_cast<std::size_t>(b.s), 0);
  for (std::size_t j = 0; j < rs; ++j) out.degree[j % static_cast<std::size_t>(b.s)] += b.d[j];
  return out;
}

Mat GluingData::node_matrix(int i) const {
  if (i < 0 || i >= s) fail(errc::invalid_argument, "node index out of range");
  std::vector<int> strands;
  for (int j = 0; j < r * s; ++j)
    if (j % s == i) strands.push_back(j);
  int n = m * static_cast<int>(strands.size());
  Mat out(field, n, n);
  for (std::size_t k = 0; k < strands.size(); ++k) {
    const Mat& blk = pair_mats[static_cast<std::size_t>(strands[k])];
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        out.at(static_cast<int>(k) * m + a, static_cast<int>(k) * m + b) = blk.at(a, b);
  }
  return out;
}

GluingData build_gluing(const BandDatum& b) {
  validate(b);
  Field f = b.lambda.field();
  GluingData g;
  g.s = b.s;
  g.r = static_cast<int>(b.d.size()) / b.s;
  g.m = b.m;
  g.field = f;
  int rs = g.r * g.s;
  for (int j = 0; j < rs; ++j) g.pair_mats.push_back(Mat::identity(f, b.m));
  // closing strand: Jordan cell with eigenvalue lambda, copy k coupled to k-1
  Mat& close = g.pair_mats[static_cast<std::size_t>(rs - 1)];
  close = Mat(f, b.m, b.m);
  for (int k = 0; k < b.m; ++k) {
    close.at(k, k) = b.lambda;
    if (k > 0) close.at(k, k - 1) = f.one();
  }
  return g;
}

namespace {

void enumerate_rec(int s, int r, const std::vector<long long>& delta, std::size_t pos,
                   std::vector<long long>& cur, std::vector<long long>& remaining,
                   std::set<std::vector<long long>>& out) {
  std::size_t rs = static_cast<std::size_t>(r) * static_cast<std::size_t>(s);
  if (pos == rs) {
    if (is_nonperiodic(cur, s)) out.insert(canonical_shift(cur, s));
    return;
  }
  std::size_t cls = pos % static_cast<std::size_t>(s);
  // last slot of its residue class takes the remainder
  bool last = pos + static_cast<std::size_t>(s) >= rs;
  if (last) {
    cur[pos] = remaining[cls];
    remaining[cls] = 0;
    enumerate_rec(s, r, delta, pos + 1, cur, remaining, out);
    remaining[cls] = cur[pos];
    return;
  }
  for (long long v = 0; v <= remaining[cls]; ++v) {
    cur[pos] = v;
    remaining[cls] -= v;
    enumerate_rec(s, r, delta, pos + 1, cur, remaining, out);
    remaining[cls] += v;
  }
}

}  // namespace

std::vector<std::vector<long long>> enumerate_nonneg(int s, int r,
                                                     const std::vector<long long>& delta) {
  if (s < 1 || r < 1) fail(errc::invalid_argument, "s and r must be >= 1");
  if (static_cast<int>(delta.size()) != s) fail(errc::invalid_argument, "delta length != s");
  for (long long v : delta)
    if (v < 0) fail(errc::invalid_argument, "delta entries must be non-negative");
  std::set<std::vector<long long>> reps;
  std::vector<long long> cur(static_cast<std::size_t>(r) * static_cast<std::size_t>(s), 0);
  std::vector<long long> remaining = delta;
  enumerate_rec(s, r, delta, 0, cur, remaining, reps);
  return {reps.begin(), reps.end()};
}

long long nu_count(int s, int r, const std::vector<long long>& delta) {
  return static_cast<long long>(enumerate_nonneg(s, r, delta).size());
}

chain::ChainData cut_cycle(const BandDatum& b) {
  validate(b);
  Field f = b.lambda.field();
  int rs = static_cast<int>(b.d.size());
  chain::ChainData out;
  out.field = f;
  out.s = rs;
  out.ranks.assign(static_cast<std::size_t>(rs), b.m);
  out.node_dims.assign(static_cast<std::size_t>(rs - 1), b.m);
  for (int j = 0; j < rs; ++j)
    out.weights.push_back(std::vector<long long>(static_cast<std::size_t>(b.m),
                                                 b.d[static_cast<std::size_t>(j)]));
  for (int j = 0; j + 1 < rs; ++j) {
    out.m_prime.push_back(Mat::identity(f, b.m));
    out.m_dblprime.push_back(Mat::identity(f, b.m));
  }
  return out;
}

const char* to_string(CurveVbType t) {
  switch (t) {
    case CurveVbType::kFinite: return "FINITE";
    case CurveVbType::kTameBounded: return "TAME_BOUNDED";
    case CurveVbType::kTameUnbounded: return "TAME_UNBOUNDED";
    case CurveVbType::kWild: return "WILD";
  }
  return "?";
}

CurveVbType curve_vb_type(const DualGraph& g) {
  int n = static_cast<int>(g.genera.size());
  if (n == 0) fail(errc::invalid_argument, "dual graph needs at least one vertex");
  for (auto [u, v] : g.edges)
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::invalid_argument, "edge endpoint out of range");

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.edges) parent[static_cast<std::size_t>(find(u))] = find(v);
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) fail(errc::disconnected, "dual graph is disconnected");

  bool all_rational = std::all_of(g.genera.begin(), g.genera.end(), [](int x) { return x == 0; });
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  bool has_loop = false;
  for (auto [u, v] : g.edges) {
    if (u == v) {
      has_loop = true;
      degree[static_cast<std::size_t>(u)] += 2;
    } else {
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(v)];
    }
  }
  int e = static_cast<int>(g.edges.size());
  int maxdeg = *std::max_element(degree.begin(), degree.end());

  if (n == 1 && e == 0 && g.genera[0] == 1) return CurveVbType::kTameBounded;
  if (all_rational && !has_loop && e == n - 1 && maxdeg <= 2) return CurveVbType::kFinite;
  if (all_rational && e == n && maxdeg == 2 &&
      std::all_of(degree.begin(), degree.end(), [](int dg) { return dg == 2; }))
    return CurveVbType::kTameUnbounded;
  return CurveVbType::kWild;
}

}  // namespace band
}  // namespace vbcm
