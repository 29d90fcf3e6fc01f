#pragma once

#include <random>
#include <set>
#include <vector>

#include "vbcm/band.hpp"
#include "vbcm/chain.hpp"
#include "vbcm/laurent.hpp"
#include "vbcm/wild.hpp"

namespace vbcm {
namespace testsupport {

// Deterministic RNG helpers; std::mt19937_64 has a pinned sequence, and we
// avoid std distributions on purpose (their output is not portable).
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}

  std::uint64_t next(std::uint64_t bound) { return g() % bound; }
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  FieldElem elem(const Field& f, long long lo = -3, long long hi = 3) {
    return f.from_int(int_in(lo, hi));
  }
  FieldElem nonzero(const Field& f, long long lo = -3, long long hi = 3) {
    for (;;) {
      FieldElem e = elem(f, lo, hi);
      if (!e.is_zero()) return e;
    }
  }
};

inline Mat random_matrix(Rng& rng, Field f, int rows, int cols, long long lo = -3,
                         long long hi = 3) {
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.elem(f, lo, hi);
  return m;
}

inline Mat random_invertible(Rng& rng, Field f, int n) {
  for (;;) {
    Mat m = random_matrix(rng, f, n, n);
    if (m.is_invertible()) return m;
  }
}

inline bool exponents_within(const laurent::LaurentMatrix& m, long long bound) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      if (m.at(i, j).min_exp() < -bound || m.at(i, j).max_exp() > bound) return false;
    }
  return true;
}

/// Random invertible Laurent matrix with all entry exponents in [-bound,
/// bound], built from a monomial diagonal by elementary operations (the
/// determinant stays a unit throughout).
inline laurent::LaurentMatrix random_invertible_laurent(Rng& rng, Field f, int n,
                                                        long long bound = 3, int ops = 8) {
  using laurent::LaurentMatrix;
  using laurent::LaurentPoly;
  LaurentMatrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = LaurentPoly::monomial(f, rng.nonzero(f), rng.int_in(-1, 1));
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
    if (i == j) continue;
    LaurentPoly c = LaurentPoly::monomial(f, rng.nonzero(f), rng.int_in(-1, 1));
    LaurentMatrix trial = m;
    if (rng.next(2) == 0) {
      for (int col = 0; col < n; ++col)
        trial.at(i, col) = trial.at(i, col) + c * trial.at(j, col);
    } else {
      for (int row = 0; row < n; ++row)
        trial.at(row, i) = trial.at(row, i) + c * trial.at(row, j);
    }
    if (exponents_within(trial, bound)) m = std::move(trial);
  }
  return m;
}

/// Invertible matrix over k[t] (resp. k[t^-1] when sign < 0) with constant
/// determinant: elementary operations over one-signed monomials applied to a
/// constant invertible matrix.
inline laurent::LaurentMatrix random_one_sided(Rng& rng, Field f, int n, int sign, int ops = 6) {
  using laurent::LaurentMatrix;
  using laurent::LaurentPoly;
  LaurentMatrix m(f, n, n);
  Mat c0 = random_invertible(rng, f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = LaurentPoly::constant(f, c0.at(i, j));
  for (int k = 0; k < ops; ++k) {
    int i = static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.next(static_cast<std::uint64_t>(n)));
    if (i == j) continue;
    long long e = rng.int_in(0, 2) * (sign >= 0 ? 1 : -1);
    LaurentPoly c = LaurentPoly::monomial(f, rng.nonzero(f), e);
    for (int col = 0; col < n; ++col) m.at(i, col) = m.at(i, col) + c * m.at(j, col);
  }
  return m;
}

inline std::vector<long long> random_nonperiodic(Rng& rng, int s, int r, long long lo,
                                                 long long hi) {
  for (;;) {
    std::vector<long long> d(static_cast<std::size_t>(r) * static_cast<std::size_t>(s));
    for (auto& v : d) v = rng.int_in(lo, hi);
    if (band::is_nonperiodic(d, s)) return d;
  }
}

inline band::BandDatum random_band(Rng& rng, Field f, int max_rs = 8, long long lo = -3,
                                   long long hi = 3, int max_m = 3) {
  band::BandDatum b;
  b.s = static_cast<int>(rng.int_in(1, 4));
  int rmax = std::max(1, max_rs / b.s);
  int r = static_cast<int>(rng.int_in(1, rmax));
  b.d = random_nonperiodic(rng, b.s, r, lo, hi);
  b.m = static_cast<int>(rng.int_in(1, max_m));
  b.lambda = rng.nonzero(f);
  return b;
}

inline chain::ChainData random_vb_chain(Rng& rng, Field f, int s, int r, long long wlo = -3,
                                        long long whi = 3) {
  chain::ChainData d;
  d.field = f;
  d.s = s;
  d.ranks.assign(static_cast<std::size_t>(s), r);
  d.node_dims.assign(static_cast<std::size_t>(s - 1), r);
  for (int c = 0; c < s; ++c) {
    std::vector<long long> w(static_cast<std::size_t>(r));
    for (auto& v : w) v = rng.int_in(wlo, whi);
    d.weights.push_back(std::move(w));
  }
  for (int i = 0; i + 1 < s; ++i) {
    d.m_prime.push_back(random_invertible(rng, f, r));
    d.m_dblprime.push_back(random_invertible(rng, f, r));
  }
  return d;
}

inline chain::ChainData random_tf_chain(Rng& rng, Field f, int s) {
  chain::ChainData d;
  d.field = f;
  d.s = s;
  for (int c = 0; c < s; ++c) d.ranks.push_back(static_cast<int>(rng.int_in(1, 3)));
  for (int c = 0; c < s; ++c) {
    std::vector<long long> w(static_cast<std::size_t>(d.ranks[static_cast<std::size_t>(c)]));
    for (auto& v : w) v = rng.int_in(-2, 3);
    d.weights.push_back(std::move(w));
  }
  for (int i = 0; i + 1 < s; ++i) {
    int cap = d.ranks[static_cast<std::size_t>(i)] + d.ranks[static_cast<std::size_t>(i + 1)];
    for (;;) {
      int m = static_cast<int>(rng.int_in(0, cap));
      Mat a = random_matrix(rng, f, d.ranks[static_cast<std::size_t>(i)], m, -2, 2);
      Mat b = random_matrix(rng, f, d.ranks[static_cast<std::size_t>(i + 1)], m, -2, 2);
      if (a.stack(b).rank() == m) {
        d.node_dims.push_back(m);
        d.m_prime.push_back(std::move(a));
        d.m_dblprime.push_back(std::move(b));
        break;
      }
    }
  }
  return d;
}

inline wild::ModulePresentation random_module(Rng& rng, Field f, int n, int gens) {
  wild::ModulePresentation mp;
  mp.n = n;
  for (int g = 0; g < gens; ++g)
    mp.mats.push_back(random_matrix(rng, f, n, n, 0, f.finite() ? static_cast<long long>(f.prime()) - 1 : 3));
  return mp;
}

/// Brute-force orbit enumeration used as an oracle against enumerate_nonneg:
/// generates every non-negative sequence with the right class sums by plain
/// odometer, filters periodic ones, and deduplicates full shift orbits.
inline std::set<std::vector<long long>> orbit_enum_oracle(int s, int r,
                                                          const std::vector<long long>& delta) {
  std::size_t rs = static_cast<std::size_t>(r) * static_cast<std::size_t>(s);
  long long cap = 0;
  for (long long v : delta) cap = std::max(cap, v);
  std::vector<long long> cur(rs, 0);
  std::set<std::vector<long long>> out;
  for (;;) {
    std::vector<long long> sums(static_cast<std::size_t>(s), 0);
    for (std::size_t j = 0; j < rs; ++j) sums[j % static_cast<std::size_t>(s)] += cur[j];
    if (sums == delta && band::is_nonperiodic(cur, s)) {
      std::vector<long long> best = cur;
      for (std::size_t k = static_cast<std::size_t>(s); k < rs; k += static_cast<std::size_t>(s)) {
        std::vector<long long> rot(rs);
        for (std::size_t j = 0; j < rs; ++j) rot[j] = cur[(j + k) % rs];
        best = std::min(best, rot);
      }
      out.insert(best);
    }
    std::size_t pos = 0;
    while (pos < rs && cur[pos] == cap) cur[pos++] = 0;
    if (pos == rs) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace testsupport
}  // namespace vbcm
