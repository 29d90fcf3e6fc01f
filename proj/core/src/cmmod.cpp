#include "vbcm/cmmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vbcm {
namespace cmmod {

bool validate_cusp(const CuspSingularity& sing) {
  if (sing.s < 1) fail(errc::invalid_argument, "cusp singularity needs s >= 1");
  if (static_cast<int>(sing.b.size()) != sing.s)
    fail(errc::invalid_argument, "self-intersection vector length != s");
  long long excess = 0;
  bool all_ge2 = true;
  for (long long bi : sing.b) {
    if (bi < 1) fail(errc::invalid_argument, "self-intersection numbers must satisfy b_i >= 1");
    all_ge2 = all_ge2 && bi >= 2;
    excess += bi - 2;
  }
  return all_ge2 && excess > 0;
}

void validate_elliptic(const SimpleEllipticSingularity& sing) {
  if (sing.b < 1) fail(errc::invalid_argument, "simple elliptic singularity needs b >= 1");
}

void validate_qcusp(const QCuspData& data) {
  if (data.t < 1) fail(errc::invalid_argument, "Q-cusp data needs t >= 1");
  if (static_cast<int>(data.b.size()) != data.t)
    fail(errc::invalid_argument, "self-intersection vector length != t");
  for (long long bi : data.b)
    if (bi < 1) fail(errc::invalid_argument, "self-intersection numbers must satisfy b_i >= 1");
  for (int i = 0; i < data.t; ++i) {
    int j = (data.t - i) % data.t;
    if (data.b[static_cast<std::size_t>(i)] != data.b[static_cast<std::size_t>(j)])
      fail(errc::invalid_argument, "b is not invariant under the reflection");
  }
}

long long n_d(const std::vector<long long>& d, const CuspSingularity& sing) {
  validate_cusp(sing);
  if (d.empty() || d.size() % static_cast<std::size_t>(sing.s) != 0)
    fail(errc::length_not_multiple, "sequence length must be a positive multiple of s");
  std::vector<long long> shifted(d.size());
  long long sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    long long bi = sing.b[i % static_cast<std::size_t>(sing.s)];
    sum += cohom::pos_part(d[i] - bi + 1);
    shifted[i] = d[i] - bi;
  }
  return sum - cohom::theta(shifted);
}

const char* to_string(Variant v) {
  switch (v) {
    case Variant::kRing: return "ring";
    case Variant::kBand: return "band";
    case Variant::kSpecial: return "special";
  }
  return "?";
}

namespace {

bool descriptor_less(const CMDescriptor& a, const CMDescriptor& b) {
  if (a.variant != b.variant) return static_cast<int>(a.variant) < static_cast<int>(b.variant);
  if (a.d.size() != b.d.size()) return a.d.size() < b.d.size();
  if (a.d != b.d) return a.d < b.d;
  return a.m < b.m;
}

// All suitable, non-s-periodic sequences d of length r*s with n_d(d) equal to
// target, up to s-shift. n_d decomposes over the cyclic runs of positions
// with d_i >= b_i: a run with excess sum E > 0 contributes E - 1 (E when the
// run is the whole cycle), an all-zero-excess run contributes nothing. The
// search prunes on the partial run decomposition, which only underestimates
// the final value (cyclic merging of the first and last run never lowers it).
std::vector<std::vector<long long>> suitable_with_nd(const CuspSingularity& sing, int r,
                                                     long long target) {
  std::size_t rs = static_cast<std::size_t>(r) * static_cast<std::size_t>(sing.s);
  std::set<std::vector<long long>> reps;
  std::vector<long long> cur(rs, 0);

  auto rec = [&](auto&& self, std::size_t pos, long long closed, long long run_excess) -> void {
    if (pos == rs) {
      if (!cohom::is_suitable(cur)) return;
      if (!band::is_nonperiodic(cur, sing.s)) return;
      if (n_d(cur, sing) != target) return;
      reps.insert(band::canonical_shift(cur, sing.s));
      return;
    }
    long long bi = sing.b[pos % static_cast<std::size_t>(sing.s)];
    // values below b_i close the current run
    long long after_close = closed + (run_excess > 0 ? run_excess - 1 : 0);
    if (after_close <= target) {
      for (long long v = 0; v < bi; ++v) {
        cur[pos] = v;
        self(self, pos + 1, after_close, -1);
      }
    }
    // values >= b_i extend (or open) a run
    for (long long e = 0;; ++e) {
      long long next_excess = (run_excess < 0 ? 0 : run_excess) + e;
      if (closed + (next_excess > 0 ? next_excess - 1 : 0) > target) break;
      cur[pos] = bi + e;
      self(self, pos + 1, closed, next_excess);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0, -1);
  return {reps.begin(), reps.end()};
}

std::vector<long long> canonical_b(const CuspSingularity& sing) {
  return band::canonical_shift(sing.b, sing.s);
}

std::string pick_sample(const FieldElem& wanted, const std::vector<std::string>& excluded) {
  Field f = wanted.field();
  FieldElem cand = wanted;
  for (int step = 0; step < 64; ++step) {
    std::string s = cand.to_string();
    if (std::find(excluded.begin(), excluded.end(), s) == excluded.end() && !cand.is_zero())
      return s;
    cand = cand + f.one();
  }
  fail(errc::internal, "could not pick a sample lambda");
}

}  // namespace

std::vector<CMDescriptor> enumerate_cm_cusp(const CuspSingularity& sing, long long rank,
                                            std::optional<FieldElem> sample_lambda) {
  validate_cusp(sing);
  std::vector<CMDescriptor> out;
  if (rank < 1) return out;
  if (rank == 1) {
    CMDescriptor ring;
    ring.variant = Variant::kRing;
    ring.rank = 1;
    out.push_back(ring);
  }
  std::vector<long long> bcanon = canonical_b(sing);
  for (int r = 1; r <= rank; ++r) {
    for (int m = 1; static_cast<long long>(m) * r <= rank; ++m) {
      if (rank % m != 0) continue;
      long long target = rank / m - r;
      if (target < 0) continue;
      for (auto& d : suitable_with_nd(sing, r, target)) {
        CMDescriptor desc;
        desc.variant = Variant::kBand;
        desc.rank = rank;
        desc.d = d;
        desc.m = m;
        desc.lambda_excluded = {"0"};
        if (r == 1 && d == bcanon) desc.lambda_excluded.push_back("1");
        if (sample_lambda) {
          std::vector<std::string> ex = desc.lambda_excluded;
          if (sample_lambda->field() == Field::rationals()) ex.push_back("0/1");
          if (r == 1 && d == bcanon && sample_lambda->field() == Field::rationals())
            ex.push_back("1/1");
          desc.lambda_sample = pick_sample(*sample_lambda, ex);
        }
        out.push_back(std::move(desc));
      }
    }
  }
  if (rank >= 2) {
    CMDescriptor sp;
    sp.variant = Variant::kSpecial;
    sp.rank = rank;
    sp.m = static_cast<int>(rank - 1);
    sp.d = sing.b;
    out.push_back(sp);
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long rank_simple_elliptic(long long r, long long d, long long n,
                               const SimpleEllipticSingularity& sing) {
  validate_elliptic(sing);
  if (n < 1) fail(errc::range_violation, "multiplicity n must be >= 1");
  if (r < 1) fail(errc::range_violation, "r must be >= 1");
  if (r > d) fail(errc::range_violation, "family requires r <= d");
  if (std::gcd(r, d) != 1) fail(errc::not_coprime, "r and d must be coprime");
  return n * (r + cohom::pos_part(d - sing.b * r));
}

std::vector<CMDescriptor> enumerate_cm_elliptic(const SimpleEllipticSingularity& sing,
                                                long long rank) {
  validate_elliptic(sing);
  std::vector<CMDescriptor> out;
  if (rank < 1) return out;
  if (rank == 1) {
    CMDescriptor ring;
    ring.variant = Variant::kRing;
    ring.rank = 1;
    out.push_back(ring);
  }
  for (long long n = 1; n <= rank; ++n) {
    if (rank % n != 0) continue;
    long long q = rank / n;  // r + (d - br)^+
    // d <= br: r = q and d runs through [q, bq]
    for (long long d = q; d <= sing.b * q; ++d) {
      if (std::gcd(q, d) != 1) continue;
      CMDescriptor fam;
      fam.variant = Variant::kBand;
      fam.rank = rank;
      fam.d = {q, d};
      fam.m = static_cast<int>(n);
      fam.point_excluded_origin = (q == 1 && d == sing.b);
      out.push_back(std::move(fam));
    }
    // d > br: d = br + (q - r) for r < q
    for (long long r = 1; r < q; ++r) {
      long long d = sing.b * r + (q - r);
      if (std::gcd(r, d) != 1) continue;
      CMDescriptor fam;
      fam.variant = Variant::kBand;
      fam.rank = rank;
      fam.d = {r, d};
      fam.m = static_cast<int>(n);
      out.push_back(std::move(fam));
    }
  }
  if (rank >= 2) {
    CMDescriptor sp;
    sp.variant = Variant::kSpecial;
    sp.rank = rank;
    sp.m = static_cast<int>(rank - 1);
    out.push_back(sp);
  }
  std::sort(out.begin(), out.end(), descriptor_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SigmaResult sigma_act(const std::vector<long long>& d, int m, const FieldElem& lambda, int t) {
  if (lambda.is_zero()) fail(errc::zero_lambda, "lambda must be nonzero");
  if (t < 1 || d.empty() || d.size() % static_cast<std::size_t>(t) != 0)
    fail(errc::length_not_multiple, "sequence length must be a positive multiple of t");
  std::size_t n = d.size();
  SigmaResult out;
  out.d.resize(n);
  out.d[0] = d[0];
  for (std::size_t k = 1; k < n; ++k) out.d[k] = d[n - k];
  out.m = m;
  out.lambda = lambda.inverse();
  return out;
}

bool is_sigma_shift_symmetric(const std::vector<long long>& d, int t) {
  if (t < 1 || d.empty() || d.size() % static_cast<std::size_t>(t) != 0)
    fail(errc::length_not_multiple, "sequence length must be a positive multiple of t");
  std::vector<long long> ds(d.size());
  ds[0] = d[0];
  for (std::size_t k = 1; k < d.size(); ++k) ds[k] = d[d.size() - k];
  std::size_t n = d.size();
  for (std::size_t k = 0; k < n; k += static_cast<std::size_t>(t)) {
    bool eq = true;
    for (std::size_t j = 0; j < n && eq; ++j) eq = ds[j] == d[(j + k) % n];
    if (eq) return true;
  }
  return false;
}

std::vector<QCuspDescriptor> enumerate_cm_qcusp(const QCuspData& data, long long cover_rank) {
  validate_qcusp(data);
  CuspSingularity cover{data.t, data.b};
  std::vector<QCuspDescriptor> out;
  if (cover_rank < 1) return out;

  if (cover_rank == 1) {
    QCuspDescriptor ring;
    ring.family = "A";
    ring.cover_rank = 1;
    out.push_back(ring);
    QCuspDescriptor bm;
    bm.family = "B_minus";
    bm.cover_rank = 1;
    out.push_back(bm);
  }

  std::vector<long long> bcanon = band::canonical_shift(data.b, data.t);

  auto emit_band_orbits = [&](long long rk) {
    std::set<std::vector<long long>> seen;
    for (int r = 1; r <= rk; ++r) {
      for (int m = 1; static_cast<long long>(m) * r <= rk; ++m) {
        if (rk % m != 0) continue;
        long long target = rk / m - r;
        if (target < 0) continue;
        for (auto& d : suitable_with_nd(cover, r, target)) {
          std::vector<long long> dsigma =
              sigma_act(d, m, Field::rationals().one(), data.t).d;
          std::vector<long long> rep = std::min(d, band::canonical_shift(dsigma, data.t));
          if (!seen.insert(rep).second) continue;
          bool symmetric = is_sigma_shift_symmetric(d, data.t);
          QCuspDescriptor n;
          n.family = "N";
          n.d = rep;
          n.m = m;
          n.cover_rank = rk;
          n.lambda_excluded = {"0"};
          if (symmetric) {
            n.lambda_excluded.push_back("1");
            n.lambda_excluded.push_back("-1");
          }
          out.push_back(n);
          if (symmetric) {
            for (const char* lam : {"1", "-1"}) {
              bool special_origin = (rep == bcanon && std::string(lam) == "1");
              if (special_origin) continue;  // handled in the special bucket below
              for (const char* fam : {"N_prime", "N_dblprime"}) {
                QCuspDescriptor h;
                h.family = fam;
                h.d = rep;
                h.m = m;
                h.lambda = lam;
                h.cover_rank = rk;
                out.push_back(h);
              }
            }
          }
        }
      }
    }
  };
  emit_band_orbits(cover_rank);

  // Split summands of the special cover module of rank m + 1 at lambda = 1.
  if (cover_rank >= 2) {
    for (const char* fam : {"N_prime", "N_dblprime"}) {
      QCuspDescriptor h;
      h.family = fam;
      h.d = bcanon;
      h.m = static_cast<int>(cover_rank - 1);
      h.lambda = "1";
      h.cover_rank = cover_rank;
      h.from_special = true;
      out.push_back(h);
    }
  }

  std::sort(out.begin(), out.end(), [](const QCuspDescriptor& a, const QCuspDescriptor& b) {
    auto key = [](const QCuspDescriptor& x) {
      return std::tuple(x.family, x.d, x.m, x.lambda, x.from_special);
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace cmmod
}  // namespace vbcm
