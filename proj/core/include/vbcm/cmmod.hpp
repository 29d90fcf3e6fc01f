#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vbcm/cohom.hpp"

namespace vbcm {
namespace cmmod {

/// Cusp singularity: exceptional curve a cycle of s projective lines with
/// self-intersection numbers -b_i.
struct CuspSingularity {
  int s = 1;
  std::vector<long long> b;
};

/// Validates shape (b_i >= 1). Returns true when the advisory numerical
/// condition b_i >= 2 for all i with sum(b_i - 2) > 0 also holds; callers may
/// surface a warning when it does not.
bool validate_cusp(const CuspSingularity& sing);

struct SimpleEllipticSingularity {
  long long b = 1;  // -(E.E)
};

void validate_elliptic(const SimpleEllipticSingularity& sing);

/// Quotient data for a cusp cover with an orientation-reversing involution;
/// b must be invariant under the reflection fixing component 1.
struct QCuspData {
  int t = 1;
  std::vector<long long> b;
};

void validate_qcusp(const QCuspData& data);

/// n_d = sum_i (d_i - b_i + 1)^+ - theta(d - B^r), with B^r the r-fold
/// repetition of b.
long long n_d(const std::vector<long long>& d, const CuspSingularity& sing);

enum class Variant { kRing, kBand, kSpecial };

const char* to_string(Variant v);

/// Symbolic description of one indecomposable Cohen-Macaulay module or
/// 1-parameter family. Band entries carry the underlying sequence and
/// multiplicity plus the excluded parameter values; for the smooth elliptic
/// case `d` holds the coprime pair (r, d) and `m` the twist multiplicity.
struct CMDescriptor {
  Variant variant = Variant::kRing;
  long long rank = 1;
  std::vector<long long> d;
  int m = 0;
  std::vector<std::string> lambda_excluded;
  std::optional<std::string> lambda_sample;
  bool point_excluded_origin = false;  // elliptic families with x != o

  friend bool operator==(const CMDescriptor&, const CMDescriptor&) = default;
};

/// All indecomposables of the given rank over a cusp singularity: the ring at
/// rank 1, one band family per suitable sequence d (up to s-shift) and
/// multiplicity m with m(r + n_d) = rank, and the special module of rank m+1.
std::vector<CMDescriptor> enumerate_cm_cusp(const CuspSingularity& sing, long long rank,
                                            std::optional<FieldElem> sample_lambda = std::nullopt);

/// Rank of the family module for the simple elliptic case: n(r + (d - br)^+).
long long rank_simple_elliptic(long long r, long long d, long long n,
                               const SimpleEllipticSingularity& sing);

std::vector<CMDescriptor> enumerate_cm_elliptic(const SimpleEllipticSingularity& sing,
                                                long long rank);

struct SigmaResult {
  std::vector<long long> d;
  int m;
  FieldElem lambda;
};

/// The involution (d, m, lambda) -> ((d_1, d_rt, ..., d_2), m, 1/lambda).
SigmaResult sigma_act(const std::vector<long long>& d, int m, const FieldElem& lambda, int t);

bool is_sigma_shift_symmetric(const std::vector<long long>& d, int t);

/// One summand family over the quotient singularity.
struct QCuspDescriptor {
  std::string family;  // "N", "N_prime", "N_dblprime", "A", "B_minus"
  std::vector<long long> d;
  int m = 0;
  std::string lambda;  // fixed value for split summands, empty otherwise
  std::vector<std::string> lambda_excluded;
  long long cover_rank = 1;   // rank of the originating module over the cover
  bool from_special = false;  // split summand of the special cover module

  friend bool operator==(const QCuspDescriptor&, const QCuspDescriptor&) = default;
};

/// Indecomposables over the Q-cusp quotient whose cover module has the given
/// rank: plain restrictions N_d(m, lambda) for non-symmetric d, split pairs
/// N'/N'' at lambda = +-1 for sigma-shift-symmetric d, and the two rank-1
/// modules at rank 1.
std::vector<QCuspDescriptor> enumerate_cm_qcusp(const QCuspData& data, long long cover_rank);

}  // namespace cmmod
}  // namespace vbcm
