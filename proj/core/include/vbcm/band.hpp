#pragma once

#include <cstdint>
#include <vector>

#include "vbcm/chain.hpp"
#include "vbcm/matrix.hpp"

namespace vbcm {
namespace band {

/// Classifying datum of an indecomposable vector bundle on a cycle of s
/// projective lines: a non-s-periodic integer sequence d of length r*s, a
/// multiplicity m and a nonzero parameter lambda.
struct BandDatum {
  int s = 1;
  std::vector<long long> d;
  int m = 1;
  FieldElem lambda;
};

/// Throws errc::invalid_band_datum when the triple is not a valid band datum.
void validate(const BandDatum& b);

/// True iff d is not the repetition of a strictly shorter sequence of length
/// l*s. Throws errc::length_not_multiple when |d| is not a positive multiple
/// of s.
bool is_nonperiodic(const std::vector<long long>& d, int s);

/// Representative with d lexicographically minimal among its s-shifts.
BandDatum canonical_form(const BandDatum& b);

std::vector<long long> canonical_shift(const std::vector<long long>& d, int s);

bool are_isomorphic(const BandDatum& a, const BandDatum& b);

struct RankDegree {
  long long rank;
  std::vector<long long> degree;  // per component, length s
};

RankDegree rank_degree(const BandDatum& b);

/// Node-by-node identification data of the band bundle: strand j (1-based,
/// cyclic) is glued to strand j+1 by an m x m matrix, the identity everywhere
/// except the closing strand rs, which carries the Jordan cell with
/// eigenvalue lambda (lower triangular in copy order).
struct GluingData {
  int s = 1;
  int r = 1;
  int m = 1;
  Field field;
  std::vector<Mat> pair_mats;  // length r*s; pair_mats[j] glues strand j+1 to strand j+2

  /// Block-diagonal identification matrix at node i (0-based), of size
  /// m * (number of strands through the node).
  Mat node_matrix(int i) const;
};

GluingData build_gluing(const BandDatum& b);

/// All non-s-periodic sequences of non-negative integers of length r*s whose
/// residue-class sums equal delta, one canonical representative per s-shift
/// orbit, sorted.
std::vector<std::vector<long long>> enumerate_nonneg(int s, int r,
                                                     const std::vector<long long>& delta);

long long nu_count(int s, int r, const std::vector<long long>& delta);

/// Cuts the closing identification of the band gluing; the result is chain
/// data on the unrolled cycle (r*s components, all gluings trivial) whose
/// torsion-free classification describes the cut sheaf.
chain::ChainData cut_cycle(const BandDatum& b);

enum class CurveVbType { kFinite, kTameBounded, kTameUnbounded, kWild };

const char* to_string(CurveVbType t);

/// Dual graph of a reduced projective curve: one vertex per component with
/// the genus of its normalization, one edge per node; loops and multi-edges
/// allowed.
struct DualGraph {
  std::vector<int> genera;
  std::vector<std::pair<int, int>> edges;  // 0-based vertex indices
};

/// Representation type of the vector bundle category of the curve.
/// Throws errc::disconnected for disconnected graphs.
CurveVbType curve_vb_type(const DualGraph& g);

}  // namespace band
}  // namespace vbcm
