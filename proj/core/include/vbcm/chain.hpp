#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "vbcm/matrix.hpp"

namespace vbcm {
namespace chain {

/// Gluing data for a (torsion-free) sheaf on a chain of s projective lines.
/// Node i (0-based, i = 0..s-2) joins components i and i+1; m_prime[i] is the
/// ranks[i] x node_dims[i] projection onto the component-i side of the node,
/// m_dblprime[i] the ranks[i+1] x node_dims[i] projection onto the other side.
/// weights[c][j] is the degree of the j-th line-bundle summand on component c.
struct ChainData {
  Field field;
  int s = 1;
  std::vector<int> ranks;
  std::vector<int> node_dims;
  std::vector<std::vector<long long>> weights;
  std::vector<Mat> m_prime;
  std::vector<Mat> m_dblprime;
};

/// Shape consistency; throws errc::invalid_argument.
void validate_shapes(const ChainData& d);

/// All ranks equal, node dimensions equal the common rank, all matrices
/// invertible.
bool is_vector_bundle_case(const ChainData& d);

struct IntervalLineBundle {
  int start = 1;  // 1-based component indices, inclusive
  int end = 1;
  std::vector<long long> degrees;  // one per component of [start, end]

  friend auto operator<=>(const IntervalLineBundle&, const IntervalLineBundle&) = default;
};

using VectorDegree = std::vector<long long>;

struct ReduceResult {
  ChainData transformed;  // identity matrices; weights reordered bundle-wise
  std::vector<VectorDegree> bundles;  // sorted lexicographically
};

/// Decomposition of a vector bundle on the chain into line bundles
/// (admissible transformations bring every matrix to the identity; the
/// vector-degrees are then read off row-wise).
ReduceResult reduce_chain(const ChainData& d);

/// Decomposition of torsion-free gluing data into interval line bundles.
/// Requires every stacked node matrix to have full column rank
/// (errc::rank_condition_violated otherwise). Interval degrees are reported
/// as the raw input weights of the rows the strand passes through.
std::vector<IntervalLineBundle> decompose_torsion_free(const ChainData& d);

/// Applies a pseudo-random sequence of admissible transformations: a base
/// change at a random node, and weight-compatible row transformations on a
/// random component (tied on equal-weight blocks where the component has two
/// node matrices). The result defines an isomorphic sheaf.
ChainData random_admissible_transform(const ChainData& d, std::uint64_t seed);

}  // namespace chain
}  // namespace vbcm
