#pragma once

#include <vector>

#include "vbcm/band.hpp"

namespace vbcm {
namespace cohom {

struct CohomDims {
  long long h0 = 0;
  long long h1 = 0;
  friend bool operator==(const CohomDims&, const CohomDims&) = default;
};

long long pos_part(long long a);
long long neg_part(long long a);

/// Maximal cyclic run of non-negative entries.
struct PositivePart {
  std::size_t start = 0;  // 0-based offset into the cyclic sequence
  std::size_t length = 0;
  std::vector<long long> entries;
};

std::vector<PositivePart> positive_parts(const std::vector<long long>& d);

/// theta(d) = sum over positive parts p of theta(p), where theta(p) = l when
/// the part is the whole cycle or all zeros, and l + 1 otherwise.
long long theta(const std::vector<long long>& d);

/// Closed-form cohomology of the band bundle V(d, m, lambda).
CohomDims cohomology(const band::BandDatum& b);

/// d > 0, no cyclic shift contains a contiguous substring (0,1,...,1,0), and
/// no cyclic shift equals (0,1,...,1).
bool is_suitable(const std::vector<long long>& d);

bool is_generically_spanned(const band::BandDatum& b);

/// Independent oracle: h0 as the kernel dimension of the exact linear system
/// gluing strand-wise polynomial sections through the identification
/// matrices, h1 from the Euler characteristic m * sum(d).
CohomDims cech_oracle(const band::GluingData& g, const std::vector<long long>& degrees);

/// Cohomology table for the indecomposable bundles of coprime type (r, d)
/// twisted by a length-n subscheme on a smooth elliptic curve.
CohomDims atiyah_cohom(long long r, long long d, long long n, bool at_origin);

}  // namespace cohom
}  // namespace vbcm
