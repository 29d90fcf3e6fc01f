#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vbcm/matrix.hpp"

namespace vbcm {
namespace wild {

/// Finite-dimensional module over a free algebra in m generators, given by
/// the m action matrices.
struct ModulePresentation {
  int n = 0;
  std::vector<Mat> mats;
};

void validate(const ModulePresentation& mp);

/// Representation of the free algebra in two generators.
struct Sigma2Module {
  int dim = 0;
  Mat a;
  Mat b;
};

/// Full faithful embedding of m-generator modules into two-generator ones:
/// A = blockdiag(lambda_1 I, ..., lambda_m I), B = block upper bidiagonal
/// with the action matrices on the diagonal and identities above it.
Sigma2Module embed_sigma2(const ModulePresentation& mp, const std::vector<FieldElem>& lambdas);

/// Default pairwise-distinct lambdas 0, 1, ..., m-1 (requires field size >= m).
Sigma2Module embed_sigma2(const ModulePresentation& mp);

/// dim { S : S A_i = A'_i S for all i } by exact linear algebra.
long long hom_dim(const ModulePresentation& from, const ModulePresentation& to);

long long hom_dim_sigma2(const Sigma2Module& from, const Sigma2Module& to);

enum class IsoVerdict { kIsomorphic, kNonIsomorphic, kUndetermined };

const char* to_string(IsoVerdict v);

/// Randomized but exact isomorphism detection: samples elements of the
/// intertwiner space and checks invertibility by exact determinant. A failed
/// search is reported as undetermined, never as non-isomorphism; the verdict
/// is non-isomorphic only for provable obstructions (dimension mismatch or a
/// zero intertwiner space).
IsoVerdict detect_isomorphism(const ModulePresentation& a, const ModulePresentation& b,
                              std::uint64_t seed, int samples = 20);

IsoVerdict detect_isomorphism_sigma2(const Sigma2Module& a, const Sigma2Module& b,
                                     std::uint64_t seed, int samples = 20);

enum class WitnessKind { kGenus, kStep71, kStep72, kStep73, kStep74 };

WitnessKind witness_kind_from_string(const std::string& s);
const char* to_string(WitnessKind k);

struct NamedMatrix {
  std::string name;
  Mat mat;
  bool invertible = false;
};

/// Explicit strict-family witness matrices with their invertibility checks.
/// The genus kind carries only the symbolic block pattern (the extension
/// classes have no numeric value without a curve model).
struct WitnessMatrixSet {
  WitnessKind kind;
  std::string provenance;
  std::vector<FieldElem> parameters;
  std::vector<NamedMatrix> matrices;
  std::vector<std::string> symbolic_labels;
  std::vector<std::vector<std::string>> block_pattern;  // genus kind only
  int block_size = 0;                                   // genus kind only
  bool det_constant_in_z = false;  // step 7.1: det independent of z1, z2
  std::string det_value;           // when det_constant_in_z
};

/// Parameter arity per kind: genus takes the block size n, step 7.2 takes up
/// to five substitution values (missing ones default to 1), the other steps
/// two. Missing required parameters raise errc::missing_parameter.
WitnessMatrixSet witness(WitnessKind kind, const std::vector<FieldElem>& params, Field field,
                         std::optional<int> block_size = std::nullopt);

}  // namespace wild
}  // namespace vbcm
