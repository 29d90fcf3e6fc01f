#include "vbcm/wild.hpp"

#include <algorithm>
#include <random>

namespace vbcm {
namespace wild {

void validate(const ModulePresentation& mp) {
  if (mp.n < 0) fail(errc::invalid_argument, "negative module dimension");
  for (const Mat& a : mp.mats)
    if (a.rows() != mp.n || a.cols() != mp.n)
      fail(errc::size_mismatch, "action matrix is not n x n");
}

Sigma2Module embed_sigma2(const ModulePresentation& mp, const std::vector<FieldElem>& lambdas) {
  validate(mp);
  int m = static_cast<int>(mp.mats.size());
  if (static_cast<int>(lambdas.size()) != m)
    fail(errc::size_mismatch, "need one lambda per generator");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (lambdas[static_cast<std::size_t>(i)] == lambdas[static_cast<std::size_t>(j)])
        fail(errc::duplicate_lambda, "lambdas must be pairwise distinct");
  if (m == 0) fail(errc::invalid_argument, "need at least one generator");
  Field f = lambdas[0].field();
  int n = mp.n;
  Sigma2Module out;
  out.dim = m * n;
  out.a = Mat(f, out.dim, out.dim);
  out.b = Mat(f, out.dim, out.dim);
  for (int blk = 0; blk < m; ++blk) {
    for (int i = 0; i < n; ++i) {
      out.a.at(blk * n + i, blk * n + i) = lambdas[static_cast<std::size_t>(blk)];
      for (int j = 0; j < n; ++j)
        out.b.at(blk * n + i, blk * n + j) = mp.mats[static_cast<std::size_t>(blk)].at(i, j);
      if (blk + 1 < m) out.b.at(blk * n + i, (blk + 1) * n + i) = f.one();
    }
  }
  return out;
}

Sigma2Module embed_sigma2(const ModulePresentation& mp) {
  validate(mp);
  if (mp.mats.empty()) fail(errc::invalid_argument, "need at least one generator");
  Field f = mp.mats[0].field();
  int m = static_cast<int>(mp.mats.size());
  if (f.finite() && static_cast<std::uint64_t>(m) > f.prime())
    fail(errc::invalid_argument, "field too small for distinct default lambdas");
  std::vector<FieldElem> lambdas;
  for (int i = 0; i < m; ++i) lambdas.push_back(f.from_int(i));
  return embed_sigma2(mp, lambdas);
}

namespace {

// System matrix of S A_i = B_i S over the unknowns S (nto x nfrom), with
// S_{ik} at variable index i * nfrom + k.
Mat intertwiner_system(const std::vector<Mat>& from, const std::vector<Mat>& to, int nfrom,
                       int nto, Field f) {
  int nvars = nfrom * nto;
  int total_rows = static_cast<int>(from.size()) * nto * nfrom;
  Mat sys(f, total_rows, nvars);
  int row = 0;
  for (std::size_t g = 0; g < from.size(); ++g) {
    const Mat& a = from[g];
    const Mat& b = to[g];
    for (int i = 0; i < nto; ++i)
      for (int j = 0; j < nfrom; ++j) {
        for (int k = 0; k < nfrom; ++k)
          if (!a.at(k, j).is_zero()) sys.at(row, i * nfrom + k) += a.at(k, j);
        for (int k = 0; k < nto; ++k)
          if (!b.at(i, k).is_zero()) sys.at(row, k * nfrom + j) -= b.at(i, k);
        ++row;
      }
  }
  return sys;
}

long long intertwiner_dim(const std::vector<Mat>& from, const std::vector<Mat>& to, int nfrom,
                          int nto, Field f) {
  Mat sys = intertwiner_system(from, to, nfrom, nto, f);
  return static_cast<long long>(sys.cols()) - sys.rank();
}

IsoVerdict detect_from_system(const std::vector<Mat>& from, const std::vector<Mat>& to, int n,
                              Field f, std::uint64_t seed, int samples) {
  Mat kernel = intertwiner_system(from, to, n, n, f).kernel_basis();
  if (kernel.cols() == 0) return IsoVerdict::kNonIsomorphic;
  std::mt19937_64 g(seed);
  for (int trial = 0; trial < samples; ++trial) {
    Mat cand(f, n, n);
    for (int col = 0; col < kernel.cols(); ++col) {
      FieldElem coeff = f.from_int(static_cast<long long>(g() % 11) - 5);
      if (coeff.is_zero()) continue;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          cand.at(i, k) += coeff * kernel.at(i * n + k, col);
    }
    if (cand.is_invertible()) return IsoVerdict::kIsomorphic;
  }
  return IsoVerdict::kUndetermined;
}

}  // namespace

const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kIsomorphic: return "isomorphic";
    case IsoVerdict::kNonIsomorphic: return "non-isomorphic";
    case IsoVerdict::kUndetermined: return "undetermined";
  }
  return "?";
}

IsoVerdict detect_isomorphism(const ModulePresentation& a, const ModulePresentation& b,
                              std::uint64_t seed, int samples) {
  validate(a);
  validate(b);
  if (a.mats.size() != b.mats.size())
    fail(errc::generator_count_mismatch, "modules have different generator counts");
  if (a.n != b.n) return IsoVerdict::kNonIsomorphic;
  if (a.n == 0) return IsoVerdict::kIsomorphic;
  Field f = a.mats.empty() ? Field::rationals() : a.mats[0].field();
  return detect_from_system(a.mats, b.mats, a.n, f, seed, samples);
}

IsoVerdict detect_isomorphism_sigma2(const Sigma2Module& a, const Sigma2Module& b,
                                     std::uint64_t seed, int samples) {
  if (a.dim != b.dim) return IsoVerdict::kNonIsomorphic;
  if (a.dim == 0) return IsoVerdict::kIsomorphic;
  return detect_from_system({a.a, a.b}, {b.a, b.b}, a.dim, a.a.field(), seed, samples);
}

long long hom_dim(const ModulePresentation& from, const ModulePresentation& to) {
  validate(from);
  validate(to);
  if (from.mats.size() != to.mats.size())
    fail(errc::generator_count_mismatch, "modules have different generator counts");
  if (from.mats.empty()) return static_cast<long long>(from.n) * to.n;  // no relations
  Field f = from.mats[0].field();
  return intertwiner_dim(from.mats, to.mats, from.n, to.n, f);
}

long long hom_dim_sigma2(const Sigma2Module& from, const Sigma2Module& to) {
  Field f = from.a.field();
  return intertwiner_dim({from.a, from.b}, {to.a, to.b}, from.dim, to.dim, f);
}

WitnessKind witness_kind_from_string(const std::string& s) {
  if (s == "genus") return WitnessKind::kGenus;
  if (s == "step71") return WitnessKind::kStep71;
  if (s == "step72") return WitnessKind::kStep72;
  if (s == "step73") return WitnessKind::kStep73;
  if (s == "step74") return WitnessKind::kStep74;
  fail(errc::invalid_argument, "unknown witness kind: " + s);
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kGenus: return "genus";
    case WitnessKind::kStep71: return "step71";
    case WitnessKind::kStep72: return "step72";
    case WitnessKind::kStep73: return "step73";
    case WitnessKind::kStep74: return "step74";
  }
  return "?";
}

namespace {

NamedMatrix named(const std::string& name, Mat m) {
  NamedMatrix nm;
  nm.name = name;
  nm.invertible = m.is_invertible();
  nm.mat = std::move(m);
  return nm;
}

Mat antidiagonal(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = f.one();
  return m;
}

Mat step71_matrix(Field f, const FieldElem& z1, const FieldElem& z2) {
  Mat m = Mat::from_rows(f, {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}});
  m.at(2, 3) = z1;
  m.at(3, 3) = z2;
  return m;
}

}  // namespace

WitnessMatrixSet witness(WitnessKind kind, const std::vector<FieldElem>& params, Field field,
                         std::optional<int> block_size) {
  WitnessMatrixSet out;
  out.kind = kind;
  out.parameters = params;
  auto need = [&](std::size_t k) {
    if (params.size() < k)
      fail(errc::missing_parameter,
           std::string("witness kind ") + to_string(kind) + " needs " + std::to_string(k) +
               " substitution value(s)");
  };
  switch (kind) {
    case WitnessKind::kGenus: {
      out.provenance = "genus-2-extension";
      if (!block_size || *block_size < 1)
        fail(errc::missing_parameter, "genus witness needs a block size n >= 1");
      out.block_size = *block_size;
      out.symbolic_labels = {"xi13", "xi14", "xi15", "xi23", "xi24", "xi25"};
      out.block_pattern = {{"xi13*I", "xi14*I", "xi15*I"}, {"xi23*I", "xi24*A", "xi25*B"}};
      break;
    }
    case WitnessKind::kStep71: {
      out.provenance = "step-7.1";
      need(2);
      Mat m = step71_matrix(field, params[0], params[1]);
      out.matrices.push_back(named("u_p1", m));
      // det is multi-affine in (z1, z2), which both sit in one column, so
      // values on {0,1}^2 pin it; equality there proves constancy.
      FieldElem d00 = step71_matrix(field, field.zero(), field.zero()).det();
      FieldElem d10 = step71_matrix(field, field.one(), field.zero()).det();
      FieldElem d01 = step71_matrix(field, field.zero(), field.one()).det();
      FieldElem d11 = step71_matrix(field, field.one(), field.one()).det();
      out.det_constant_in_z = (d00 == d10 && d00 == d01 && d00 == d11 && !d00.is_zero());
      out.det_value = d00.to_string();
      break;
    }
    case WitnessKind::kStep72: {
      out.provenance = "step-7.2";
      std::vector<FieldElem> z = params;
      while (z.size() < 5) z.push_back(field.one());
      Mat m = Mat::identity(field, 7);
      m.at(0, 4) = field.one();  // alpha * 1
      m.at(1, 2) = field.one();  // alpha * 1
      m.at(2, 3) = z[0];
      m.at(2, 4) = z[1];
      m.at(3, 5) = z[2];
      m.at(4, 5) = z[3];
      m.at(5, 6) = z[4];
      out.matrices.push_back(named("u_p", m));
      out.symbolic_labels = {"alpha*1", "alpha*1", "alpha*z1", "alpha*z2",
                             "alpha*z3", "alpha*z4", "alpha*z5"};
      break;
    }
    case WitnessKind::kStep73: {
      out.provenance = "step-7.3";
      need(2);
      out.matrices.push_back(named("u_p1", antidiagonal(field, 4)));
      Mat m = Mat::from_rows(field, {{1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
      m.at(0, 2) = params[0];
      m.at(0, 3) = params[1];
      out.matrices.push_back(named("u_p2", m));
      break;
    }
    case WitnessKind::kStep74: {
      out.provenance = "step-7.4";
      need(2);
      out.matrices.push_back(named("u_24", antidiagonal(field, 14)));
      Mat t = Mat::identity(field, 14);
      const std::pair<int, int> ones[] = {{5, 3},  {6, 1},  {7, 2},  {9, 4},  {10, 6},
                                          {10, 9}, {11, 5}, {11, 7}, {11, 10}, {12, 8},
                                          {13, 9}, {13, 12}, {14, 10}, {14, 12}};
      for (auto [p, q] : ones) t.at(p - 1, q - 1) = field.one();
      t.at(12, 10) = params[0];  // t_{13,11} = z1
      t.at(13, 10) = params[1];  // t_{14,11} = z2
      out.matrices.push_back(named("u_34", t));
      break;
    }
  }
  return out;
}

}  // namespace wild
}  // namespace vbcm
