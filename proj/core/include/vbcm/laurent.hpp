#pragma once

#include <map>
#include <string>
#include <vector>

#include "vbcm/field.hpp"
#include "vbcm/matrix.hpp"

namespace vbcm {
namespace laurent {

/// Laurent polynomial in one variable t over the configured field. Stored as a
/// sparse exponent-to-coefficient map; no zero coefficient is ever kept, the
/// zero polynomial is the empty map.
class LaurentPoly {
 public:
  explicit LaurentPoly(Field f = Field::rationals()) : f_(f) {}

  static LaurentPoly monomial(Field f, const FieldElem& c, long long exp);
  static LaurentPoly constant(Field f, const FieldElem& c) { return monomial(f, c, 0); }

  Field field() const { return f_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, FieldElem>& terms() const { return terms_; }

  FieldElem coeff(long long exp) const;
  void set_coeff(long long exp, const FieldElem& c);

  long long min_exp() const;  // requires nonzero
  long long max_exp() const;
  long long span() const { return max_exp() - min_exp(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const FieldElem& c) const;
  LaurentPoly shifted(long long k) const;  // multiply by t^k

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Units of k[t, t^-1] are exactly the single-term c t^k with c != 0.
  bool is_unit() const { return terms_.size() == 1; }

  bool only_nonneg_exponents() const { return terms_.empty() || min_exp() >= 0; }
  bool only_nonpos_exponents() const { return terms_.empty() || max_exp() <= 0; }

  std::string to_string() const;

 private:
  Field f_;
  std::map<long long, FieldElem> terms_;
};

bool is_unit(const LaurentPoly& p);

class LaurentMatrix {
 public:
  LaurentMatrix() : rows_(0), cols_(0) {}
  LaurentMatrix(Field f, int rows, int cols);

  static LaurentMatrix identity(Field f, int n);

  Field field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const LaurentPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool operator==(const LaurentMatrix& o) const;

  LaurentPoly det() const;  // cofactor expansion; fine at the sizes we use

  bool is_diagonal() const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<LaurentPoly> e_;
};

struct DiagonalizationResult {
  LaurentMatrix S;  // entries in k[t], det a nonzero constant
  LaurentMatrix T;  // entries in k[t^-1], det a nonzero constant
  std::vector<long long> degrees;  // non-increasing; S·A·T = diag(t^degrees)
};

/// Reduces an invertible Laurent matrix to diag(t^d_1, ..., t^d_r) by a
/// polynomial row transformation S and an anti-polynomial column
/// transformation T, both of constant determinant. The multiset {d_i} is the
/// splitting type of the bundle glued by A.
DiagonalizationResult diagonalize(const LaurentMatrix& a);

/// Independent section-count oracle: dimension of
///   {v over k[t^-1] : every entry of A·v has exponents >= -twist},
/// computed by finite exact linear algebra with an oversized degree window.
/// Equals sum_i (d_i + twist + 1)^+ over the splitting type {d_i}.
long long section_dim_oracle(const LaurentMatrix& a, long long twist);

}  // namespace laurent
}  // namespace vbcm
