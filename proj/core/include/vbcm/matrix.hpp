#pragma once

#include <initializer_list>
#include <vector>

#include "vbcm/field.hpp"

namespace vbcm {

/// Dense matrix over the configured exact field. All elimination routines are
/// plain Gauss over a field; results are exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(Field f, int rows, int cols);

  static Mat identity(Field f, int n);
  static Mat from_rows(Field f, std::initializer_list<std::initializer_list<long long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return f_; }

  FieldElem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const FieldElem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  /// Stacks this on top of `bottom` (column counts must match).
  Mat stack(const Mat& bottom) const;

  int rank() const;
  FieldElem det() const;          // errc::not_square
  Mat inverse() const;            // errc::not_invertible
  bool is_invertible() const;
  bool is_identity() const;

  /// Columns form a basis of the right kernel {x : A x = 0}.
  Mat kernel_basis() const;

 private:
  Field f_;
  int rows_, cols_;
  std::vector<FieldElem> a_;
};

/// dim(rowspan(a) ∩ rowspan(b)); both matrices must have the same column count.
int row_space_intersection_dim(const Mat& a, const Mat& b);

int row_space_dim(const Mat& a);

}  // namespace vbcm
