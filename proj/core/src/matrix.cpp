#include "vbcm/matrix.hpp"

namespace vbcm {

Mat::Mat(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::invalid_argument, "negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, f.zero());
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) fail(errc::invalid_argument, "ragged matrix literal");
    int j = 0;
    for (long long v : row) m.at(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(errc::size_mismatch, "matrix product shape mismatch");
  Mat out(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElem& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += aik * o.at(k, j);
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::size_mismatch, "matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::size_mismatch, "matrix sum shape mismatch");
  Mat out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::transpose() const {
  Mat out(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Mat out(f_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return out;
}

Mat Mat::stack(const Mat& bottom) const {
  if (cols_ != bottom.cols_) fail(errc::size_mismatch, "stack: column counts differ");
  Mat out(f_, rows_ + bottom.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < bottom.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = bottom.at(i, j);
  return out;
}

namespace {

// Row echelon in place; returns pivot columns. Used for rank and kernels.
std::vector<int> echelon(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    FieldElem inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      FieldElem c = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(echelon(m).size());
}

FieldElem Mat::det() const {
  if (rows_ != cols_) fail(errc::not_square, "determinant of a non-square matrix");
  Mat m = *this;
  FieldElem d = f_.one();
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int i = col; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return f_.zero();
    if (p != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    FieldElem inv = m.at(col, col).inverse();
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldElem c = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= c * m.at(col, j);
    }
  }
  return d;
}

bool Mat::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) fail(errc::not_square, "inverse of a non-square matrix");
  Mat aug(f_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = f_.one();
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
    fail(errc::not_invertible, "matrix is singular");
  Mat out(f_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
  return out;
}

Mat Mat::kernel_basis() const {
  Mat m = *this;
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(f_, cols_, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = f_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
  }
  return basis;
}

int row_space_dim(const Mat& a) { return a.rank(); }

int row_space_intersection_dim(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) fail(errc::size_mismatch, "row space intersection: ambient mismatch");
  int ra = a.rank();
  int rb = b.rank();
  int rs = a.stack(b).rank();
  return ra + rb - rs;
}

}  // namespace vbcm
