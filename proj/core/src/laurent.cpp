#include "vbcm/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace vbcm {
namespace laurent {

LaurentPoly LaurentPoly::monomial(Field f, const FieldElem& c, long long exp) {
  LaurentPoly p(f);
  if (!c.is_zero()) p.terms_.emplace(exp, c);
  return p;
}

FieldElem LaurentPoly::coeff(long long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? f_.zero() : it->second;
}

void LaurentPoly::set_coeff(long long exp, const FieldElem& c) {
  if (c.is_zero())
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

long long LaurentPoly::min_exp() const {
  if (terms_.empty()) fail(errc::internal, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

long long LaurentPoly::max_exp() const {
  if (terms_.empty()) fail(errc::internal, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.set_coeff(e, out.coeff(e) + c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.set_coeff(e, out.coeff(e) - c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(f_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.set_coeff(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(f_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const FieldElem& c) const {
  LaurentPoly out(f_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(long long k) const {
  LaurentPoly out(f_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")t^" + std::to_string(e);
  }
  return s;
}

bool is_unit(const LaurentPoly& p) { return p.is_unit(); }

LaurentMatrix::LaurentMatrix(Field f, int rows, int cols) : f_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::invalid_argument, "negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, LaurentPoly(f));
}

LaurentMatrix LaurentMatrix::identity(Field f, int n) {
  LaurentMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(f, f.one());
  return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::size_mismatch, "Laurent matrix product shape mismatch");
  LaurentMatrix out(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

namespace {

LaurentPoly det_rec(const LaurentMatrix& m, std::vector<int>& cols, int row) {
  Field f = m.field();
  if (static_cast<int>(cols.size()) == 0) return LaurentPoly::constant(f, f.one());
  LaurentPoly acc(f);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const LaurentPoly& entry = m.at(row, cols[k]);
    if (entry.is_zero()) continue;
    int col = cols[k];
    cols.erase(cols.begin() + static_cast<long>(k));
    LaurentPoly sub = det_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<long>(k), col);
    LaurentPoly term = entry * sub;
    if (k % 2 == 1) term = -term;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const {
  if (rows_ != cols_) fail(errc::not_square, "determinant of a non-square Laurent matrix");
  std::vector<int> cols(static_cast<std::size_t>(cols_));
  std::iota(cols.begin(), cols.end(), 0);
  return det_rec(*this, cols, 0);
}

bool LaurentMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

namespace {

// Working state for the diagonalization. S accumulates row operations (over
// k[t]), T column operations (over k[t^-1]); W = S·A·T at all times.
struct Work {
  LaurentMatrix W, S, T;
  int n;

  void row_op_replace(int target, const std::vector<LaurentPoly>& comb) {
    // row_target := sum_i comb[i] * row_i, applied to W and S alike
    apply_replace_rows(W, target, comb);
    apply_replace_rows(S, target, comb);
  }

  void col_op_replace(int target, const std::vector<LaurentPoly>& comb) {
    apply_replace_cols(W, target, comb);
    apply_replace_cols(T, target, comb);
  }

  void row_axpy(int target, int src, const LaurentPoly& c) {
    for (int j = 0; j < n; ++j) W.at(target, j) = W.at(target, j) - c * W.at(src, j);
    for (int j = 0; j < n; ++j) S.at(target, j) = S.at(target, j) - c * S.at(src, j);
  }

  void col_axpy(int target, int src, const LaurentPoly& c) {
    for (int i = 0; i < n; ++i) W.at(i, target) = W.at(i, target) - c * W.at(i, src);
    for (int i = 0; i < n; ++i) T.at(i, target) = T.at(i, target) - c * T.at(i, src);
  }

  void row_scale(int i, const FieldElem& c) {
    LaurentPoly k = LaurentPoly::constant(W.field(), c);
    for (int j = 0; j < n; ++j) W.at(i, j) = W.at(i, j) * k;
    for (int j = 0; j < n; ++j) S.at(i, j) = S.at(i, j) * k;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) {
      std::swap(W.at(a, j), W.at(b, j));
      std::swap(S.at(a, j), S.at(b, j));
    }
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) {
      std::swap(W.at(i, a), W.at(i, b));
      std::swap(T.at(i, a), T.at(i, b));
    }
  }

 private:
  static void apply_replace_rows(LaurentMatrix& m, int target, const std::vector<LaurentPoly>& comb) {
    int cols = m.cols();
    std::vector<LaurentPoly> nr(static_cast<std::size_t>(cols), LaurentPoly(m.field()));
    for (std::size_t i = 0; i < comb.size(); ++i) {
      if (comb[i].is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        nr[static_cast<std::size_t>(j)] =
            nr[static_cast<std::size_t>(j)] + comb[i] * m.at(static_cast<int>(i), j);
    }
    for (int j = 0; j < cols; ++j) m.at(target, j) = nr[static_cast<std::size_t>(j)];
  }

  static void apply_replace_cols(LaurentMatrix& m, int target, const std::vector<LaurentPoly>& comb) {
    int rows = m.rows();
    std::vector<LaurentPoly> nc(static_cast<std::size_t>(rows), LaurentPoly(m.field()));
    for (std::size_t j = 0; j < comb.size(); ++j) {
      if (comb[j].is_zero()) continue;
      for (int i = 0; i < rows; ++i)
        nc[static_cast<std::size_t>(i)] =
            nc[static_cast<std::size_t>(i)] + comb[j] * m.at(i, static_cast<int>(j));
    }
    for (int i = 0; i < rows; ++i) m.at(i, target) = nc[static_cast<std::size_t>(i)];
  }
};

// Bottom coefficient matrix of the active block: entry (i,j) is the
// coefficient of t^{l_j} in W[i][j], where l_j = min order of column j.
Mat bottom_matrix(const LaurentMatrix& w, int k, std::vector<long long>& l) {
  int n = w.rows();
  Field f = w.field();
  l.assign(static_cast<std::size_t>(n - k), 0);
  for (int j = k; j < n; ++j) {
    long long lj = 0;
    bool seen = false;
    for (int i = k; i < n; ++i) {
      if (w.at(i, j).is_zero()) continue;
      long long o = w.at(i, j).min_exp();
      lj = seen ? std::min(lj, o) : o;
      seen = true;
    }
    if (!seen) fail(errc::not_invertible, "zero column during diagonalization");
    l[static_cast<std::size_t>(j - k)] = lj;
  }
  Mat b(f, n - k, n - k);
  for (int i = k; i < n; ++i)
    for (int j = k; j < n; ++j)
      b.at(i - k, j - k) = w.at(i, j).coeff(l[static_cast<std::size_t>(j - k)]);
  return b;
}

Mat top_matrix(const LaurentMatrix& w, int k, std::vector<long long>& h) {
  int n = w.rows();
  Field f = w.field();
  h.assign(static_cast<std::size_t>(n - k), 0);
  for (int i = k; i < n; ++i) {
    long long hi = 0;
    bool seen = false;
    for (int j = k; j < n; ++j) {
      if (w.at(i, j).is_zero()) continue;
      long long d = w.at(i, j).max_exp();
      hi = seen ? std::max(hi, d) : d;
      seen = true;
    }
    if (!seen) fail(errc::not_invertible, "zero row during diagonalization");
    h[static_cast<std::size_t>(i - k)] = hi;
  }
  Mat t(f, n - k, n - k);
  for (int i = k; i < n; ++i)
    for (int j = k; j < n; ++j)
      t.at(i - k, j - k) = w.at(i, j).coeff(h[static_cast<std::size_t>(i - k)]);
  return t;
}

std::vector<FieldElem> first_kernel_vector(const Mat& m) {
  Mat kb = m.kernel_basis();
  if (kb.cols() == 0) return {};
  std::vector<FieldElem> v;
  v.reserve(static_cast<std::size_t>(kb.rows()));
  for (int i = 0; i < kb.rows(); ++i) v.push_back(kb.at(i, 0));
  return v;
}

}  // namespace

DiagonalizationResult diagonalize(const LaurentMatrix& a) {
  if (a.rows() != a.cols()) fail(errc::not_square, "diagonalize expects a square matrix");
  int n = a.rows();
  Field f = a.field();
  LaurentPoly d = a.det();
  if (!d.is_unit()) fail(errc::not_invertible, "determinant is not a unit of k[t,t^-1]");

  Work w{a, LaurentMatrix::identity(f, n), LaurentMatrix::identity(f, n), n};

  for (int k = 0; k < n; ++k) {
    // Leading-coefficient reduction: raise column bottoms with k[t^-1] column
    // operations and lower row tops with k[t] row operations until both
    // leading matrices of the active block are nonsingular. Each column step
    // strictly raises sum(l_j), each row step strictly lowers sum(H_i); both
    // are bounded by the order of the active determinant, so this stops.
    std::vector<long long> l, h;
    long long guard = 0;
    for (;;) {
      if (++guard > 100000) fail(errc::internal, "diagonalization failed to converge");
      Mat b = bottom_matrix(w.W, k, l);
      auto vb = first_kernel_vector(b);
      if (!vb.empty()) {
        int js = -1;
        long long best = 0;
        for (int j = 0; j < static_cast<int>(vb.size()); ++j) {
          if (vb[static_cast<std::size_t>(j)].is_zero()) continue;
          if (js < 0 || l[static_cast<std::size_t>(j)] < best) {
            js = j;
            best = l[static_cast<std::size_t>(j)];
          }
        }
        std::vector<LaurentPoly> comb(static_cast<std::size_t>(n), LaurentPoly(f));
        for (int j = 0; j < static_cast<int>(vb.size()); ++j) {
          const FieldElem& c = vb[static_cast<std::size_t>(j)];
          if (c.is_zero()) continue;
          comb[static_cast<std::size_t>(k + j)] =
              LaurentPoly::monomial(f, c, best - l[static_cast<std::size_t>(j)]);
        }
        w.col_op_replace(k + js, comb);
        continue;
      }
      Mat t = top_matrix(w.W, k, h);
      auto vt = first_kernel_vector(t.transpose());
      if (!vt.empty()) {
        int is = -1;
        long long best = 0;
        for (int i = 0; i < static_cast<int>(vt.size()); ++i) {
          if (vt[static_cast<std::size_t>(i)].is_zero()) continue;
          if (is < 0 || h[static_cast<std::size_t>(i)] > best) {
            is = i;
            best = h[static_cast<std::size_t>(i)];
          }
        }
        std::vector<LaurentPoly> comb(static_cast<std::size_t>(n), LaurentPoly(f));
        for (int i = 0; i < static_cast<int>(vt.size()); ++i) {
          const FieldElem& c = vt[static_cast<std::size_t>(i)];
          if (c.is_zero()) continue;
          comb[static_cast<std::size_t>(k + i)] =
              LaurentPoly::monomial(f, c, best - h[static_cast<std::size_t>(i)]);
        }
        w.row_op_replace(k + is, comb);
        continue;
      }
      break;
    }

    // Both leading matrices are nonsingular, so a pinned entry exists: a
    // monomial c t^e with e equal to its row top and its column bottom.
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = k; j < n; ++j) {
        const LaurentPoly& p = w.W.at(i, j);
        if (p.is_zero() || !p.is_unit()) continue;
        long long e = p.min_exp();
        if (e == h[static_cast<std::size_t>(i - k)] && e == l[static_cast<std::size_t>(j - k)]) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi < 0) fail(errc::internal, "no pinned pivot after leading reduction");

    long long e = w.W.at(pi, pj).min_exp();
    FieldElem c = w.W.at(pi, pj).coeff(e);
    FieldElem cinv = c.inverse();

    // Clear the pivot row with k[t^-1] column operations (every entry in the
    // row has top degree <= e), then the pivot column with k[t] row
    // operations (every entry has order >= e).
    for (int j = k; j < n; ++j) {
      if (j == pj || w.W.at(pi, j).is_zero()) continue;
      LaurentPoly u = w.W.at(pi, j).shifted(-e).scaled(cinv);
      if (!u.only_nonpos_exponents()) fail(errc::internal, "row clearing left k[t^-1]");
      w.col_axpy(j, pj, u);
    }
    for (int i = k; i < n; ++i) {
      if (i == pi || w.W.at(i, pj).is_zero()) continue;
      LaurentPoly u = w.W.at(i, pj).shifted(-e).scaled(cinv);
      if (!u.only_nonneg_exponents()) fail(errc::internal, "column clearing left k[t]");
      w.row_axpy(i, pi, u);
    }
    w.row_scale(pi, cinv);
    w.swap_rows(pi, k);
    w.swap_cols(pj, k);
  }

  // Sort the diagonal exponents non-increasing with simultaneous swaps.
  std::vector<long long> deg(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) deg[static_cast<std::size_t>(i)] = w.W.at(i, i).min_exp();
  for (int i = 0; i < n; ++i) {
    int best = i;
    for (int j = i + 1; j < n; ++j)
      if (deg[static_cast<std::size_t>(j)] > deg[static_cast<std::size_t>(best)]) best = j;
    if (best != i) {
      w.swap_rows(i, best);
      w.swap_cols(i, best);
      std::swap(deg[static_cast<std::size_t>(i)], deg[static_cast<std::size_t>(best)]);
    }
  }

  return DiagonalizationResult{w.S, w.T, deg};
}

long long section_dim_oracle(const LaurentMatrix& a, long long twist) {
  if (a.rows() != a.cols()) fail(errc::not_square, "section oracle expects a square matrix");
  int r = a.rows();
  Field f = a.field();
  LaurentPoly d = a.det();
  if (!d.is_unit()) fail(errc::not_invertible, "determinant is not a unit of k[t,t^-1]");
  long long det_ord = d.min_exp();

  // v ranges over k[t^-1]^r; any section satisfies ord(v) >= -B for
  // B = twist + (r-1)E + max(det_ord, 0) + 1 by Cramer (adjugate entries have
  // exponents in [-(r-1)E, (r-1)E]). Oversizing B cannot change the kernel.
  long long emax = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (a.at(i, j).is_zero()) continue;
      emax = std::max({emax, std::abs(a.at(i, j).min_exp()), std::abs(a.at(i, j).max_exp())});
    }
  long long bound = twist + (r - 1) * emax + std::max(det_ord, 0ll) + 1;
  if (bound < 0) bound = 0;

  // Unknowns: v[i] has coefficients at exponents -bound..0. Constraints: for
  // each row of A·v, every coefficient at an exponent < -twist vanishes.
  int per = static_cast<int>(bound) + 1;
  int nvars = r * per;
  long long lo_out = -bound - emax;
  std::vector<std::vector<FieldElem>> rows;
  for (int i = 0; i < r; ++i) {
    for (long long e = lo_out; e < -twist; ++e) {
      std::vector<FieldElem> row(static_cast<std::size_t>(nvars), f.zero());
      bool nontrivial = false;
      for (int j = 0; j < r; ++j) {
        for (const auto& [ae, ac] : a.at(i, j).terms()) {
          long long ve = e - ae;  // exponent of v[j] hitting output exponent e
          if (ve < -bound || ve > 0) continue;
          row[static_cast<std::size_t>(j * per + (ve + bound))] += ac;
          nontrivial = true;
        }
      }
      if (nontrivial) rows.push_back(std::move(row));
    }
  }
  Mat sys(f, static_cast<int>(rows.size()), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nvars; ++j) sys.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return nvars - sys.rank();
}

}  // namespace laurent
}  // namespace vbcm
