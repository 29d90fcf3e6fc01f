#include "vbcm/chain.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace vbcm {
namespace chain {

void validate_shapes(const ChainData& d) {
  if (d.s < 1) fail(errc::invalid_argument, "chain needs at least one component");
  if (static_cast<int>(d.ranks.size()) != d.s) fail(errc::invalid_argument, "ranks size != s");
  if (static_cast<int>(d.node_dims.size()) != d.s - 1)
    fail(errc::invalid_argument, "node_dims size != s-1");
  if (static_cast<int>(d.weights.size()) != d.s) fail(errc::invalid_argument, "weights size != s");
  for (int c = 0; c < d.s; ++c) {
    if (d.ranks[c] < 0) fail(errc::invalid_argument, "negative rank");
    if (static_cast<int>(d.weights[c].size()) != d.ranks[c])
      fail(errc::invalid_argument, "weights row count != rank");
  }
  if (static_cast<int>(d.m_prime.size()) != d.s - 1 ||
      static_cast<int>(d.m_dblprime.size()) != d.s - 1)
    fail(errc::invalid_argument, "node matrix count != s-1");
  for (int i = 0; i + 1 < d.s; ++i) {
    if (d.node_dims[i] < 0) fail(errc::invalid_argument, "negative node dimension");
    if (d.m_prime[i].rows() != d.ranks[i] || d.m_prime[i].cols() != d.node_dims[i])
      fail(errc::invalid_argument, "M' shape mismatch at node " + std::to_string(i + 1));
    if (d.m_dblprime[i].rows() != d.ranks[i + 1] || d.m_dblprime[i].cols() != d.node_dims[i])
      fail(errc::invalid_argument, "M'' shape mismatch at node " + std::to_string(i + 1));
  }
}

bool is_vector_bundle_case(const ChainData& d) {
  validate_shapes(d);
  for (int c = 0; c < d.s; ++c)
    if (d.ranks[c] != d.ranks[0]) return false;
  for (int i = 0; i + 1 < d.s; ++i) {
    if (d.node_dims[i] != d.ranks[0]) return false;
    if (!d.m_prime[i].is_invertible() || !d.m_dblprime[i].is_invertible()) return false;
  }
  return true;
}

namespace {

// Birth marker of a strand, ordered: a strand born with a vanishing condition
// sits below every continuing strand, one born with fibre presence above.
enum Birth { kVanishing = 0, kFirstComponent = 1, kPresence = 2 };

struct Strand {
  int start = 0;  // 0-based component index
  std::vector<long long> degs;
  Birth birth = kFirstComponent;
};

// Admissibility order for row transformations at the current component:
// compare accumulated weights from the newest component backwards; when one
// history runs out its birth marker decides (presence > continuation >
// vanishing).
int compare_class(const Strand& a, const Strand& b) {
  auto ita = a.degs.rbegin();
  auto itb = b.degs.rbegin();
  for (;;) {
    bool ea = ita == a.degs.rend();
    bool eb = itb == b.degs.rend();
    if (ea && eb) {
      if (a.birth != b.birth) return a.birth < b.birth ? -1 : 1;
      return 0;
    }
    if (ea) return a.birth == kPresence ? 1 : -1;
    if (eb) return b.birth == kPresence ? -1 : 1;
    if (*ita != *itb) return *ita < *itb ? -1 : 1;
    ++ita;
    ++itb;
  }
}

struct NodeOutcome {
  // per component-(i+1) row: index of the component-i row it links to, or -1
  std::vector<int> link_of_right;
  std::vector<Birth> birth_of_right;  // meaningful when unlinked
};

// Canonical per-class link counts from the two row flags; invariant under all
// admissible transformations, used to cross-check the explicit reduction.
std::map<std::pair<int, int>, int> flag_link_counts(const Mat& a, const Mat& b,
                                                    const std::vector<int>& aclass,
                                                    const std::vector<int>& bclass) {
  std::set<int> avals(aclass.begin(), aclass.end());
  std::set<int> bvals(bclass.begin(), bclass.end());
  auto rows_le = [](const Mat& m, const std::vector<int>& cls, int cut) {
    std::vector<int> rows;
    for (int i = 0; i < m.rows(); ++i)
      if (cls[static_cast<std::size_t>(i)] <= cut) rows.push_back(i);
    std::vector<int> cols(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j) cols[static_cast<std::size_t>(j)] = j;
    return m.submatrix(rows, cols);
  };
  auto F = [&](int ga, int gb) {
    Mat am = rows_le(a, aclass, ga);
    Mat bm = rows_le(b, bclass, gb);
    return row_space_intersection_dim(am, bm);
  };
  std::map<std::pair<int, int>, int> out;
  int prev_a = -1;
  std::map<int, int> fa_prev;  // F(previous a-cut, b-cut)
  for (int av : avals) {
    int prev_b = -1;
    int f_corner = 0;   // F(prev_a, prev_b)
    int f_left = 0;     // F(av, prev_b)
    for (int bv : bvals) {
      int f_here = F(av, bv);
      int f_up = prev_a < 0 ? 0 : fa_prev[bv];
      int cnt = f_here - f_up - f_left + f_corner;
      if (cnt < 0) fail(errc::internal, "negative canonical link count");
      if (cnt > 0) out[{av, bv}] = cnt;
      f_corner = f_up;
      f_left = f_here;
      prev_b = bv;
    }
    fa_prev.clear();
    for (int bv : bvals) fa_prev[bv] = F(av, bv);
    prev_a = av;
  }
  return out;
}

// Reduces one node to its 0/1 normal form. `a` rows are the component-i
// strands (classes given by `strands`), `b` rows the component-(i+1) line
// bundles with weights `wr`. Column operations are free; row operations stay
// within a block and only add lower-class rows into higher-class ones.
// Equal-weight row operations on the b side are mirrored onto `next`
// (the component-(i+1) matrix of the following node), which is how the tied
// transformation pairs of the matrix problem propagate.
NodeOutcome reduce_node(Mat& a, Mat& b, Mat* next, const std::vector<Strand>& strands,
                        const std::vector<long long>& wr) {
  Field f = a.field();
  int ra = a.rows(), rb = b.rows(), m = a.cols();

  if (a.stack(b).rank() != m)
    fail(errc::rank_condition_violated, "node matrix pair has dependent columns");

  Mat a0 = a, b0 = b;  // for the invariant cross-check

  std::vector<int> aorder(static_cast<std::size_t>(ra));
  for (int i = 0; i < ra; ++i) aorder[static_cast<std::size_t>(i)] = i;
  std::sort(aorder.begin(), aorder.end(), [&](int x, int y) {
    int c = compare_class(strands[static_cast<std::size_t>(x)], strands[static_cast<std::size_t>(y)]);
    return c != 0 ? c < 0 : x < y;
  });

  // coefficients are taken by value: callers pass references into entries
  // that the loops themselves overwrite
  auto col_axpy = [&](int dst, int src, FieldElem c) {
    for (int i = 0; i < ra; ++i) a.at(i, dst) = a.at(i, dst) - c * a.at(i, src);
    for (int i = 0; i < rb; ++i) b.at(i, dst) = b.at(i, dst) - c * b.at(i, src);
  };
  auto col_scale = [&](int j, FieldElem c) {
    for (int i = 0; i < ra; ++i) a.at(i, j) *= c;
    for (int i = 0; i < rb; ++i) b.at(i, j) *= c;
  };

  std::vector<int> a_owner(static_cast<std::size_t>(m), -1);

  // component-i side
  for (int u : aorder) {
    for (int j = 0; j < m; ++j) {
      int u0 = a_owner[static_cast<std::size_t>(j)];
      if (u0 < 0 || a.at(u, j).is_zero()) continue;
      FieldElem c = a.at(u, j);
      for (int jj = 0; jj < m; ++jj) a.at(u, jj) -= c * a.at(u0, jj);
    }
    int piv = -1;
    for (int j = 0; j < m; ++j)
      if (!a.at(u, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) continue;  // strand ends here
    col_scale(piv, a.at(u, piv).inverse());
    for (int uu = 0; uu < ra; ++uu) {
      if (uu == u || a.at(uu, piv).is_zero()) continue;
      FieldElem c = a.at(uu, piv);
      for (int jj = 0; jj < m; ++jj) a.at(uu, jj) -= c * a.at(u, jj);
    }
    for (int j = 0; j < m; ++j) {
      if (j == piv || a.at(u, j).is_zero()) continue;
      col_axpy(j, piv, a.at(u, j));
    }
    a_owner[static_cast<std::size_t>(piv)] = u;
  }

  std::vector<int> border(static_cast<std::size_t>(rb));
  for (int i = 0; i < rb; ++i) border[static_cast<std::size_t>(i)] = i;
  std::sort(border.begin(), border.end(), [&](int x, int y) {
    long long wx = wr[static_cast<std::size_t>(x)], wy = wr[static_cast<std::size_t>(y)];
    return wx != wy ? wx < wy : x < y;
  });

  auto b_row_axpy = [&](int dst, int src, FieldElem c) {
    for (int jj = 0; jj < m; ++jj) b.at(dst, jj) -= c * b.at(src, jj);
    if (next && wr[static_cast<std::size_t>(dst)] == wr[static_cast<std::size_t>(src)])
      for (int jj = 0; jj < next->cols(); ++jj) next->at(dst, jj) -= c * next->at(src, jj);
  };
  auto b_row_scale = [&](int v, FieldElem c) {
    for (int jj = 0; jj < m; ++jj) b.at(v, jj) *= c;
    if (next)
      for (int jj = 0; jj < next->cols(); ++jj) next->at(v, jj) *= c;
  };

  NodeOutcome out;
  out.link_of_right.assign(static_cast<std::size_t>(rb), -1);
  out.birth_of_right.assign(static_cast<std::size_t>(rb), kVanishing);
  std::vector<int> b_owner(static_cast<std::size_t>(m), -1);

  // component-(i+1) side
  for (int v : border) {
    for (int j = 0; j < m; ++j) {
      int v0 = b_owner[static_cast<std::size_t>(j)];
      if (v0 < 0 || b.at(v, j).is_zero()) continue;
      b_row_axpy(v, v0, b.at(v, j));
    }
    std::vector<int> sa, sf;
    for (int j = 0; j < m; ++j) {
      if (b.at(v, j).is_zero()) continue;
      (a_owner[static_cast<std::size_t>(j)] >= 0 ? sa : sf).push_back(j);
    }
    int piv = -1;
    if (!sf.empty()) {
      piv = sf.front();
      col_scale(piv, b.at(v, piv).inverse());
      out.birth_of_right[static_cast<std::size_t>(v)] = kPresence;
    } else if (!sa.empty()) {
      piv = sa.front();
      for (int j : sa) {
        int cu = a_owner[static_cast<std::size_t>(j)];
        int cp = a_owner[static_cast<std::size_t>(piv)];
        if (compare_class(strands[static_cast<std::size_t>(cu)], strands[static_cast<std::size_t>(cp)]) > 0)
          piv = j;
      }
      b_row_scale(v, b.at(v, piv).inverse());
      out.link_of_right[static_cast<std::size_t>(v)] = a_owner[static_cast<std::size_t>(piv)];
    } else {
      continue;  // zero row: vanishing birth
    }
    for (int vv = 0; vv < rb; ++vv) {
      if (vv == v || b.at(vv, piv).is_zero()) continue;
      b_row_axpy(vv, v, b.at(vv, piv));
    }
    for (int j = 0; j < m; ++j) {
      if (j == piv || b.at(v, j).is_zero()) continue;
      FieldElem c = b.at(v, j);
      col_axpy(j, piv, c);
      int u1 = a_owner[static_cast<std::size_t>(piv)];
      if (u1 >= 0) {
        int u2 = a_owner[static_cast<std::size_t>(j)];
        if (u2 < 0) fail(errc::internal, "unrepairable column pollution");
        if (compare_class(strands[static_cast<std::size_t>(u2)], strands[static_cast<std::size_t>(u1)]) > 0)
          fail(errc::internal, "illegal repair direction");
        for (int jj = 0; jj < m; ++jj) a.at(u1, jj) += c * a.at(u2, jj);
      }
    }
    b_owner[static_cast<std::size_t>(piv)] = v;
  }

  // Cross-check the realized matching against the flag-rank invariants. The
  // class labels only need to be order-faithful per side.
  {
    std::vector<int> acls(static_cast<std::size_t>(ra));
    std::vector<int> sorted_idx = aorder;
    int label = 0;
    for (std::size_t k = 0; k < sorted_idx.size(); ++k) {
      if (k > 0 && compare_class(strands[static_cast<std::size_t>(sorted_idx[k - 1])],
                                 strands[static_cast<std::size_t>(sorted_idx[k])]) != 0)
        ++label;
      acls[static_cast<std::size_t>(sorted_idx[k])] = label;
    }
    std::vector<int> bcls(static_cast<std::size_t>(rb));
    for (int i = 0; i < rb; ++i) {
      long long w = wr[static_cast<std::size_t>(i)];
      int rank_below = static_cast<int>(std::count_if(wr.begin(), wr.end(),
                                                      [&](long long x) { return x < w; }));
      bcls[static_cast<std::size_t>(i)] = rank_below;
    }
    auto canonical = flag_link_counts(a0, b0, acls, bcls);
    std::map<std::pair<int, int>, int> realized;
    for (int v = 0; v < rb; ++v) {
      int u = out.link_of_right[static_cast<std::size_t>(v)];
      if (u >= 0)
        ++realized[{acls[static_cast<std::size_t>(u)], bcls[static_cast<std::size_t>(v)]}];
    }
    if (realized != canonical) {
      std::string msg = "node reduction disagrees with invariants; canonical:";
      for (auto& [k, c] : canonical)
        msg += " (" + std::to_string(k.first) + "," + std::to_string(k.second) + ")x" +
               std::to_string(c);
      msg += " realized:";
      for (auto& [k, c] : realized)
        msg += " (" + std::to_string(k.first) + "," + std::to_string(k.second) + ")x" +
               std::to_string(c);
      fail(errc::internal, msg);
    }
  }

  return out;
}

struct Classification {
  std::vector<IntervalLineBundle> intervals;
};

Classification classify(const ChainData& d) {
  validate_shapes(d);
  std::vector<Strand> strands;
  strands.reserve(static_cast<std::size_t>(d.ranks[0]));
  for (int j = 0; j < d.ranks[0]; ++j)
    strands.push_back(Strand{0, {d.weights[0][static_cast<std::size_t>(j)]}, kFirstComponent});

  Classification out;
  auto finish = [&](const Strand& st, int end_comp) {
    out.intervals.push_back(IntervalLineBundle{st.start + 1, end_comp + 1, st.degs});
  };

  std::vector<Mat> mp = d.m_prime;  // mutable: forward shadows are applied here
  for (int i = 0; i + 1 < d.s; ++i) {
    Mat a = mp[static_cast<std::size_t>(i)];
    Mat b = d.m_dblprime[static_cast<std::size_t>(i)];
    Mat* next = (i + 1 < d.s - 1) ? &mp[static_cast<std::size_t>(i + 1)] : nullptr;
    NodeOutcome res = reduce_node(a, b, next, strands, d.weights[static_cast<std::size_t>(i + 1)]);

    std::vector<bool> continued(strands.size(), false);
    std::vector<Strand> nxt(static_cast<std::size_t>(d.ranks[static_cast<std::size_t>(i + 1)]));
    for (int v = 0; v < d.ranks[static_cast<std::size_t>(i + 1)]; ++v) {
      long long w = d.weights[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(v)];
      int u = res.link_of_right[static_cast<std::size_t>(v)];
      if (u >= 0) {
        continued[static_cast<std::size_t>(u)] = true;
        Strand st = strands[static_cast<std::size_t>(u)];
        st.degs.push_back(w);
        nxt[static_cast<std::size_t>(v)] = std::move(st);
      } else {
        nxt[static_cast<std::size_t>(v)] =
            Strand{i + 1, {w}, res.birth_of_right[static_cast<std::size_t>(v)]};
      }
    }
    for (std::size_t u = 0; u < strands.size(); ++u)
      if (!continued[u]) finish(strands[u], i);
    strands = std::move(nxt);
  }
  for (const Strand& st : strands) finish(st, d.s - 1);
  std::sort(out.intervals.begin(), out.intervals.end());
  return out;
}

}  // namespace

ReduceResult reduce_chain(const ChainData& d) {
  validate_shapes(d);
  for (int c = 1; c < d.s; ++c)
    if (d.ranks[static_cast<std::size_t>(c)] != d.ranks[0])
      fail(errc::rank_mismatch, "vector bundle case needs equal ranks on all components");
  for (int i = 0; i + 1 < d.s; ++i) {
    if (d.node_dims[static_cast<std::size_t>(i)] != d.ranks[0])
      fail(errc::rank_mismatch, "vector bundle case needs node dimension = rank");
    if (!d.m_prime[static_cast<std::size_t>(i)].is_invertible())
      fail(errc::not_invertible, "M' singular at node " + std::to_string(i + 1));
    if (!d.m_dblprime[static_cast<std::size_t>(i)].is_invertible())
      fail(errc::not_invertible, "M'' singular at node " + std::to_string(i + 1));
  }

  Classification cls = classify(d);
  ReduceResult out;
  for (const auto& iv : cls.intervals) {
    if (iv.start != 1 || iv.end != d.s)
      fail(errc::internal, "vector bundle input produced a proper interval");
    out.bundles.push_back(iv.degrees);
  }
  std::sort(out.bundles.begin(), out.bundles.end());

  ChainData t;
  t.field = d.field;
  t.s = d.s;
  t.ranks = d.ranks;
  t.node_dims = d.node_dims;
  t.weights.assign(static_cast<std::size_t>(d.s), {});
  for (int c = 0; c < d.s; ++c) {
    t.weights[static_cast<std::size_t>(c)].reserve(out.bundles.size());
    for (const auto& bun : out.bundles)
      t.weights[static_cast<std::size_t>(c)].push_back(bun[static_cast<std::size_t>(c)]);
  }
  for (int i = 0; i + 1 < d.s; ++i) {
    t.m_prime.push_back(Mat::identity(d.field, d.ranks[0]));
    t.m_dblprime.push_back(Mat::identity(d.field, d.ranks[0]));
  }
  out.transformed = std::move(t);
  return out;
}

std::vector<IntervalLineBundle> decompose_torsion_free(const ChainData& d) {
  return classify(d).intervals;
}

namespace {

FieldElem random_elem(std::mt19937_64& g, const Field& f, bool nonzero) {
  for (;;) {
    long long v = static_cast<long long>(g() % 7) - 3;
    FieldElem e = f.from_int(v);
    if (!nonzero || !e.is_zero()) return e;
  }
}

Mat random_invertible(std::mt19937_64& g, const Field& f, int n) {
  for (int tries = 0; tries < 200; ++tries) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_elem(g, f, false);
    if (m.is_invertible()) return m;
  }
  return Mat::identity(f, n);
}

// Invertible T respecting the weight constraints: zero below the weight
// order, free above, and a shared invertible block on each set of equal
// weights. Returns the pair (T', T'') — they agree on the diagonal blocks and
// differ freely strictly above.
std::pair<Mat, Mat> random_weight_pair(std::mt19937_64& g, const Field& f,
                                       const std::vector<long long>& w) {
  int n = static_cast<int>(w.size());
  Mat tp = Mat(f, n, n), ts = Mat(f, n, n);
  std::map<long long, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[w[static_cast<std::size_t>(i)]].push_back(i);
  for (auto& [bw, idx] : blocks) {
    Mat blk = random_invertible(g, f, static_cast<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) {
        tp.at(idx[a], idx[b]) = blk.at(static_cast<int>(a), static_cast<int>(b));
        ts.at(idx[a], idx[b]) = blk.at(static_cast<int>(a), static_cast<int>(b));
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) {
        tp.at(i, j) = random_elem(g, f, false);
        ts.at(i, j) = random_elem(g, f, false);
      }
  return {tp, ts};
}

}  // namespace

ChainData random_admissible_transform(const ChainData& d, std::uint64_t seed) {
  validate_shapes(d);
  ChainData out = d;
  std::mt19937_64 g(seed);
  int moves = 4 + static_cast<int>(g() % 5);
  for (int k = 0; k < moves; ++k) {
    bool node_move = d.s == 1 ? false : (g() % 2 == 0);
    if (node_move) {
      int i = static_cast<int>(g() % static_cast<std::uint64_t>(d.s - 1));
      int m = out.node_dims[static_cast<std::size_t>(i)];
      if (m == 0) continue;
      Mat s = random_invertible(g, out.field, m);
      out.m_prime[static_cast<std::size_t>(i)] = out.m_prime[static_cast<std::size_t>(i)] * s;
      out.m_dblprime[static_cast<std::size_t>(i)] = out.m_dblprime[static_cast<std::size_t>(i)] * s;
    } else {
      int c = static_cast<int>(g() % static_cast<std::uint64_t>(d.s));
      auto [tp, ts] = random_weight_pair(g, out.field, out.weights[static_cast<std::size_t>(c)]);
      if (c + 1 < d.s)
        out.m_prime[static_cast<std::size_t>(c)] = tp * out.m_prime[static_cast<std::size_t>(c)];
      if (c >= 1)
        out.m_dblprime[static_cast<std::size_t>(c - 1)] =
            ts * out.m_dblprime[static_cast<std::size_t>(c - 1)];
    }
  }
  return out;
}

}  // namespace chain
}  // namespace vbcm
