#pragma once
// Brute-force representation theory over a small prime field. Modules are
// explicit matrices; nothing here uses the closed formulas of the library.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qhall/core.hpp"

namespace oracle {

using qhall::MultiPartition;
using qhall::wrap;

/// Dense matrix over F_p, row-major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
};

class Field {
 public:
  explicit Field(int p) : p_(p) {}
  int p() const { return p_; }
  int norm(long long x) const { return static_cast<int>(((x % p_) + p_) % p_); }
  int inv(int x) const {
    for (int y = 1; y < p_; ++y) {
      if (x * y % p_ == 1) return y;
    }
    throw std::logic_error("no inverse");
  }

  Mat mul(const Mat& x, const Mat& y) const {
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
      for (int k = 0; k < x.cols; ++k) {
        if (x(i, k) == 0) continue;
        for (int j = 0; j < y.cols; ++j) z(i, j) = (z(i, j) + x(i, k) * y(k, j)) % p_;
      }
    }
    return z;
  }

  Mat identity(int n) const {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref(Mat& m) const {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
      int s = r;
      while (s < m.rows && m(s, c) == 0) ++s;
      if (s == m.rows) continue;
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(s, j));
      const int iv = inv(m(r, c));
      for (int j = 0; j < m.cols; ++j) m(r, j) = m(r, j) * iv % p_;
      for (int i = 0; i < m.rows; ++i) {
        if (i == r || m(i, c) == 0) continue;
        const int f = m(i, c);
        for (int j = 0; j < m.cols; ++j) m(i, j) = norm(m(i, j) - f * m(r, j));
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  int rank(Mat m) const { return static_cast<int>(rref(m).size()); }

  /// Columns form a basis of {x : m x = 0}.
  Mat kernel(Mat m) const {
    const auto piv = rref(m);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c) {
      if (!is_piv[static_cast<std::size_t>(c)]) free.push_back(c);
    }
    Mat k(m.cols, static_cast<int>(free.size()));
    for (std::size_t f = 0; f < free.size(); ++f) {
      k(free[f], static_cast<int>(f)) = 1;
      for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], static_cast<int>(f)) = norm(-m(static_cast<int>(r), free[f]));
    }
    return k;
  }

  Mat transpose(const Mat& m) const {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    }
    return t;
  }

  Mat hstack(const Mat& x, const Mat& y) const {
    Mat z(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
      for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
      for (int j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
    }
    return z;
  }

  /// Coordinates c with basis * c = target (basis has independent columns).
  Mat coords(const Mat& basis, const Mat& target) const {
    Mat aug = hstack(basis, target);
    const auto piv = rref(aug);
    Mat c(basis.cols, target.cols);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] >= basis.cols) throw std::logic_error("target outside span");
      for (int j = 0; j < target.cols; ++j) c(piv[r], j) = aug(static_cast<int>(r), basis.cols + j);
    }
    return c;
  }

  /// Every k-dimensional subspace of F_p^m, as m x k basis matrices.
  std::vector<Mat> subspaces(int m, int k) const {
    std::vector<Mat> out;
    if (k == 0) {
      out.emplace_back(m, 0);
      return out;
    }
    std::vector<int> pivots(static_cast<std::size_t>(k));
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        emit_rref(m, k, pivots, out);
        return;
      }
      for (int c = start; c <= m - (k - idx); ++c) {
        pivots[static_cast<std::size_t>(idx)] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
    return out;
  }

 private:
  void emit_rref(int m, int k, const std::vector<int>& pivots, std::vector<Mat>& out) const {
    // free entries: row r, columns after pivots[r] that are not pivots
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < m; ++c) {
        bool pc = false;
        for (int x : pivots) pc = pc || x == c;
        if (!pc) slots.emplace_back(r, c);
      }
    }
    std::vector<int> vals(slots.size(), 0);
    while (true) {
      Mat basis(m, k);  // columns are the RREF rows
      for (int r = 0; r < k; ++r) basis(pivots[static_cast<std::size_t>(r)], r) = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) basis(slots[s].second, slots[s].first) = vals[s];
      out.push_back(basis);
      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == p_) vals[pos++] = 0;
      if (pos == vals.size()) break;
    }
  }

  int p_;
};

/// Representation of the cyclic quiver: spaces V_1..V_n, maps V_i -> V_{i+1}.
struct Rep {
  int n = 0;
  std::vector<int> dims;   // dims[i-1]
  std::vector<Mat> maps;   // maps[i-1] : V_i -> V_{i+1}, size dims[i] x dims[i-1]

  int dim(int vertex) const { return dims[static_cast<std::size_t>(wrap(vertex, n) - 1)]; }
  const Mat& map(int vertex) const { return maps[static_cast<std::size_t>(wrap(vertex, n) - 1)]; }
};

inline Rep indecomposable(int n, int i, int l) {
  Rep r;
  r.n = n;
  r.dims.assign(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> at(static_cast<std::size_t>(n));  // basis index per vertex
  for (int t = 0; t < l; ++t) {
    const auto v = static_cast<std::size_t>(wrap(i + t, n) - 1);
    at[v].push_back(t);
    ++r.dims[v];
  }
  for (int v = 1; v <= n; ++v) {
    const auto& src = at[static_cast<std::size_t>(v - 1)];
    const auto& dst = at[static_cast<std::size_t>(wrap(v + 1, n) - 1)];
    Mat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (std::size_t b = 0; b < dst.size(); ++b) {
        if (dst[b] == src[a] + 1) m(static_cast<int>(b), static_cast<int>(a)) = 1;
      }
    }
    r.maps.push_back(m);
  }
  return r;
}

inline Rep direct_sum(const Rep& x, const Rep& y) {
  Rep r;
  r.n = x.n;
  for (int v = 1; v <= x.n; ++v) r.dims.push_back(x.dim(v) + y.dim(v));
  for (int v = 1; v <= x.n; ++v) {
    const Mat& a = x.map(v);
    const Mat& b = y.map(v);
    Mat m(r.dim(v + 1), r.dim(v));
    for (int i = 0; i < a.rows; ++i) {
      for (int j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    }
    for (int i = 0; i < b.rows; ++i) {
      for (int j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
    }
    r.maps.push_back(m);
  }
  return r;
}

inline Rep zero_rep(int n) {
  Rep r;
  r.n = n;
  r.dims.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) r.maps.emplace_back(0, 0);
  return r;
}

inline Rep rep_of(const MultiPartition& pi) {
  Rep r = zero_rep(pi.n());
  for (int i = 1; i <= pi.n(); ++i) {
    for (int l : pi.dual(i).parts()) r = direct_sum(r, indecomposable(pi.n(), i, l));
  }
  return r;
}

/// The linear map f -> (f_{i+1} A_i - B_i f_i)_i from sum Hom(M_i,N_i) to
/// sum Hom(M_i,N_{i+1}); its kernel is Hom(M,N), its cokernel Ext^1(M,N).
inline Mat hom_system(const Field& F, const Rep& M, const Rep& N) {
  const int n = M.n;
  std::vector<int> off(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) off[static_cast<std::size_t>(i)] = off[static_cast<std::size_t>(i - 1)] + N.dim(i) * M.dim(i);
  int eqs = 0;
  for (int i = 1; i <= n; ++i) eqs += N.dim(i + 1) * M.dim(i);
  Mat sys(eqs, off.back());
  auto var = [&](int vertex, int r, int c) {
    const int v = wrap(vertex, n);
    return off[static_cast<std::size_t>(v - 1)] + r * M.dim(v) + c;
  };
  int row = 0;
  for (int i = 1; i <= n; ++i) {
    const Mat& A = M.map(i);  // M_i -> M_{i+1}
    const Mat& B = N.map(i);  // N_i -> N_{i+1}
    for (int r = 0; r < N.dim(i + 1); ++r) {
      for (int c = 0; c < M.dim(i); ++c, ++row) {
        // (f_{i+1} A)(r,c) = sum_k f_{i+1}(r,k) A(k,c)
        for (int k = 0; k < M.dim(i + 1); ++k) {
          if (A(k, c)) sys(row, var(i + 1, r, k)) = F.norm(sys(row, var(i + 1, r, k)) + A(k, c));
        }
        // (B f_i)(r,c) = sum_k B(r,k) f_i(k,c)
        for (int k = 0; k < N.dim(i); ++k) {
          if (B(r, k)) sys(row, var(i, k, c)) = F.norm(sys(row, var(i, k, c)) - B(r, k));
        }
      }
    }
  }
  return sys;
}

inline int hom_dim(const Field& F, const Rep& M, const Rep& N) {
  Mat sys = hom_system(F, M, N);
  return sys.cols - F.rank(sys);
}

inline int ext_dim(const Field& F, const Rep& M, const Rep& N) {
  Mat sys = hom_system(F, M, N);
  return sys.rows - F.rank(sys);
}

/// |Aut M| by walking all of End M.
inline long long aut_count(const Field& F, const Rep& M) {
  const Mat basis = F.kernel(hom_system(F, M, M));
  const int e = basis.cols;
  std::vector<int> coeff(static_cast<std::size_t>(e), 0);
  long long count = 0;
  while (true) {
    Mat f(basis.rows, 1);
    for (int k = 0; k < e; ++k) {
      if (coeff[static_cast<std::size_t>(k)] == 0) continue;
      for (int r = 0; r < basis.rows; ++r) f(r, 0) = (f(r, 0) + coeff[static_cast<std::size_t>(k)] * basis(r, k)) % F.p();
    }
    // split into blocks per vertex and test invertibility
    bool inv = true;
    int off = 0;
    for (int v = 1; v <= M.n && inv; ++v) {
      const int d = M.dim(v);
      Mat blk(d, d);
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) blk(r, c) = f(off + r * d + c, 0);
      }
      off += d * d;
      inv = F.rank(blk) == d;
    }
    if (inv) ++count;
    std::size_t pos = 0;
    while (pos < coeff.size() && ++coeff[pos] == F.p()) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
  }
  return count;
}

/// A submodule of an ambient rep, one basis matrix per vertex (columns in
/// ambient coordinates).
struct Sub {
  std::vector<Mat> basis;  // basis[v-1]
};

inline Sub whole(const Field& F, const Rep& M) {
  Sub s;
  for (int v = 1; v <= M.n; ++v) s.basis.push_back(F.identity(M.dim(v)));
  return s;
}

/// Path map of length k starting at vertex v.
inline Mat path(const Field& F, const Rep& M, int v, int k) {
  Mat p = F.identity(M.dim(v));
  for (int s = 0; s < k; ++s) p = F.mul(M.map(v + s), p);
  return p;
}

/// Isoclass of U/W for submodules W <= U of M, read off path ranks.
/// W may be the zero submodule (empty basis matrices).
inline MultiPartition iso_type(const Field& F, const Rep& M, const Sub& U, const Sub& W) {
  const int n = M.n;
  int total = 0;
  for (int v = 1; v <= n; ++v) total += U.basis[static_cast<std::size_t>(v - 1)].cols - W.basis[static_cast<std::size_t>(v - 1)].cols;
  // r(v,k) = dim of the image of U_v under the length-k path, modulo W
  auto r = [&](int v, int k) {
    v = wrap(v, n);
    const int t = wrap(v + k, n);
    const Mat img = F.mul(path(F, M, v, k), U.basis[static_cast<std::size_t>(v - 1)]);
    const Mat& w = W.basis[static_cast<std::size_t>(t - 1)];
    return F.rank(F.hstack(img, w)) - w.cols;
  };
  std::vector<std::vector<int>> lens(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    // T(v,k) = #summands with top v and length > k
    std::vector<int> T(static_cast<std::size_t>(total) + 2, 0);
    for (int k = 0; k <= total + 1; ++k) T[static_cast<std::size_t>(k)] = r(v, k) - r(v - 1, k + 1);
    for (int k = 0; k <= total; ++k) {
      const int mult = T[static_cast<std::size_t>(k)] - T[static_cast<std::size_t>(k) + 1];
      if (mult < 0) throw std::logic_error("negative multiplicity");
      for (int m = 0; m < mult; ++m) lens[static_cast<std::size_t>(v - 1)].push_back(k + 1);
    }
  }
  std::vector<qhall::Partition> duals;
  for (auto& l : lens) duals.emplace_back(std::move(l));
  return MultiPartition::from_duals(n, std::move(duals));
}

inline Sub zero_sub(const Rep& M) {
  Sub s;
  for (int v = 1; v <= M.n; ++v) s.basis.emplace_back(M.dim(v), 0);
  return s;
}

/// Submodules U' of U with U/U' = a copies of S_i, i.e. U'_i of codimension a
/// in U_i containing the arrow image, all other vertices unchanged.
inline std::vector<Sub> top_subs(const Field& F, const Rep& M, const Sub& U, int i, int a) {
  const int n = M.n;
  const Mat& Ui = U.basis[static_cast<std::size_t>(wrap(i, n) - 1)];
  const Mat img = F.mul(M.map(i - 1), U.basis[static_cast<std::size_t>(wrap(i - 1, n) - 1)]);
  // coordinates of the arrow image inside U_i; functionals vanishing on it
  const Mat c = F.coords(Ui, img);
  const Mat ann = F.kernel(F.transpose(c));  // columns: functionals on U_i coords
  std::vector<Sub> out;
  if (a > ann.cols) return out;
  for (const Mat& pick : F.subspaces(ann.cols, a)) {
    const Mat phi = F.transpose(F.mul(ann, pick));  // a x dim U_i
    const Mat kept = F.kernel(phi);                  // coords of U'_i
    Sub s = U;
    s.basis[static_cast<std::size_t>(wrap(i, n) - 1)] = F.mul(Ui, kept);
    out.push_back(std::move(s));
  }
  return out;
}

/// Simple submodules S_i of U: lines in U_i killed by the arrow.
inline std::vector<Sub> socle_lines(const Field& F, const Rep& M, const Sub& U, int i) {
  const int n = M.n;
  const Mat& Ui = U.basis[static_cast<std::size_t>(wrap(i, n) - 1)];
  const Mat k = F.kernel(F.mul(M.map(i), Ui));  // coords in U_i
  std::vector<Sub> out;
  for (const Mat& line : F.subspaces(k.cols, 1)) {
    Sub s = zero_sub(M);
    s.basis[static_cast<std::size_t>(wrap(i, n) - 1)] = F.mul(Ui, F.mul(k, line));
    out.push_back(std::move(s));
  }
  return out;
}

/// (isoclass of submodule, count) for submodules N with M/N = a S_i.
inline std::map<MultiPartition, long long> count_top(const Field& F, const MultiPartition& la, int i, int a) {
  const Rep M = rep_of(la);
  std::map<MultiPartition, long long> out;
  for (const Sub& N : top_subs(F, M, whole(F, M), i, a)) ++out[iso_type(F, M, N, zero_sub(M))];
  return out;
}

/// (isoclass of quotient, count) for simple submodules S_i of M.
inline std::map<MultiPartition, long long> count_socle(const Field& F, const MultiPartition& la, int i) {
  const Rep M = rep_of(la);
  std::map<MultiPartition, long long> out;
  for (const Sub& S : socle_lines(F, M, whole(F, M), i)) ++out[iso_type(F, M, whole(F, M), S)];
  return out;
}

/// Composition series of type w, by walking maximal submodules.
inline long long count_series(const Field& F, const MultiPartition& la, const std::vector<int>& w) {
  const Rep M = rep_of(la);
  std::function<long long(const Sub&, std::size_t)> go = [&](const Sub& U, std::size_t pos) -> long long {
    if (pos == w.size()) {
      for (const auto& b : U.basis) {
        if (b.cols != 0) return 0;
      }
      return 1;
    }
    long long t = 0;
    for (const Sub& V : top_subs(F, M, U, w[pos], 1)) t += go(V, pos + 1);
    return t;
  };
  return go(whole(F, M), 0);
}

}  // namespace oracle
