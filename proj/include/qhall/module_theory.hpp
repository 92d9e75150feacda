#pragma once

#include <utility>
#include <vector>

#include "qhall/core.hpp"
#include "qhall/poly.hpp"

namespace qhall {

/// One copy of S_i[l].
struct Summand {
  int vertex = 1;
  int length = 1;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Multiset of indecomposables, sorted by (vertex, length descending).
class ModuleSummands {
 public:
  ModuleSummands() = default;
  ModuleSummands(int n, std::vector<Summand> summands);

  static ModuleSummands from_multipartition(const MultiPartition& pi);
  MultiPartition to_multipartition() const;

  int n() const { return n_; }
  const std::vector<Summand>& summands() const { return summands_; }
  DimVector dim() const;

  friend bool operator==(const ModuleSummands&, const ModuleSummands&) = default;

 private:
  int n_ = 0;
  std::vector<Summand> summands_;
};

/// dim Hom(S_i[l], S_j[m]) on the cyclic quiver with n vertices.
int hom_dim_ind(int n, int i, int l, int j, int m);
int hom_dim(const ModuleSummands& m, const ModuleSummands& x);
int end_dim(const ModuleSummands& m);
int ext_dim(const ModuleSummands& m, const ModuleSummands& x);

/// Euler form sum a_i b_i - sum a_i b_{i+1}.
int euler(const DimVector& a, const DimVector& b);

int orbit_dim(const MultiPartition& pi);

/// Vector-space dual with vertices relabelled so arrows keep pointing
/// i -> i+1: S_i[l] goes to S_{3-i-l}[l].
MultiPartition reverse_dual(const MultiPartition& pi);
/// The vertex that S_i turns into under reverse_dual.
inline int dual_vertex(int i, int n) { return wrap(2 - i, n); }

/// |Aut M(pi)| over F_q as a polynomial in q.
IntPoly aut_poly(const MultiPartition& pi);
/// |GL_m(F_q)|
IntPoly gl_order(int m);

}  // namespace qhall
