#include "qhall/module_theory.hpp"

#include <algorithm>
#include <map>

#include "qhall/errors.hpp"

namespace qhall {

ModuleSummands::ModuleSummands(int n, std::vector<Summand> summands) : n_(n), summands_(std::move(summands)) {
  if (n < 2) throw DomainError("module needs n >= 2, got " + std::to_string(n));
  for (const auto& s : summands_) {
    if (s.vertex < 1 || s.vertex > n) throw DomainError("summand vertex out of range: " + std::to_string(s.vertex));
    if (s.length < 1) throw DomainError("summand length must be positive");
  }
  std::sort(summands_.begin(), summands_.end(), [](const Summand& a, const Summand& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.length > b.length;
  });
}

ModuleSummands ModuleSummands::from_multipartition(const MultiPartition& pi) {
  std::vector<Summand> out;
  for (int i = 1; i <= pi.n(); ++i) {
    for (int l : pi.dual(i).parts()) out.push_back({i, l});
  }
  return ModuleSummands(pi.n(), std::move(out));
}

MultiPartition ModuleSummands::to_multipartition() const {
  std::vector<std::vector<int>> lens(static_cast<std::size_t>(n_));
  for (const auto& s : summands_) lens[static_cast<std::size_t>(s.vertex - 1)].push_back(s.length);
  std::vector<Partition> duals;
  for (auto& l : lens) duals.emplace_back(std::move(l));
  return MultiPartition::from_duals(n_, std::move(duals));
}

DimVector ModuleSummands::dim() const {
  std::vector<int> d(static_cast<std::size_t>(n_), 0);
  for (const auto& s : summands_) {
    for (int k = 0; k < s.length; ++k) ++d[static_cast<std::size_t>(wrap(s.vertex + k, n_) - 1)];
  }
  return DimVector(std::move(d));
}

int hom_dim_ind(int n, int i, int l, int j, int m) {
  if (l < 1 || m < 1) throw DomainError("hom_dim_ind: lengths must be positive");
  // A map S_i[l] -> S_j[m] is fixed by where the top goes: a vector of S_j[m]
  // at depth t, of vertex i, killed by l steps of the arrow chain.
  const int residue = ((i - j) % n + n) % n;
  const int lo = std::max(0, m - l);
  const int hi = m - 1;
  int first = lo + ((residue - lo) % n + n) % n;
  if (first > hi) return 0;
  return (hi - first) / n + 1;
}

static void same_n(const ModuleSummands& a, const ModuleSummands& b) {
  if (a.n() != b.n()) throw DomainError("modules over different quivers");
}

int hom_dim(const ModuleSummands& m, const ModuleSummands& x) {
  same_n(m, x);
  int total = 0;
  for (const auto& a : m.summands()) {
    for (const auto& b : x.summands()) total += hom_dim_ind(m.n(), a.vertex, a.length, b.vertex, b.length);
  }
  return total;
}

int end_dim(const ModuleSummands& m) { return hom_dim(m, m); }

int ext_dim(const ModuleSummands& m, const ModuleSummands& x) {
  same_n(m, x);
  int e = hom_dim(m, x) - euler(m.dim(), x.dim());
  check_internal(e >= 0, "negative Ext dimension");
  return e;
}

int euler(const DimVector& a, const DimVector& b) {
  if (a.n() != b.n()) throw DomainError("euler: dimension vectors of different length");
  int s = 0;
  for (int i = 1; i <= a.n(); ++i) s += a[i] * b[i] - a[i] * b[i + 1];
  return s;
}

int orbit_dim(const MultiPartition& pi) {
  int sq = 0;
  const DimVector d = dim_vector(pi);
  for (int c : d.coords()) sq += c * c;
  return sq - end_dim(ModuleSummands::from_multipartition(pi));
}

MultiPartition reverse_dual(const MultiPartition& pi) {
  const int n = pi.n();
  std::vector<std::vector<int>> lens(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int l : pi.dual(i).parts()) lens[static_cast<std::size_t>(wrap(3 - i - l, n) - 1)].push_back(l);
  }
  std::vector<Partition> duals;
  for (auto& l : lens) duals.emplace_back(std::move(l));
  return MultiPartition::from_duals(n, std::move(duals));
}

IntPoly gl_order(int m) {
  IntPoly acc = IntPoly::one();
  for (int j = 0; j < m; ++j) acc *= IntPoly::monomial(1, m) - IntPoly::monomial(1, j);
  return acc;
}

IntPoly aut_poly(const MultiPartition& pi) {
  const auto mod = ModuleSummands::from_multipartition(pi);
  std::map<Summand, int> mult;
  for (const auto& s : mod.summands()) ++mult[s];
  int sq = 0;
  IntPoly acc = IntPoly::one();
  for (const auto& [s, m] : mult) {
    sq += m * m;
    acc *= gl_order(m);
  }
  const int e = end_dim(mod);
  check_internal(e >= sq, "End smaller than its semisimple part");
  return acc.shifted(e - sq);
}

}  // namespace qhall
