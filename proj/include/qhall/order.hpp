#pragma once

#include <utility>
#include <vector>

#include "qhall/core.hpp"

namespace qhall {

/// dim Hom(M(pi), S_j[m]) for j = 1..n, m = 1..max_len, laid out j-major.
/// Two profiles with the same max_len compare by the degeneration order.
std::vector<int> hom_profile(const MultiPartition& pi, int max_len);
/// Test-module length bound sufficient for dimension vector d.
inline int profile_length(const DimVector& d) { return d.total() + d.n(); }

/// mu <= la in the degeneration order: Hom(M(mu), X) >= Hom(M(la), X) for every indecomposable X.
bool leq_deg(const MultiPartition& mu, const MultiPartition& la);

/// Everything one exchange move below la.
std::vector<MultiPartition> covers_down(const MultiPartition& la);

/// Finite poset on one Pi_d; elements in enumerate_pi order.
struct Poset {
  std::vector<MultiPartition> elements;
  /// leq[a][b] is elements[a] <= elements[b].
  std::vector<std::vector<bool>> leq;
  /// (a, b) with elements[a] covered by elements[b].
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t index_of(const MultiPartition& pi) const;
};

/// The degeneration order on Pi_d via Hom profiles.
Poset degeneration_poset(const DimVector& d);
/// The order generated by covers_down on Pi_d.
Poset covers_closure(const DimVector& d);

/// Pi^{<= la}
std::vector<MultiPartition> ideal(const MultiPartition& la);

}  // namespace qhall
