#include "qhall/order.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qhall/errors.hpp"
#include "qhall/module_theory.hpp"

namespace qhall {

std::vector<int> hom_profile(const MultiPartition& pi, int max_len) {
  const int n = pi.n();
  std::vector<int> out(static_cast<std::size_t>(n * max_len), 0);
  for (int i = 1; i <= n; ++i) {
    for (int l : pi.dual(i).parts()) {
      for (int j = 1; j <= n; ++j) {
        for (int m = 1; m <= max_len; ++m) {
          out[static_cast<std::size_t>((j - 1) * max_len + m - 1)] += hom_dim_ind(n, i, l, j, m);
        }
      }
    }
  }
  return out;
}

namespace {

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> reduce(const std::vector<std::vector<bool>>& leq) {
  const std::size_t s = leq.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < s && direct; ++c) {
        if (c != a && c != b && leq[a][c] && leq[c][b]) direct = false;
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

bool leq_deg(const MultiPartition& mu, const MultiPartition& la) {
  const DimVector d = dim_vector(la);
  if (mu.n() != la.n() || dim_vector(mu) != d) throw DomainError("leq_deg: different dimension vectors");
  const int len = profile_length(d);
  return dominates(hom_profile(mu, len), hom_profile(la, len));
}

std::vector<MultiPartition> covers_down(const MultiPartition& la) {
  std::set<MultiPartition> found;
  const int n = la.n();
  for (int i = 1; i <= n; ++i) {
    std::set<int> tops(la.dual(i).parts().begin(), la.dual(i).parts().end());
    for (int big : tops) {
      const Partition rest_i = la.dual(i).with_part_removed(big);
      for (int r = 1; r < big; ++r) {
        const int j = wrap(i + r, n);
        const Partition& pool = j == i ? rest_i : la.dual(j);
        std::set<int> smalls(pool.parts().begin(), pool.parts().end());
        smalls.insert(0);
        for (int s : smalls) {
          const int t = big - r - s;
          if (t < 1) continue;
          MultiPartition mu = la.with_dual(i, rest_i);
          mu = mu.with_dual(j, mu.dual(j).with_part_removed(s));
          mu = mu.with_dual(i, mu.dual(i).with_part_added(r + s));
          mu = mu.with_dual(j, mu.dual(j).with_part_added(s + t));
          found.insert(std::move(mu));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::size_t Poset::index_of(const MultiPartition& pi) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), pi);
  if (it == elements.end() || *it != pi) throw DomainError("element not in poset: " + to_string(pi));
  return static_cast<std::size_t>(it - elements.begin());
}

Poset degeneration_poset(const DimVector& d) {
  Poset p;
  p.elements = enumerate_pi(d);
  const int len = profile_length(d);
  std::vector<std::vector<int>> prof;
  prof.reserve(p.elements.size());
  for (const auto& pi : p.elements) prof.push_back(hom_profile(pi, len));
  const std::size_t s = p.elements.size();
  p.leq.assign(s, std::vector<bool>(s, false));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) p.leq[a][b] = dominates(prof[a], prof[b]);
  }
  p.covers = reduce(p.leq);
  return p;
}

Poset covers_closure(const DimVector& d) {
  Poset p;
  p.elements = enumerate_pi(d);
  const std::size_t s = p.elements.size();
  p.leq.assign(s, std::vector<bool>(s, false));
  for (std::size_t b = 0; b < s; ++b) {
    p.leq[b][b] = true;
    for (const auto& mu : covers_down(p.elements[b])) p.leq[p.index_of(mu)][b] = true;
  }
  // Warshall closure
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t a = 0; a < s; ++a) {
      if (!p.leq[a][k]) continue;
      for (std::size_t b = 0; b < s; ++b) {
        if (p.leq[k][b]) p.leq[a][b] = true;
      }
    }
  }
  p.covers = reduce(p.leq);
  return p;
}

std::vector<MultiPartition> ideal(const MultiPartition& la) {
  const DimVector d = dim_vector(la);
  const int len = profile_length(d);
  const auto top = hom_profile(la, len);
  std::vector<MultiPartition> out;
  for (auto& mu : enumerate_pi(d)) {
    if (dominates(hom_profile(mu, len), top)) out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace qhall
