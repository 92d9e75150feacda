#include "qhall/hall.hpp"

#include <set>

#include "qhall/errors.hpp"
#include "qhall/module_theory.hpp"
#include "qhall/monoid.hpp"

namespace qhall {

namespace {

// q^a [[b]] for removing one part p from a partition.
IntPoly removal_coeff(const Partition& p, int value) {
  return gauss(p.count_equal(value)).shifted(p.count_greater(value));
}

std::vector<Step> pull_back(std::vector<Step> steps) {
  for (auto& s : steps) s.target = reverse_dual(s.target);
  return steps;
}

void require_vertex(int i, int n) {
  if (i < 1 || i > n) throw DomainError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace

std::vector<Step> top_step(const MultiPartition& la, int i) {
  require_vertex(i, la.n());
  std::vector<Step> out;
  const Partition& col = la.dual(i);
  int last = -1;
  for (int p : col.parts()) {
    if (p == last) continue;
    last = p;
    MultiPartition mu = la.with_dual(i, col.with_part_removed(p));
    mu = mu.with_dual(i + 1, mu.dual(i + 1).with_part_added(p - 1));
    out.push_back({std::move(mu), removal_coeff(col, p)});
  }
  return out;
}

std::vector<Step> socle_step(const MultiPartition& la, int i) {
  require_vertex(i, la.n());
  return pull_back(top_step(reverse_dual(la), dual_vertex(i, la.n())));
}

std::vector<Step> top_extensions(const MultiPartition& mu, int i) {
  require_vertex(i, mu.n());
  std::set<int> choices(mu.dual(i + 1).parts().begin(), mu.dual(i + 1).parts().end());
  choices.insert(0);
  std::vector<Step> out;
  for (int s : choices) {
    MultiPartition la = mu.with_dual(i + 1, mu.dual(i + 1).with_part_removed(s));
    la = la.with_dual(i, la.dual(i).with_part_added(s + 1));
    IntPoly c = removal_coeff(la.dual(i), s + 1);
    out.push_back({std::move(la), std::move(c)});
  }
  return out;
}

std::vector<Step> socle_extensions(const MultiPartition& mu, int i) {
  require_vertex(i, mu.n());
  return pull_back(top_extensions(reverse_dual(mu), dual_vertex(i, mu.n())));
}

std::vector<Step> isotypic_step(const MultiPartition& la, int i, int a) {
  if (a < 1) throw DomainError("isotypic_step: multiplicity must be positive");
  HallSum cur{{la, IntPoly::one()}};
  for (int k = 0; k < a; ++k) {
    HallSum next;
    for (const auto& [src, c] : cur) {
      for (const auto& s : top_step(src, i)) next[s.target] += c * s.coeff;
    }
    cur = std::move(next);
  }
  const IntPoly fact = gauss_factorial(a);
  std::vector<Step> out;
  for (auto& [mu, c] : cur) {
    if (c.is_zero()) continue;
    out.push_back({mu, c.exact_div(fact)});
  }
  return out;
}

namespace {

class BracketEvaluator {
 public:
  explicit BracketEvaluator(const Word& w) : w_(w) {}

  IntPoly eval(std::size_t pos, const MultiPartition& la) {
    if (pos == w_.length()) return la.is_empty() ? IntPoly::one() : IntPoly{};
    auto key = std::make_pair(pos, la);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPoly acc;
    for (const auto& s : top_step(la, w_[pos])) acc += s.coeff * eval(pos + 1, s.target);
    memo_.emplace(std::move(key), acc);
    return acc;
  }

 private:
  const Word& w_;
  std::map<std::pair<std::size_t, MultiPartition>, IntPoly> memo_;
};

class FiltrationEvaluator {
 public:
  explicit FiltrationEvaluator(const TightForm& tf) : tf_(tf) {}

  IntPoly eval(std::size_t block, const MultiPartition& la) {
    if (block == tf_.pairs.size()) return la.is_empty() ? IntPoly::one() : IntPoly{};
    auto key = std::make_pair(block, la);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPoly acc;
    const auto [i, e] = tf_.pairs[block];
    for (const auto& s : isotypic_step(la, i, e)) acc += s.coeff * eval(block + 1, s.target);
    memo_.emplace(std::move(key), acc);
    return acc;
  }

 private:
  const TightForm& tf_;
  std::map<std::pair<std::size_t, MultiPartition>, IntPoly> memo_;
};

}  // namespace

IntPoly bracket(const Word& w, const MultiPartition& la) {
  if (w.n() != la.n()) throw DomainError("bracket: word and multipartition use different n");
  if (content(w) != dim_vector(la)) return {};
  BracketEvaluator ev(w);
  return ev.eval(0, la);
}

HallSum bracket_all(const Word& w) {
  HallSum cur{{MultiPartition::empty(w.n()), IntPoly::one()}};
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    HallSum next;
    for (const auto& [mu, c] : cur) {
      for (const auto& s : top_extensions(mu, *it)) next[s.target] += c * s.coeff;
    }
    cur = std::move(next);
  }
  std::erase_if(cur, [](const auto& kv) { return kv.second.is_zero(); });
  return cur;
}

IntPoly reduced_filtration_count(const Word& w, const MultiPartition& la) {
  if (w.n() != la.n()) throw DomainError("reduced_filtration_count: word and multipartition use different n");
  if (content(w) != dim_vector(la)) return {};
  const TightForm tf = tight_form(w);
  FiltrationEvaluator ev(tf);
  return ev.eval(0, la);
}

}  // namespace qhall
