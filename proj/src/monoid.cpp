#include "qhall/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "qhall/errors.hpp"

namespace qhall {

bool is_separated(const MultiPartition& pi) {
  const int top = pi.max_length();
  for (int t = 1; t <= top; ++t) {
    bool gap = false;
    for (int a = 1; a <= pi.n() && !gap; ++a) gap = !pi.dual(a).contains(t);
    if (!gap) return false;
  }
  return true;
}

MultiPartition sigma_plus(int i, const MultiPartition& pi) {
  const int c = pi.dual(i + 1).first();
  MultiPartition out = pi.with_dual(i + 1, pi.dual(i + 1).with_part_removed(c));
  return out.with_dual(i, out.dual(i).with_part_added(c + 1));
}

namespace {

// Smallest part of dual(i) exceeding dual(i+1)_1, or 0.
int descent_part(int i, const MultiPartition& pi) {
  const int bar = pi.dual(i + 1).first();
  int best = 0;
  for (int c : pi.dual(i).parts()) {
    if (c > bar) best = c;
  }
  return best;
}

MultiPartition move_part_down(int i, int c, const MultiPartition& pi) {
  MultiPartition out = pi.with_dual(i, pi.dual(i).with_part_removed(c));
  return out.with_dual(i + 1, out.dual(i + 1).with_part_added(c - 1));
}

void require_vertex(int i, int n) {
  if (i < 1 || i > n) throw DomainError("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

}  // namespace

bool admits_sigma_minus(int i, const MultiPartition& pi) { return descent_part(i, pi) > 0; }

MultiPartition sigma_minus(int i, const MultiPartition& pi) {
  require_vertex(i, pi.n());
  const int c = descent_part(i, pi);
  if (c == 0) throw DomainError("sigma_minus(" + std::to_string(i) + "): no part above the next column");
  return move_part_down(i, c, pi);
}

MultiPartition wp(const Word& w) {
  MultiPartition pi = MultiPartition::empty(w.n());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) pi = sigma_plus(*it, pi);
  return pi;
}

MultiPartition star_simples(int n, const std::vector<int>& vertices) { return wp(Word(n, vertices)); }

Word canonical_word(const MultiPartition& pi) {
  if (!is_separated(pi)) throw DomainError("canonical_word: multipartition is not separated");
  std::vector<int> letters;
  MultiPartition cur = pi;
  while (!cur.is_empty()) {
    int i = 1;
    while (i <= cur.n() && !admits_sigma_minus(i, cur)) ++i;
    check_internal(i <= cur.n(), "separated multipartition with no descent");
    letters.push_back(i);
    cur = sigma_minus(i, cur);
  }
  return Word(pi.n(), std::move(letters));
}

std::int64_t fiber_cap_from_env() {
  const char* env = std::getenv("QHALL_FIBER_CAP");
  if (env == nullptr || *env == '\0') return kDefaultFiberCap;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw DomainError(std::string("QHALL_FIBER_CAP must be a positive integer, got '") + env + "'");
  return v;
}

namespace {

// One-step predecessors (i, mu) with sigma_plus(i, mu) == pi and mu separated.
std::vector<std::pair<int, MultiPartition>> predecessors(const MultiPartition& pi) {
  std::vector<std::pair<int, MultiPartition>> out;
  for (int i = 1; i <= pi.n(); ++i) {
    const int bar = pi.dual(i + 1).first();
    int last = -1;
    for (int c : pi.dual(i).parts()) {
      if (c <= bar) break;
      if (c == last) continue;
      last = c;
      MultiPartition mu = move_part_down(i, c, pi);
      if (is_separated(mu)) out.emplace_back(i, std::move(mu));
    }
  }
  return out;
}

class FiberCounter {
 public:
  const Integer& count(const MultiPartition& pi) {
    if (auto it = memo_.find(pi); it != memo_.end()) return it->second;
    Integer total = pi.is_empty() ? 1 : 0;
    for (const auto& [i, mu] : predecessors(pi)) total += count(mu);
    return memo_.emplace(pi, total).first->second;
  }

 private:
  std::map<MultiPartition, Integer> memo_;
};

class FiberLister {
 public:
  const std::vector<Word>& list(const MultiPartition& pi) {
    if (auto it = memo_.find(pi); it != memo_.end()) return it->second;
    std::vector<Word> out;
    if (pi.is_empty()) out.emplace_back(pi.n(), std::vector<int>{});
    for (const auto& [i, mu] : predecessors(pi)) {
      for (const auto& tail : list(mu)) out.push_back(Word(pi.n(), {i}) + tail);
    }
    return memo_.emplace(pi, std::move(out)).first->second;
  }

 private:
  std::map<MultiPartition, std::vector<Word>> memo_;
};

}  // namespace

Integer fiber_size(const MultiPartition& pi) {
  if (!is_separated(pi)) throw DomainError("fiber: multipartition is not separated");
  FiberCounter counter;
  return counter.count(pi);
}

std::vector<Word> fiber(const MultiPartition& pi, std::int64_t cap) {
  const Integer size = fiber_size(pi);
  if (size > Integer(std::to_string(cap))) {
    throw FiberCapExceeded("fiber has " + size.get_str() + " words, above the cap of " + std::to_string(cap));
  }
  FiberLister lister;
  std::vector<Word> out = lister.list(pi);
  std::sort(out.begin(), out.end());
  return out;
}

Word TightForm::expand(int n) const {
  std::vector<int> letters;
  for (const auto& [j, e] : pairs) letters.insert(letters.end(), static_cast<std::size_t>(e), j);
  return Word(n, std::move(letters));
}

TightForm tight_form(const Word& w) {
  TightForm tf;
  for (int x : w.letters()) {
    if (!tf.pairs.empty() && tf.pairs.back().first == x) {
      ++tf.pairs.back().second;
    } else {
      tf.pairs.emplace_back(x, 1);
    }
  }
  return tf;
}

bool is_distinguished(const Word& w) {
  const TightForm tf = tight_form(w);
  // Walk blocks right to left, growing nu(a) = wp(w_a) as we go.
  MultiPartition nu = MultiPartition::empty(w.n());
  for (auto it = tf.pairs.rbegin(); it != tf.pairs.rend(); ++it) {
    const auto [i, e] = *it;
    if (nu.dual(i + 1).part(static_cast<std::size_t>(e - 1)) < nu.dual(i).first()) return false;
    for (int k = 0; k < e; ++k) nu = sigma_plus(i, nu);
  }
  return true;
}

}  // namespace qhall
