#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "oracle/gates.hpp"
#include "qhall/errors.hpp"
#include "qhall/hall.hpp"
#include "qhall/monoid.hpp"
#include "qhall/verify.hpp"

using namespace qhall;

namespace {

MultiPartition mp(int n, std::vector<Partition> c) { return MultiPartition::from_parts(n, std::move(c)); }

Word compact(int n, const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return Word(n, std::move(v));
}

bool fits(const DimVector& a, const DimVector& b) {
  for (int k = 1; k <= a.n(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// Number of words w with wp(w) = target, by prepending letters to suffixes.
Integer forward_count(const MultiPartition& target) {
  const int n = target.n();
  const DimVector d = dim_vector(target);
  std::unordered_map<MultiPartition, Integer> layer{{MultiPartition::empty(n), Integer(1)}};
  for (int len = 0; len < target.size(); ++len) {
    std::unordered_map<MultiPartition, Integer> next;
    for (const auto& [mu, c] : layer) {
      for (int i = 1; i <= n; ++i) {
        MultiPartition nu = sigma_plus(i, mu);
        if (fits(dim_vector(nu), d)) next[nu] += c;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find(target);
  return it == layer.end() ? Integer(0) : it->second;
}

}  // namespace

TEST(Separated, Examples) {
  EXPECT_TRUE(is_separated(MultiPartition::empty(2)));
  EXPECT_TRUE(is_separated(reference::large_separated()));
  EXPECT_FALSE(is_separated(mp(2, {{1}, {1}})));
  EXPECT_FALSE(is_separated(reference::alpha()));
  EXPECT_TRUE(is_separated(reference::beta()));
  EXPECT_TRUE(is_separated(reference::gamma()));
  EXPECT_TRUE(is_separated(reference::delta()));
}

TEST(Sigma, PlusGoldens) {
  const auto pi = reference::large_separated();
  EXPECT_EQ(sigma_plus(1, pi), mp(3, {{5, 4, 4, 2, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(sigma_plus(2, pi), mp(3, {{4, 3, 3, 1, 1}, {4, 3, 2}, {1, 1}}));
  EXPECT_EQ(sigma_plus(3, pi), mp(3, {{3, 2, 2}, {3, 2, 1}, {3, 3, 1, 1, 1, 1}}));
  EXPECT_EQ(sigma_plus(1, MultiPartition::empty(3)), mp(3, {{1}, {}, {}}));
}

TEST(Sigma, MinusGoldens) {
  const auto pi = reference::large_separated();
  EXPECT_EQ(sigma_minus(1, pi), mp(3, {{3, 2, 2}, {4, 3, 2, 1}, {2, 2}}));
  EXPECT_EQ(sigma_minus(2, pi), mp(3, {{4, 3, 3, 1, 1}, {2, 1}, {3, 3}}));
  EXPECT_FALSE(admits_sigma_minus(3, pi));
  EXPECT_THROW(sigma_minus(3, pi), DomainError);
  const auto p2 = mp(2, {{2, 1, 1}, {1, 1}});
  const auto back = sigma_minus(1, sigma_plus(1, p2));
  EXPECT_EQ(back, mp(2, {{2, 2, 2}, {}}));
  EXPECT_NE(back, p2);
}

TEST(Sigma, PlusUndoesMinus) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& pi : oracle::all_up_to(n, n == 4 ? 6 : 8)) {
      if (!is_separated(pi)) continue;
      for (int i = 1; i <= n; ++i) {
        if (!admits_sigma_minus(i, pi)) continue;
        const auto mu = sigma_minus(i, pi);
        EXPECT_TRUE(is_separated(mu));
        EXPECT_EQ(sigma_plus(i, mu), pi);
      }
    }
  }
}

TEST(Wp, Examples) {
  EXPECT_EQ(wp(Word(2, {})), MultiPartition::empty(2));
  EXPECT_EQ(wp(compact(2, "121")), reference::delta());
  EXPECT_EQ(wp(compact(2, "112")), reference::beta());
  EXPECT_EQ(wp(compact(2, "211")), reference::gamma());
  EXPECT_NE(wp(compact(2, "12")), wp(compact(2, "21")));
}

TEST(Wp, RandomWordsSeparatedRightSize) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<int> letters;
    for (int k = 0; k < len; ++k) letters.push_back(std::uniform_int_distribution<int>(1, n)(rng));
    const Word w(n, letters);
    const auto pi = wp(w);
    EXPECT_TRUE(is_separated(pi));
    EXPECT_EQ(pi.size(), len);
    EXPECT_EQ(dim_vector(pi), content(w));
    EXPECT_EQ(star_simples(n, letters), pi);
  }
}

TEST(Wp, SimpleGeneratorsMatchSummandGluing) {
  // S_i * S_{i+1} is the uniserial S_i[2]; S_{i+1} * S_i is split
  for (int n = 3; n <= 4; ++n) {
    EXPECT_EQ(wp(Word(n, {1, 2})), ModuleSummands(n, {{1, 2}}).to_multipartition());
    EXPECT_EQ(wp(Word(n, {2, 1})), ModuleSummands(n, {{1, 1}, {2, 1}}).to_multipartition());
  }
}

TEST(CanonicalWord, Examples) {
  EXPECT_TRUE(canonical_word(MultiPartition::empty(3)).empty());
  EXPECT_EQ(canonical_word(reference::delta()), compact(2, "121"));
  const auto w = canonical_word(reference::large_separated());
  EXPECT_EQ(wp(w), reference::large_separated());
  EXPECT_THROW(canonical_word(reference::alpha()), DomainError);
}

TEST(CanonicalWord, RoundTrip) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& pi : oracle::all_up_to(n, 8)) {
      if (is_separated(pi)) EXPECT_EQ(wp(canonical_word(pi)), pi) << to_string(pi);
    }
  }
}

TEST(Fiber, MatchesBruteForce) {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& d : dim_vectors_up_to(n, 6)) {
      std::map<MultiPartition, std::set<Word>> brute;
      for (const auto& w : words_with_content(d)) brute[wp(w)].insert(w);
      for (const auto& pi : enumerate_pi(d)) {
        if (!is_separated(pi)) {
          EXPECT_EQ(brute.count(pi), 0u);
          continue;
        }
        const auto f = fiber(pi);
        EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
        EXPECT_EQ(std::set<Word>(f.begin(), f.end()), brute[pi]) << to_string(pi);
        EXPECT_EQ(fiber_size(pi), Integer(static_cast<long>(f.size())));
      }
    }
  }
}

TEST(Fiber, SmallListedFiber) {
  const auto f = fiber(reference::small_separated());
  const auto listed = reference::small_fiber_words();
  EXPECT_EQ(std::set<Word>(f.begin(), f.end()), std::set<Word>(listed.begin(), listed.end()));
}

TEST(Fiber, LargeCensusIndependentCount) {
  // The forward count over all suffix images is independent of the
  // backward search used by fiber().
  const auto pi = reference::large_separated();
  const Integer expected = forward_count(pi);
  EXPECT_EQ(expected, Integer(18));
  EXPECT_EQ(fiber_size(pi), expected);
  const auto f = fiber(pi);
  EXPECT_EQ(Integer(static_cast<long>(f.size())), expected);
  std::set<Word> all(f.begin(), f.end());
  for (const auto& w : reference::large_fiber_words()) {
    EXPECT_EQ(all.count(w), 1u) << to_string(w);
    EXPECT_EQ(wp(w), pi);
  }
}

TEST(Fiber, EmptyAndErrors) {
  const auto f = fiber(MultiPartition::empty(2));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(f[0].empty());
  EXPECT_THROW(fiber(reference::alpha()), DomainError);
  EXPECT_THROW(fiber(reference::large_separated(), 5), FiberCapExceeded);
}

TEST(TightForm, Examples) {
  EXPECT_EQ(tight_form(compact(2, "1121")).pairs, (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 1}}));
  EXPECT_TRUE(tight_form(Word(2, {})).pairs.empty());
  EXPECT_EQ(tight_form(compact(2, "2111")).pairs, (std::vector<std::pair<int, int>>{{2, 1}, {1, 3}}));
  for (const auto& w : words_of_length(3, 6)) EXPECT_EQ(tight_form(w).expand(3), w);
}

TEST(Distinguished, Examples) {
  EXPECT_TRUE(is_distinguished(Word(2, {})));
  EXPECT_TRUE(is_distinguished(compact(2, "112")));
  const auto listed = reference::small_fiber_words();
  for (std::size_t k = 0; k < listed.size(); ++k) EXPECT_EQ(is_distinguished(listed[k]), k < 5) << k;
}

TEST(Distinguished, MatchesUniqueReducedFiltration) {
  for (int n : {2, 3}) {
    for (int len = 0; len <= 6; ++len) {
      for (const auto& w : words_of_length(n, len)) {
        EXPECT_EQ(is_distinguished(w), reduced_filtration_count(w, wp(w)).is_one()) << to_string(w);
      }
    }
  }
}

TEST(Relations, GeneratorRelationsUnderWp) {
  // n >= 3: i(i+1)i ~ ii(i+1) and (i+1)i(i+1) ~ i(i+1)(i+1)
  // n = 2: 1211 ~ 1121 and 2122 ~ 2212
  // non-adjacent letters commute
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<Word, Word>> rel;
    for (int i = 1; i <= n; ++i) {
      const int j = wrap(i + 1, n);
      if (n == 2) {
        rel.emplace_back(Word(n, {i, j, i, i}), Word(n, {i, i, j, i}));
      } else {
        rel.emplace_back(Word(n, {i, j, i}), Word(n, {i, i, j}));
        rel.emplace_back(Word(n, {j, i, j}), Word(n, {i, j, j}));
        for (int k = 1; k <= n; ++k) {
          if (k != i && k != j && k != wrap(i - 1, n)) rel.emplace_back(Word(n, {i, k}), Word(n, {k, i}));
        }
      }
    }
    for (int lu = 0; lu <= 2; ++lu) {
      for (const auto& u : words_of_length(n, lu)) {
        for (int lv = 0; lv <= 2; ++lv) {
          for (const auto& v : words_of_length(n, lv)) {
            for (const auto& [a, b] : rel) EXPECT_EQ(wp(u + a + v), wp(u + b + v));
          }
        }
      }
    }
  }
}
