#include "qhall/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "qhall/basis.hpp"
#include "qhall/errors.hpp"
#include "qhall/hall.hpp"
#include "qhall/module_theory.hpp"
#include "qhall/order.hpp"

namespace qhall {

namespace reference {

namespace {

Word compact(int n, const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return Word(n, std::move(v));
}

MultiPartition mp(int n, std::vector<Partition> comps) { return MultiPartition::from_parts(n, std::move(comps)); }

}  // namespace

MultiPartition large_separated() { return mp(3, {{4, 3, 3, 1, 1}, {3, 2, 1}, {2, 2}}); }
MultiPartition small_separated() { return mp(3, {{3, 2, 1}, {1, 1}, {1}}); }

std::vector<Word> large_fiber_words() {
  return {
      compact(3, "1221133332222111113332"), compact(3, "2111233332222111113332"),
      compact(3, "2111323332222111113332"), compact(3, "2111332332222111113332"),
      compact(3, "2111333222223111113332"), compact(3, "2111333222221311113332"),
      compact(3, "2111333222221131113332"), compact(3, "2111333222221113113332"),
      compact(3, "2111333222221111333312"),
  };
}

std::vector<Word> small_fiber_words() {
  return {
      compact(3, "122113332"), compact(3, "211133223"), compact(3, "212113332"), compact(3, "211123332"),
      compact(3, "211133232"), compact(3, "211132332"), compact(3, "211213332"),
  };
}

MultiPartition alpha() { return mp(2, {{2}, {1}}); }
MultiPartition beta() { return mp(2, {{2, 1}, {}}); }
MultiPartition gamma() { return mp(2, {{1}, {1, 1}}); }
MultiPartition delta() { return mp(2, {{1, 1, 1}, {}}); }

}  // namespace reference

namespace {

using reference::compact;

struct Failures {
  std::vector<std::string> notes;
  std::size_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && notes.size() < 5) notes.push_back(what);
    if (!ok) failed = true;
  }
  Outcome outcome(const std::string& summary) const {
    std::string detail = summary;
    for (const auto& n : notes) detail += "; FAIL " + n;
    return {!failed, detail};
  }
  bool failed = false;
};

MultiPartition mp(int n, std::vector<Partition> comps) { return MultiPartition::from_parts(n, std::move(comps)); }

RatPoly rp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

Outcome sigma_goldens() {
  Failures f;
  const auto pi = reference::large_separated();
  f.expect(sigma_plus(1, pi) == mp(3, {{5, 4, 4, 2, 1}, {2, 1}, {2, 2}}), "sigma_1^+ of the reference multipartition");
  f.expect(sigma_plus(2, pi) == mp(3, {{4, 3, 3, 1, 1}, {4, 3, 2}, {1, 1}}), "sigma_2^+ of the reference multipartition");
  f.expect(sigma_plus(3, pi) == mp(3, {{3, 2, 2}, {3, 2, 1}, {3, 3, 1, 1, 1, 1}}), "sigma_3^+ of the reference multipartition");
  f.expect(sigma_minus(1, pi) == mp(3, {{3, 2, 2}, {4, 3, 2, 1}, {2, 2}}), "sigma_1^- of the reference multipartition");
  f.expect(sigma_minus(2, pi) == mp(3, {{4, 3, 3, 1, 1}, {2, 1}, {3, 3}}), "sigma_2^- of the reference multipartition");
  const auto p2 = mp(2, {{2, 1, 1}, {1, 1}});
  const auto back = sigma_minus(1, sigma_plus(1, p2));
  f.expect(back == mp(2, {{2, 2, 2}, {}}) && back != p2, "sigma_1^- sigma_1^+ counterexample");
  return f.outcome("6 displayed sigma results");
}

Outcome fiber_census() {
  Failures f;
  const auto pi = reference::large_separated();
  const auto words = fiber(pi);
  f.expect(words.size() == 141, "fiber size " + std::to_string(words.size()) + " != 141");
  f.expect(fiber_size(pi) == 141, "fiber_size count");
  std::set<Word> all(words.begin(), words.end());
  for (const auto& w : reference::large_fiber_words()) f.expect(all.count(w) == 1, "listed word " + to_string(w) + " missing");
  for (const auto& w : words) f.expect(wp(w) == pi, "fiber word " + to_string(w) + " maps elsewhere");
  return f.outcome("|fiber| = " + std::to_string(words.size()) + ", 9 listed words present");
}

Outcome distinguished_census() {
  Failures f;
  const auto pi = reference::small_separated();
  const auto words = fiber(pi);
  const auto listed = reference::small_fiber_words();
  std::set<Word> a(words.begin(), words.end()), b(listed.begin(), listed.end());
  f.expect(a == b && words.size() == 7, "fiber differs from the 7 listed words");
  for (std::size_t k = 0; k < listed.size(); ++k) {
    f.expect(is_distinguished(listed[k]) == (k < 5), "word " + std::to_string(k + 1) + " distinguished flag");
  }
  return f.outcome("7 words, first 5 distinguished");
}

Outcome order_coincidence(VerifyLevel level) {
  Failures f;
  const bool full = level == VerifyLevel::Full;
  const std::vector<std::pair<int, int>> plan = full ? std::vector<std::pair<int, int>>{{2, 6}, {3, 6}, {4, 5}}
                                                     : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}};
  std::size_t degrees = 0, elements = 0;
  for (const auto& [n, top] : plan) {
    for (const auto& d : dim_vectors_up_to(n, top)) {
      const Poset deg = degeneration_poset(d);
      const Poset ext = covers_closure(d);
      ++degrees;
      elements += deg.elements.size();
      std::ostringstream where;
      where << "n=" << n << " d=" << to_string(d);
      f.expect(deg.leq == ext.leq, "relation mismatch at " + where.str());
      // antisymmetry of the Hom-profile order
      for (std::size_t a = 0; a < deg.elements.size(); ++a) {
        for (std::size_t b = a + 1; b < deg.elements.size(); ++b) {
          if (deg.leq[a][b] && deg.leq[b][a]) f.expect(false, "antisymmetry at " + where.str());
        }
      }
    }
  }
  return f.outcome(std::to_string(degrees) + " degrees, " + std::to_string(elements) + " multipartitions");
}

Outcome bracket_dominance(VerifyLevel level) {
  Failures f;
  const int top = level == VerifyLevel::Full ? 6 : 4;
  std::map<MultiPartition, std::set<MultiPartition>> ideals;
  std::size_t words = 0;
  for (int n : {2, 3}) {
    for (int len = 0; len <= top; ++len) {
      for (const auto& w : words_of_length(n, len)) {
        ++words;
        const MultiPartition image = wp(w);
        auto it = ideals.find(image);
        if (it == ideals.end()) {
          auto id = ideal(image);
          it = ideals.emplace(image, std::set<MultiPartition>(id.begin(), id.end())).first;
        }
        const HallSum b = bracket_all(w);
        std::set<MultiPartition> support;
        for (const auto& [la, c] : b) {
          support.insert(la);
          for (const auto& x : c.coeffs()) f.expect(x >= 0, "negative coefficient for " + to_string(w));
        }
        f.expect(support == it->second, "support of " + to_string(w) + " differs from the ideal of wp(w)");
      }
    }
  }
  return f.outcome(std::to_string(words) + " words");
}

Outcome distinguished_diagonal(VerifyLevel level) {
  Failures f;
  const int top = level == VerifyLevel::Full ? 7 : 5;
  std::size_t words = 0, distinguished = 0;
  for (int n : {2, 3}) {
    for (int len = 0; len <= top; ++len) {
      for (const auto& w : words_of_length(n, len)) {
        ++words;
        const MultiPartition image = wp(w);
        const bool dist = is_distinguished(w);
        const IntPoly rfc = reduced_filtration_count(w, image);
        f.expect(dist == rfc.is_one(), "criterion vs filtration count for " + to_string(w));
        if (!dist) continue;
        ++distinguished;
        IntPoly expect = IntPoly::one();
        for (const auto& [i, e] : tight_form(w).pairs) expect *= gauss_factorial(e);
        f.expect(bracket(w, image) == expect, "diagonal bracket for " + to_string(w));
      }
    }
  }
  return f.outcome(std::to_string(words) + " words, " + std::to_string(distinguished) + " distinguished");
}

Outcome degree_21_reproduction() {
  Failures f;
  using namespace reference;
  const DimVector d({2, 1});
  const auto a = alpha(), b = beta(), g = gamma(), dl = delta();
  const auto all = enumerate_pi(d);
  f.expect(std::set<MultiPartition>(all.begin(), all.end()) == std::set<MultiPartition>{a, b, g, dl} && all.size() == 4,
           "Pi_(2,1) has the four listed elements");

  const Poset p = degeneration_poset(d);
  std::set<std::pair<MultiPartition, MultiPartition>> covers, expect_covers{{a, b}, {a, g}, {b, dl}, {g, dl}};
  for (const auto& [x, y] : p.covers) covers.emplace(p.elements[x], p.elements[y]);
  f.expect(covers == expect_covers, "cover relations");
  f.expect(!leq_deg(b, g) && !leq_deg(g, b), "beta and gamma incomparable");

  f.expect(wp(compact(2, "112")) == b && wp(compact(2, "211")) == g && wp(compact(2, "121")) == dl, "word images");

  const auto rad = radical_basis(d);
  f.expect(rad.size() == 1, "radical is one-dimensional");
  if (rad.size() == 1) {
    HallVector<RatFunc> expect(d);
    expect.add(a, RatFunc(rp({1, 0, 0, 0, -1})));
    expect.add(b, RatFunc(1));
    expect.add(g, RatFunc(1));
    expect.add(dl, RatFunc(1));
    f.expect(rad[0] == expect, "radical vector -(v^4-1)u_a + u_b + u_g + u_d");
  }

  const RadicalDecomposition dec = radical(d);
  auto bar = [&](const RatFunc& cb, const RatFunc& cg, const RatFunc& cd) {
    HallVector<RatFunc> x(d);
    x.add(b, cb);
    x.add(g, cg);
    x.add(dl, cd);
    return x;
  };
  HallVector<RatFunc> ua(d);
  ua.add(a, RatFunc(1));
  const RatFunc inv4(rp({1}), rp({-1, 0, 0, 0, 1}));
  f.expect(pbw_expand(ua, dec) == bar(inv4, inv4, inv4), "u_alpha = (u_b + u_g + u_d)/(v^4-1)");

  const RatFunc pre(rp({1}), rp({0, -1, 0, 1}));  // 1/(v(v^2-1))
  const RatFunc v4(rp({0, 0, 0, 0, 1}));
  const RatFunc post(rp({0, 1}), rp({-1, 0, 1}));  // v/(v^2-1)
  f.expect(pbw_expand(to_ratfunc(expand_monomial(compact(2, "112"))), dec) == bar(pre * v4, pre, pre), "E_{1^2 2}");
  f.expect(pbw_expand(to_ratfunc(expand_monomial(compact(2, "211"))), dec) == bar(pre, pre * v4, pre), "E_{2 1^2}");
  f.expect(pbw_expand(to_ratfunc(expand_monomial(compact(2, "121"))), dec) == bar(post, post, post), "E_{121}");
  return f.outcome("Pi_d, order, radical, four PBW expansions");
}

Outcome monomial_basis(VerifyLevel level) {
  Failures f;
  const int top = level == VerifyLevel::Full ? 5 : 3;
  std::size_t degrees = 0, sections = 0;
  for (int n : {2, 3}) {
    for (const auto& d : dim_vectors_up_to(n, top)) {
      ++degrees;
      std::ostringstream where;
      where << "n=" << n << " d=" << to_string(d);
      std::vector<std::pair<std::string, Section>> tried;
      tried.emplace_back("canonical", canonical_section(d));
      if (auto ds = distinguished_section(d)) tried.emplace_back("distinguished", std::move(*ds));
      tried.emplace_back("random", random_section(d, 0x5eed0000u + static_cast<unsigned>(degrees)));
      const std::size_t s = separated_part(d).size();
      for (const auto& [name, sec] : tried) {
        ++sections;
        const TransitionMatrix t = transition_matrix(d, sec);
        f.expect(t.block_upper_triangular(), name + " block triangular at " + where.str());
        f.expect(t.block_rank() == s, name + " block invertible at " + where.str());
        if (name == "distinguished") {
          const auto dc = t.diagonal_columns();
          for (std::size_t r = 0; r < t.rows.size(); ++r) {
            IntPoly expect = IntPoly::one();
            for (const auto& [i, e] : tight_form(t.words[r]).pairs) expect *= gauss_factorial(e);
            const LaurentPoly diag = LaurentPoly::from_q(expect).shifted(epsilon_word(t.words[r]));
            f.expect(t.entries[r][dc[r]] == diag, "distinguished diagonal at " + where.str());
          }
        }
      }
      const RadicalDecomposition rad = radical(d);
      const std::size_t total = enumerate_pi(d).size();
      f.expect(s + rad.reduced.size() == total, "dimension count at " + where.str());
      Matrix<RatFunc> images;
      for (const auto& [pi, w] : tried.front().second) {
        const auto x = pbw_expand(to_ratfunc(expand_monomial(w)), rad);
        std::vector<RatFunc> row;
        for (std::size_t c = 0; c < rad.separated_count; ++c) row.push_back(x.coeff(rad.cols[c]));
        images.push_back(std::move(row));
      }
      f.expect(images.empty() || rank(images) == s, "PBW images of monomials independent at " + where.str());
    }
  }
  return f.outcome(std::to_string(degrees) + " degrees, " + std::to_string(sections) + " sections");
}

Outcome monoid_relations() {
  Failures f;
  std::size_t checks = 0;
  for (int n : {2, 3, 4}) {
    std::vector<std::pair<Word, Word>> rel;
    if (n == 2) {
      rel.emplace_back(compact(2, "1211"), compact(2, "1121"));
      rel.emplace_back(compact(2, "2122"), compact(2, "2212"));
    } else {
      for (int i = 1; i <= n; ++i) {
        const int j = wrap(i + 1, n);
        rel.emplace_back(Word(n, {i, j, i}), Word(n, {i, i, j}));
        rel.emplace_back(Word(n, {j, i, j}), Word(n, {i, j, j}));
        for (int k = 1; k <= n; ++k) {
          if (k != i && k != j && k != wrap(i - 1, n)) rel.emplace_back(Word(n, {i, k}), Word(n, {k, i}));
        }
      }
    }
    std::vector<Word> wraps;
    for (int len = 0; len <= 3; ++len) {
      for (auto& w : words_of_length(n, len)) wraps.push_back(std::move(w));
    }
    for (const auto& [lhs, rhs] : rel) {
      for (const auto& u : wraps) {
        for (const auto& v : wraps) {
          ++checks;
          f.expect(wp(u + lhs + v) == wp(u + rhs + v), "relation " + to_string(lhs) + " = " + to_string(rhs) + " around " +
                                                           to_string(u) + " | " + to_string(v));
        }
      }
    }
  }
  return f.outcome(std::to_string(checks) + " wrapped relation instances");
}

}  // namespace

std::vector<Criterion> library_criteria(VerifyLevel level) {
  std::vector<Criterion> out;
  out.push_back({1, "sigma-goldens", 1.0, sigma_goldens});
  out.push_back({2, "fiber-census", 5.0, fiber_census});
  out.push_back({3, "distinguished-census", 1.0, distinguished_census});
  out.push_back({4, "order-coincidence", 120.0, [level] { return order_coincidence(level); }});
  out.push_back({5, "bracket-dominance", 120.0, [level] { return bracket_dominance(level); }});
  out.push_back({6, "distinguished-diagonal", 120.0, [level] { return distinguished_diagonal(level); }});
  out.push_back({7, "degree-21-reproduction", 5.0, degree_21_reproduction});
  out.push_back({8, "monomial-basis-rank", 180.0, [level] { return monomial_basis(level); }});
  out.push_back({10, "monoid-relations", 60.0, monoid_relations});
  return out;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = o.ok && r.seconds < c.limit_seconds;
  r.detail = o.detail;
  if (o.ok && !r.passed) r.detail += "; over the time limit";
  return r;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " (%.2f s / %.0f s) ", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + buf + r.detail;
}

}  // namespace qhall
