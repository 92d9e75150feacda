#include "qhall/basis.hpp"

#include <algorithm>
#include <random>

#include "qhall/errors.hpp"
#include "qhall/hall.hpp"
#include "qhall/module_theory.hpp"
#include "qhall/monoid.hpp"

namespace qhall {

HallVector<RatFunc> to_ratfunc(const HallVector<LaurentPoly>& x) {
  HallVector<RatFunc> out(x.d);
  for (const auto& [pi, c] : x.entries) out.add(pi, RatFunc(c));
  return out;
}

int epsilon_word(const Word& w) {
  const int n = w.n();
  int s = 0;
  for (std::size_t r = 0; r < w.length(); ++r) {
    for (std::size_t t = r + 1; t < w.length(); ++t) {
      if (w[r] == w[t]) ++s;
      if (w[t] == wrap(w[r] + 1, n)) --s;
    }
  }
  return s;
}

HallVector<LaurentPoly> expand_monomial(const Word& w) {
  HallVector<LaurentPoly> out(content(w));
  const int eps = epsilon_word(w);
  for (const auto& [la, c] : bracket_all(w)) out.add(la, LaurentPoly::from_q(c).shifted(eps));
  return out;
}

std::vector<MultiPartition> linear_extension(const DimVector& d) {
  std::vector<MultiPartition> all = enumerate_pi(d);
  std::vector<std::pair<int, std::size_t>> keys;
  for (std::size_t k = 0; k < all.size(); ++k) keys.emplace_back(-orbit_dim(all[k]), k);
  std::sort(keys.begin(), keys.end());
  std::vector<MultiPartition> out;
  out.reserve(all.size());
  for (const auto& [o, k] : keys) out.push_back(all[k]);
  return out;
}

std::vector<MultiPartition> separated_part(const DimVector& d) {
  std::vector<MultiPartition> out;
  for (auto& pi : linear_extension(d)) {
    if (is_separated(pi)) out.push_back(std::move(pi));
  }
  return out;
}

Section canonical_section(const DimVector& d) {
  Section s;
  for (auto& pi : separated_part(d)) {
    Word w = canonical_word(pi);
    s.emplace_back(std::move(pi), std::move(w));
  }
  return s;
}

std::optional<Section> distinguished_section(const DimVector& d) {
  Section s;
  for (auto& pi : separated_part(d)) {
    std::optional<Word> pick;
    for (auto& w : fiber(pi)) {
      if (is_distinguished(w)) {
        pick = std::move(w);
        break;
      }
    }
    if (!pick) return std::nullopt;
    s.emplace_back(std::move(pi), std::move(*pick));
  }
  return s;
}

Section random_section(const DimVector& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Section s;
  for (auto& pi : separated_part(d)) {
    std::vector<Word> words = fiber(pi);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    s.emplace_back(std::move(pi), words[pick(rng)]);
  }
  return s;
}

std::vector<std::size_t> TransitionMatrix::diagonal_columns() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) {
    auto it = std::find(cols.begin(), cols.end(), r);
    check_internal(it != cols.end(), "row multipartition missing from columns");
    out.push_back(static_cast<std::size_t>(it - cols.begin()));
  }
  return out;
}

Matrix<LaurentPoly> TransitionMatrix::separated_block() const {
  const auto dc = diagonal_columns();
  Matrix<LaurentPoly> out;
  for (const auto& row : entries) {
    std::vector<LaurentPoly> r;
    for (std::size_t c : dc) r.push_back(row[c]);
    out.push_back(std::move(r));
  }
  return out;
}

bool TransitionMatrix::block_upper_triangular() const {
  const auto block = separated_block();
  for (std::size_t r = 0; r < block.size(); ++r) {
    if (block[r][r].is_zero()) return false;
    for (std::size_t c = 0; c < r; ++c) {
      if (!block[r][c].is_zero()) return false;
    }
  }
  return true;
}

std::size_t TransitionMatrix::block_rank() const {
  Matrix<RatFunc> m;
  for (const auto& row : separated_block()) {
    std::vector<RatFunc> r;
    for (const auto& e : row) r.emplace_back(e);
    m.push_back(std::move(r));
  }
  return rank(m);
}

TransitionMatrix transition_matrix(const DimVector& d, const Section& section) {
  TransitionMatrix t;
  t.cols = linear_extension(d);
  const auto seps = separated_part(d);
  if (section.size() != seps.size()) throw DomainError("section does not cover every separated multipartition");
  for (const auto& pi : seps) {
    auto it = std::find_if(section.begin(), section.end(), [&](const auto& kv) { return kv.first == pi; });
    if (it == section.end()) throw DomainError("section has no word for " + to_string(pi));
    if (wp(it->second) != pi) throw DomainError("section word " + to_string(it->second) + " does not map to " + to_string(pi));
    t.rows.push_back(pi);
    t.words.push_back(it->second);
    const auto e = expand_monomial(it->second);
    std::vector<LaurentPoly> row;
    for (const auto& la : t.cols) row.push_back(e.coeff(la));
    t.entries.push_back(std::move(row));
  }
  return t;
}

std::vector<RatFunc> form_row(const Word& w, const std::vector<MultiPartition>& cols, FormKind kind) {
  const HallSum b = bracket_all(w);
  const RatFunc twist = RatFunc::v_power(epsilon_word(w));
  std::vector<RatFunc> out;
  out.reserve(cols.size());
  for (const auto& pi : cols) {
    auto it = b.find(pi);
    if (it == b.end()) {
      out.emplace_back();
      continue;
    }
    RatFunc val = twist * RatFunc(it->second.substitute_power(2));
    if (kind == FormKind::Green) val = val / RatFunc(aut_poly(pi).substitute_power(2));
    out.push_back(std::move(val));
  }
  return out;
}

std::vector<RatFunc> green_form_row(const Word& w, const DimVector& d) {
  if (content(w) != d) throw DomainError("green_form_row: word content differs from d");
  return form_row(w, linear_extension(d), FormKind::Green);
}

HallVector<RatFunc> RadicalDecomposition::reduced_vector(std::size_t k) const {
  HallVector<RatFunc> out(d);
  for (std::size_t c = 0; c < cols.size(); ++c) out.add(cols[c], reduced[k][c]);
  return out;
}

RadicalDecomposition radical(const DimVector& d, FormKind kind) {
  RadicalDecomposition rad;
  rad.d = d;
  rad.kind = kind;
  for (auto& pi : linear_extension(d)) {
    if (is_separated(pi)) {
      rad.cols.insert(rad.cols.begin() + static_cast<std::ptrdiff_t>(rad.separated_count++), std::move(pi));
    } else {
      rad.cols.push_back(std::move(pi));
    }
  }
  Matrix<RatFunc> rows;
  for (const auto& [pi, w] : canonical_section(d)) {
    rad.row_words.push_back(w);
    rows.push_back(form_row(w, rad.cols, kind));
  }
  rad.rank = rank(rows);
  if (rad.rank < rad.separated_count) {
    for (const auto& w : words_with_content(d)) {
      if (std::find(rad.row_words.begin(), rad.row_words.end(), w) != rad.row_words.end()) continue;
      auto row = form_row(w, rad.cols, kind);
      rows.push_back(row);
      std::size_t r = rank(rows);
      if (r == rad.rank) {
        rows.pop_back();
        continue;
      }
      rad.row_words.push_back(w);
      rad.rank = r;
      if (r == rad.separated_count) break;
    }
  }
  check_internal(rad.rank == rad.separated_count, "form rank differs from the number of separated multipartitions");
  Nullspace ns = nullspace(rows, rad.cols.size());
  for (std::size_t k = 0; k < ns.pivots.size(); ++k) {
    check_internal(ns.pivots[k] == k, "radical pivots are not the separated columns");
  }
  rad.reduced = std::move(ns.basis);
  return rad;
}

std::vector<HallVector<RatFunc>> radical_basis(const DimVector& d, FormKind kind) {
  const RadicalDecomposition rad = radical(d, kind);
  std::vector<std::size_t> order(rad.cols.size());
  for (std::size_t c = 0; c < rad.cols.size(); ++c) order[c] = c;
  // rank of each column in linear-extension order; the last one present is lowest
  const auto lin = linear_extension(d);
  std::vector<std::size_t> lin_pos(rad.cols.size());
  for (std::size_t c = 0; c < rad.cols.size(); ++c) {
    lin_pos[c] = static_cast<std::size_t>(std::find(lin.begin(), lin.end(), rad.cols[c]) - lin.begin());
  }
  std::vector<HallVector<RatFunc>> out;
  for (const auto& y : rad.reduced) {
    std::vector<RatFunc> line = normalize_line(y);
    std::size_t low = rad.cols.size();
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c].is_zero()) continue;
      if (low == rad.cols.size() || lin_pos[c] > lin_pos[low]) low = c;
    }
    check_internal(low < rad.cols.size(), "zero radical vector");
    if (line[low].num().leading() > 0) {
      for (auto& e : line) e = -e;
    }
    HallVector<RatFunc> v(d);
    for (std::size_t c = 0; c < line.size(); ++c) v.add(rad.cols[c], line[c]);
    out.push_back(std::move(v));
  }
  return out;
}

HallVector<RatFunc> pbw_expand(const HallVector<RatFunc>& x, const RadicalDecomposition& rad) {
  if (x.d != rad.d) throw DomainError("pbw_expand: degree mismatch");
  HallVector<RatFunc> out = x;
  for (std::size_t k = 0; k < rad.reduced.size(); ++k) {
    const MultiPartition& pi = rad.cols[rad.separated_count + k];
    const RatFunc c = x.coeff(pi);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < rad.cols.size(); ++j) {
      if (!rad.reduced[k][j].is_zero()) out.add(rad.cols[j], -(c * rad.reduced[k][j]));
    }
  }
  for (const auto& [pi, c] : out.entries) check_internal(is_separated(pi), "pbw_expand left a non-separated term");
  return out;
}

HallVector<RatFunc> pbw_expand(const HallVector<RatFunc>& x) { return pbw_expand(x, radical(x.d)); }

HallVector<RatFunc> left_multiply(int i, const HallVector<RatFunc>& x) {
  const DimVector e = DimVector::unit(x.n, i);
  HallVector<RatFunc> out(e + x.d);
  const RatFunc twist = RatFunc::v_power(euler(e, x.d));
  for (const auto& [mu, c] : x.entries) {
    for (const auto& s : top_extensions(mu, i)) out.add(s.target, twist * c * RatFunc(s.coeff.substitute_power(2)));
  }
  return out;
}

HallVector<RatFunc> right_multiply(const HallVector<RatFunc>& x, int i) {
  const DimVector e = DimVector::unit(x.n, i);
  HallVector<RatFunc> out(x.d + e);
  const RatFunc twist = RatFunc::v_power(euler(x.d, e));
  for (const auto& [mu, c] : x.entries) {
    for (const auto& s : socle_extensions(mu, i)) out.add(s.target, twist * c * RatFunc(s.coeff.substitute_power(2)));
  }
  return out;
}

namespace {

bool in_radical(const HallVector<RatFunc>& z, const RadicalDecomposition& rad) {
  for (const auto& w : rad.row_words) {
    const auto row = form_row(w, rad.cols, rad.kind);
    RatFunc acc;
    for (std::size_t c = 0; c < rad.cols.size(); ++c) {
      if (!row[c].is_zero()) acc += row[c] * z.coeff(rad.cols[c]);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool radical_ideal_check(const DimVector& d, FormKind kind) {
  const RadicalDecomposition rad = radical(d, kind);
  if (rad.reduced.empty()) return true;
  for (int i = 1; i <= d.n(); ++i) {
    const RadicalDecomposition up = radical(d + DimVector::unit(d.n(), i), kind);
    for (std::size_t k = 0; k < rad.reduced.size(); ++k) {
      const auto y = rad.reduced_vector(k);
      if (!in_radical(left_multiply(i, y), up) || !in_radical(right_multiply(y, i), up)) return false;
    }
  }
  return true;
}

}  // namespace qhall
