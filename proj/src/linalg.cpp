#include "qhall/linalg.hpp"

#include <utility>

#include "qhall/errors.hpp"

namespace qhall {

Echelon bareiss_echelon(Matrix<IntPoly> m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  IntPoly prev = IntPoly::one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]).exact_div(prev);
      }
      m[i][c] = IntPoly{};
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<IntPoly> primitive_row(const std::vector<RatFunc>& row) {
  RatPoly l = RatPoly::one();
  for (const auto& f : row) {
    if (f.is_zero()) continue;
    l = (l * f.den()).exact_div(gcd(l, f.den()));
  }
  RatPoly g;
  std::vector<RatPoly> scaled;
  scaled.reserve(row.size());
  for (const auto& f : row) {
    scaled.push_back(f.is_zero() ? RatPoly{} : f.num() * l.exact_div(f.den()));
    g = gcd(g, scaled.back());
  }
  if (g.is_zero()) return std::vector<IntPoly>(row.size());
  // collect everything over one integer denominator, then strip the content
  Integer den = 1;
  for (auto& p : scaled) {
    p = p.exact_div(g);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer cont = 0;
  std::vector<IntPoly> out;
  out.reserve(row.size());
  for (const auto& p : scaled) {
    std::vector<Integer> v;
    for (const auto& c : p.coeffs()) {
      Rational x = c * Rational(den);
      v.push_back(x.get_num());
      mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v.back().get_mpz_t());
    }
    out.emplace_back(std::move(v));
  }
  for (auto& p : out) {
    std::vector<Integer> v;
    for (const auto& c : p.coeffs()) v.push_back(c / cont);
    p = IntPoly(std::move(v));
  }
  return out;
}

std::vector<RatFunc> normalize_line(const std::vector<RatFunc>& vec) {
  std::vector<RatFunc> out;
  for (const auto& p : primitive_row(vec)) out.emplace_back(p);
  return out;
}

std::size_t rank(const Matrix<IntPoly>& m) { return bareiss_echelon(m).rank(); }

std::size_t rank(const Matrix<RatFunc>& m) {
  Matrix<IntPoly> z;
  z.reserve(m.size());
  for (const auto& row : m) z.push_back(primitive_row(row));
  return rank(z);
}

Nullspace nullspace(const Matrix<RatFunc>& m, std::size_t columns) {
  Matrix<IntPoly> z;
  for (const auto& row : m) {
    check_internal(row.size() == columns, "nullspace: ragged matrix");
    z.push_back(primitive_row(row));
  }
  Echelon ech = bareiss_echelon(std::move(z));
  Nullspace out;
  out.pivots = ech.pivots;
  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < columns; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  Matrix<RatFunc> rows;
  for (const auto& row : ech.rows) {
    std::vector<RatFunc> r;
    r.reserve(columns);
    for (const auto& e : row) r.emplace_back(e);
    rows.push_back(std::move(r));
  }
  for (std::size_t f : out.free_columns) {
    std::vector<RatFunc> y(columns);
    y[f] = RatFunc(1);
    for (std::size_t k = rows.size(); k-- > 0;) {
      const std::size_t p = ech.pivots[k];
      RatFunc acc;
      for (std::size_t j = p + 1; j < columns; ++j) {
        if (!y[j].is_zero() && !rows[k][j].is_zero()) acc += rows[k][j] * y[j];
      }
      y[p] = -(acc / rows[k][p]);
    }
    out.basis.push_back(std::move(y));
  }
  return out;
}

}  // namespace qhall
