#pragma once

#include <cstddef>
#include <vector>

#include "qhall/poly.hpp"

namespace qhall {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
  Matrix<IntPoly> rows;               // nonzero rows only
  std::vector<std::size_t> pivots;    // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

/// Bareiss elimination over Z[v]. Every division is exact; a failure
/// raises InternalError.
Echelon bareiss_echelon(Matrix<IntPoly> m);

/// Scales a row of rational functions to a primitive row over Z[v]
/// spanning the same line.
std::vector<IntPoly> primitive_row(const std::vector<RatFunc>& row);
/// Same line scaled so all entries are polynomials with content 1 and the
/// entries share no common factor.
std::vector<RatFunc> normalize_line(const std::vector<RatFunc>& vec);

std::size_t rank(const Matrix<RatFunc>& m);
std::size_t rank(const Matrix<IntPoly>& m);

/// Right nullspace basis. For each non-pivot column f the vector has a 1
/// at f and 0 at the other non-pivot columns.
struct Nullspace {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_columns;
  Matrix<RatFunc> basis;  // one vector per free column
};
Nullspace nullspace(const Matrix<RatFunc>& m, std::size_t columns);

}  // namespace qhall
