#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qhall/core.hpp"
#include "qhall/linalg.hpp"
#include "qhall/poly.hpp"

namespace qhall {

/// Finite sum of u_pi over one Pi_d. Zero coefficients are never stored.
template <class C>
struct HallVector {
  int n = 0;
  DimVector d;
  std::map<MultiPartition, C> entries;

  HallVector() = default;
  explicit HallVector(DimVector dim) : n(dim.n()), d(std::move(dim)) {}

  void add(const MultiPartition& pi, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = entries.try_emplace(pi, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
  C coeff(const MultiPartition& pi) const {
    auto it = entries.find(pi);
    return it == entries.end() ? C{} : it->second;
  }
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const HallVector&, const HallVector&) = default;
};

HallVector<RatFunc> to_ratfunc(const HallVector<LaurentPoly>& x);

/// sum over r < t of eps(e_{i_r}, e_{i_t})
int epsilon_word(const Word& w);

/// E_w = v^{eps(w)} u_{i_1} * ... * u_{i_m} in the u-basis.
HallVector<LaurentPoly> expand_monomial(const Word& w);

/// Pi_d sorted by orbit dimension descending, ties in enumerate_pi order.
/// Every mu < la comes after la.
std::vector<MultiPartition> linear_extension(const DimVector& d);
/// Separated members of linear_extension(d), same order.
std::vector<MultiPartition> separated_part(const DimVector& d);

/// A choice of word w_pi with wp(w_pi) = pi for each separated pi.
using Section = std::vector<std::pair<MultiPartition, Word>>;

Section canonical_section(const DimVector& d);
/// First distinguished word of each fiber, if every fiber has one.
std::optional<Section> distinguished_section(const DimVector& d);
Section random_section(const DimVector& d, std::uint64_t seed);

struct TransitionMatrix {
  std::vector<MultiPartition> rows;  // separated, linear-extension order
  std::vector<Word> words;
  std::vector<MultiPartition> cols;  // all of Pi_d, linear-extension order
  Matrix<LaurentPoly> entries;

  /// Column index of each row's own multipartition.
  std::vector<std::size_t> diagonal_columns() const;
  /// Square block on separated columns.
  Matrix<LaurentPoly> separated_block() const;
  bool block_upper_triangular() const;
  std::size_t block_rank() const;
};

TransitionMatrix transition_matrix(const DimVector& d, const Section& section);

enum class FormKind { Green, Plain };

/// <w|u_pi>' for pi in `cols` (Green), or <w|u_pi> (Plain).
std::vector<RatFunc> form_row(const Word& w, const std::vector<MultiPartition>& cols, FormKind kind = FormKind::Green);
std::vector<RatFunc> green_form_row(const Word& w, const DimVector& d);

/// Right radical of the form on degree d.
struct RadicalDecomposition {
  DimVector d;
  FormKind kind = FormKind::Green;
  /// Separated first, then the rest, each block in linear-extension order.
  std::vector<MultiPartition> cols;
  std::size_t separated_count = 0;
  std::vector<Word> row_words;
  std::size_t rank = 0;
  /// One vector per non-separated column pi: 1 at pi, 0 at the other
  /// non-separated columns.
  Matrix<RatFunc> reduced;

  HallVector<RatFunc> reduced_vector(std::size_t k) const;
};

RadicalDecomposition radical(const DimVector& d, FormKind kind = FormKind::Green);

/// Basis of the radical, each vector primitive over Z[v] with the sign
/// fixed by its lowest-orbit support element.
std::vector<HallVector<RatFunc>> radical_basis(const DimVector& d, FormKind kind = FormKind::Green);

/// The representative of x modulo the radical supported on separated pi.
HallVector<RatFunc> pbw_expand(const HallVector<RatFunc>& x);
HallVector<RatFunc> pbw_expand(const HallVector<RatFunc>& x, const RadicalDecomposition& rad);

/// u_i * x and x * u_i in the twisted Hall algebra.
HallVector<RatFunc> left_multiply(int i, const HallVector<RatFunc>& x);
HallVector<RatFunc> right_multiply(const HallVector<RatFunc>& x, int i);

/// Whether both one-sided products of each radical vector with each u_i
/// stay in the radical.
bool radical_ideal_check(const DimVector& d, FormKind kind = FormKind::Green);

}  // namespace qhall
