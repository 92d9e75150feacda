#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhall/core.hpp"
#include "qhall/poly.hpp"

namespace qhall {

bool is_separated(const MultiPartition& pi);

/// Generic extension S_i * M(pi), in dual coordinates.
MultiPartition sigma_plus(int i, const MultiPartition& pi);
/// Whether pi lies in the domain of sigma_minus(i, .).
bool admits_sigma_minus(int i, const MultiPartition& pi);
/// Right inverse of sigma_plus(i, .) on separated multipartitions.
MultiPartition sigma_minus(int i, const MultiPartition& pi);

/// Multipartition of S_{i_1} * ... * S_{i_m}.
MultiPartition wp(const Word& w);
/// Generic extension of a sequence of simples given by their vertices.
MultiPartition star_simples(int n, const std::vector<int>& vertices);

/// wp(canonical_word(pi)) == pi; descends through the smallest admissible vertex.
Word canonical_word(const MultiPartition& pi);

constexpr std::int64_t kDefaultFiberCap = 1000000;
/// Cap from QHALL_FIBER_CAP if set and valid, else the default.
std::int64_t fiber_cap_from_env();

/// Number of words in the fiber of pi, without listing them.
Integer fiber_size(const MultiPartition& pi);
/// All words w with wp(w) == pi, sorted. Throws FiberCapExceeded above cap.
std::vector<Word> fiber(const MultiPartition& pi, std::int64_t cap = fiber_cap_from_env());

struct TightForm {
  /// (vertex, exponent) runs.
  std::vector<std::pair<int, int>> pairs;
  Word expand(int n) const;
  friend bool operator==(const TightForm&, const TightForm&) = default;
};

TightForm tight_form(const Word& w);
bool is_distinguished(const Word& w);

}  // namespace qhall
