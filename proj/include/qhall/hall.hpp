#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qhall/core.hpp"
#include "qhall/poly.hpp"

namespace qhall {

/// One term of a Hall-number expansion: coefficient `coeff` at `target`.
struct Step {
  MultiPartition target;
  IntPoly coeff;
  friend bool operator==(const Step&, const Step&) = default;
};

using HallSum = std::map<MultiPartition, IntPoly>;

/// Submodules N of M(la) with M(la)/N = S_i, grouped by isoclass:
/// (N, F^{la}_{S_i, N}).
std::vector<Step> top_step(const MultiPartition& la, int i);
/// Submodules S_i of M(la) by quotient isoclass: (N, F^{la}_{N, S_i}).
std::vector<Step> socle_step(const MultiPartition& la, int i);
/// Left multiplication by [S_i]: (la, F^{la}_{S_i, mu}).
std::vector<Step> top_extensions(const MultiPartition& mu, int i);
/// Right multiplication by [S_i]: (la, F^{la}_{mu, S_i}).
std::vector<Step> socle_extensions(const MultiPartition& mu, int i);

/// (mu, F^{la}_{a S_i, mu}) for the semisimple top quotient a S_i.
std::vector<Step> isotypic_step(const MultiPartition& la, int i, int a);

/// <w|la>: composition series of M(la) of type w.
IntPoly bracket(const Word& w, const MultiPartition& la);
/// <w|la> for every la with nonzero value.
HallSum bracket_all(const Word& w);

/// Reduced filtrations of M(la) of type w, following the tight form.
IntPoly reduced_filtration_count(const Word& w, const MultiPartition& la);

}  // namespace qhall
