#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dowker/cover.hpp"
#include "dowker/dissimilarity.hpp"
#include "dowker/translation.hpp"

namespace dowker {

/// Greedy farthest-point ordering over a cover matrix.
struct FarthestPointOrder {
  std::vector<std::size_t> order;        // insertion order, initial point first
  std::vector<Extended> insertion_time;  // indexed by point; inf for the initial point
  /// (child, parent) pairs of the hierarchical tree; filled by truncation_tree.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Starting from `initial`, repeatedly inserts the point maximizing
/// min over inserted p of rho(l, p); ties go to the lowest index.
/// Throws InputError on an empty matrix or an out-of-range initial point.
FarthestPointOrder farthest_point_sampling(const CoverMatrix& rho,
                                           std::size_t initial);

/// Tree edges (l, psi(l)) for each non-initial l in insertion order: psi(l) is
/// the earliest predecessor with rho(l, psi) == T(l); otherwise the earliest
/// predecessor minimizing rho(l, .) among positive entries; otherwise the
/// initial point.
std::vector<std::pair<std::size_t, std::size_t>> truncation_tree(
    const CoverMatrix& rho, const FarthestPointOrder& fps);

/// Truncated dissimilarity Gamma with lambda <= Gamma <= alpha(lambda).
///
/// Gamma starts at alpha(lambda). Nodes of the farthest-point tree are then
/// finalized children-first (reverse insertion order, initial point last):
/// each row becomes max(lambda(l, .), min(Gamma(l, .), Gamma(c, .) for every
/// tree child c)), so a point's row is pulled down to what its subtree sees.
DowkerDissimilarity truncate(const DowkerDissimilarity& lambda,
                             const TranslationFunction& alpha,
                             std::size_t initial = 0);

/// The entrywise image alpha(lambda).
DowkerDissimilarity apply(const TranslationFunction& alpha,
                          const DowkerDissimilarity& lambda);

}  // namespace dowker
