#pragma once

#include <cstddef>
#include <vector>

#include "dowker/dissimilarity.hpp"
#include "dowker/ingest.hpp"
#include "dowker/simplex.hpp"
#include "dowker/translation.hpp"
#include "dowker/tree.hpp"

namespace dowker {

inline constexpr std::size_t kDefaultSimplexLimit = 10'000'000;

/// Points whose restriction time is not strictly beyond every child's.
struct SlopePointSet {
  std::vector<bool> member;

  bool contains(std::size_t l) const { return member[l]; }
  std::size_t count() const;
};

/// l is dropped iff R(l) < inf and max{R(c) : c child of l} < R(l), where an
/// empty maximum counts as 0.
SlopePointSet slope_points(const ParentFunction& phi, const RestrictionTimes& r);

/// Maximal faces of the restricted nerve. For every (l, w) with
/// gamma(l, w) <= R(l) the face holds each l' with R(l) <= R(l'),
/// gamma(l', w) <= R(l) and gamma(l', w) < inf, where points outside the
/// slope set additionally need gamma(l', w) < R(l'). Exact duplicates and
/// faces contained in another face are dropped; the result is sorted.
std::vector<Simplex> maximal_faces(const DowkerDissimilarity& gamma,
                                   const RestrictionTimes& r,
                                   const SlopePointSet& slope);

/// min over w of max over l in sigma of lambda(l, w).
Extended filtration_value(const DowkerDissimilarity& lambda,
                          const Simplex& sigma);

/// Every subset of cardinality <= max_cardinality of every face, deduplicated.
/// Throws SizeLimitError when more than `limit` distinct simplices arise.
std::vector<Simplex> skeleton(const std::vector<Simplex>& faces,
                              std::size_t max_cardinality, std::size_t limit);

/// The (d+1)-skeleton of the sparse nerve with values taken from lambda.
FilteredComplex sparse_nerve(const DowkerDissimilarity& lambda,
                             const DowkerDissimilarity& gamma,
                             const RestrictionTimes& r,
                             const ParentFunction& phi, std::size_t dim,
                             std::size_t limit = kDefaultSimplexLimit);

/// sum_{k=1}^{d+2} C(n, k), the size of the full (d+1)-skeleton on n
/// vertices. Exact while the value fits in 64 bits.
long double skeleton_size(std::size_t n, std::size_t dim);

/// Sparse complex for the ambient Cech filtration of a cloud, still carrying
/// the intrinsic (witness min-max) values: the intrinsic pipeline gives R',
/// and faces are built from its truncation with R = 2 R'.
FilteredComplex ambient_support_nerve(const PointCloud& cloud,
                                      const TranslationFunction& alpha,
                                      std::size_t dim, std::size_t initial = 0,
                                      std::size_t limit = kDefaultSimplexLimit);

/// Replaces every value by the miniball radius of the simplex's points and
/// re-sorts. A radius within the miniball tolerance of its largest facet's
/// value takes that value.
FilteredComplex with_miniball_values(FilteredComplex complex,
                                     const PointCloud& cloud);

/// Ambient Cech approximation: ambient_support_nerve revalued by miniball radii.
FilteredComplex ambient_cech_nerve(const PointCloud& cloud,
                                   const TranslationFunction& alpha,
                                   std::size_t dim, std::size_t initial = 0,
                                   std::size_t limit = kDefaultSimplexLimit);

}  // namespace dowker
