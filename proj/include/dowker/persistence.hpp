#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dowker/extended.hpp"
#include "dowker/simplex.hpp"
#include "dowker/translation.hpp"

namespace dowker {

struct DiagramPoint {
  std::size_t dim = 0;
  Extended birth;
  Extended death;

  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Points of positive persistence, sorted by (dim, birth, death).
struct PersistenceDiagram {
  std::vector<DiagramPoint> points;
  std::size_t zero_persistence_pairs = 0;  // dropped pairs with birth == death

  std::vector<DiagramPoint> in_dimension(std::size_t dim) const;
  friend bool operator==(const PersistenceDiagram& a,
                         const PersistenceDiagram& b) {
    return a.points == b.points;
  }
};

/// Z/2 persistent homology in dimensions 0..max_dim by column reduction with
/// clearing, processing dimensions from the top down. Simplices with more
/// than max_dim + 2 vertices are ignored.
/// Throws InputError when a facet is missing, comes later in the order, or
/// has a larger value.
PersistenceDiagram compute_persistence(const FilteredComplex& complex,
                                       std::size_t max_dim);

/// Graph of alpha over [0, t_max]. A diagram point above it (death > alpha(birth))
/// is guaranteed a partner in the diagram of the exact filtration.
struct InterleavingLine {
  TranslationFunction alpha;
  std::vector<std::pair<double, double>> samples;

  bool guaranteed(Extended birth, Extended death) const {
    return alpha(birth) < death;
  }
};

InterleavingLine interleaving_line(const TranslationFunction& alpha,
                                   double t_max, std::size_t samples = 256);

struct DimensionMatch {
  std::size_t dim = 0;
  bool passed = false;
  /// (index into exact points of this dim, index into approx points of this dim).
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<std::size_t> unmatched_exact;
  std::vector<std::size_t> unmatched_approx;
};

struct InterleavingReport {
  bool passed = false;                      // alpha-box matching, every dimension
  std::vector<DimensionMatch> dimensions;
  std::optional<bool> multiplicative_passed;  // set for multiplicative alpha
  std::vector<DimensionMatch> multiplicative;
};

/// Looks for a partial matching between the exact diagram and an
/// approximation built from a sandwich approx_t <= exact_t <= approx_alpha(t).
/// Exact (b, d) may pair with approx (b', d') iff b <= b' <= alpha(b) and
/// d <= d' <= alpha(d); a point on either side may stay unmatched only when
/// death <= alpha(birth). For multiplicative alpha = c t the symmetric check
/// is reported too: coordinates within a factor c of each other and unmatched
/// points with d <= c b.
InterleavingReport diagram_interleaving_check(const PersistenceDiagram& exact,
                                              const PersistenceDiagram& approx,
                                              const TranslationFunction& alpha);

}  // namespace dowker
