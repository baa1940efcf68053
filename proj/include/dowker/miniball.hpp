#pragma once

#include <span>
#include <vector>

namespace dowker {

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

/// Smallest enclosing ball of a nonempty point set in R^n (Welzl's
/// move-to-front recursion over a fixed-seed shuffle). Points are accepted as
/// inside when within radius * (1 + 1e-9) + 1e-12 of the center.
/// Throws InputError on empty input or mixed dimensions.
Ball miniball(std::span<const std::vector<double>> points);

}  // namespace dowker
