#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker {

/// Vertex set stored in increasing order.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : s) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Simplices with filtration values, sorted by (value, cardinality, vertices).
struct FilteredComplex {
  std::vector<Simplex> simplices;
  std::vector<Extended> values;
  std::size_t max_cardinality = 0;  // d + 2 for a (d+1)-skeleton

  std::size_t size() const noexcept { return simplices.size(); }
};

/// Sorts simplices and values together into filtration order.
void sort_filtration(FilteredComplex& complex);

/// True when every facet of every stored simplex is stored and no facet has a
/// larger value. Does not check order.
bool is_closed_and_monotone(const FilteredComplex& complex);

}  // namespace dowker
