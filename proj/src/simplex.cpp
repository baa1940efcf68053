#include "dowker/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace dowker {

void sort_filtration(FilteredComplex& complex) {
  const std::size_t n = complex.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (complex.values[a] != complex.values[b])
      return complex.values[a] < complex.values[b];
    const auto& sa = complex.simplices[a];
    const auto& sb = complex.simplices[b];
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  std::vector<Simplex> simplices(n);
  std::vector<Extended> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    simplices[i] = std::move(complex.simplices[perm[i]]);
    values[i] = complex.values[perm[i]];
  }
  complex.simplices = std::move(simplices);
  complex.values = std::move(values);
}

bool is_closed_and_monotone(const FilteredComplex& complex) {
  std::unordered_map<Simplex, Extended, SimplexHash> index;
  index.reserve(complex.size());
  for (std::size_t i = 0; i < complex.size(); ++i)
    index.emplace(complex.simplices[i], complex.values[i]);
  Simplex facet;
  for (std::size_t i = 0; i < complex.size(); ++i) {
    const Simplex& s = complex.simplices[i];
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      facet.clear();
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip) facet.push_back(s[k]);
      auto it = index.find(facet);
      if (it == index.end() || complex.values[i] < it->second) return false;
    }
  }
  return true;
}

}  // namespace dowker
