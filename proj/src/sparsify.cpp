#include "dowker/sparsify.hpp"

#include <algorithm>
#include <numeric>

#include "dowker/error.hpp"

namespace dowker {

ParentFunction parent_function(const CoverMatrix& rho) {
  const std::size_t n = rho.rows();
  if (n == 0) throw InputError("parent function over an empty set");
  if (rho.cols() != n) throw InputError("cover matrix is not square");
  if (n == 1) return ParentFunction({0});

  std::vector<Extended> minimum(n);
  std::vector<std::size_t> draft(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t best = l == 0 ? 1 : 0;
    for (std::size_t other = 0; other < n; ++other)
      if (other != l && rho(l, other) < rho(l, best)) best = other;
    minimum[l] = rho(l, best);
    draft[l] = best;
  }

  std::vector<std::size_t> sorted(n);
  std::iota(sorted.begin(), sorted.end(), std::size_t{0});
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](std::size_t a, std::size_t b) {
                     return minimum[b] < minimum[a];
                   });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[sorted[i]] = i;

  const std::size_t root = sorted.front();
  std::vector<std::size_t> parent(n, root);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t l = sorted[i];
    if (rank[draft[l]] < i) {
      parent[l] = draft[l];
      continue;
    }
    std::size_t best = n;
    for (std::size_t j = 0; j < i; ++j) {
      const Extended r = rho(l, sorted[j]);
      if (r > Extended::zero() && (best == n || r < rho(l, best)))
        best = sorted[j];
    }
    if (best != n) parent[l] = best;
  }
  return ParentFunction(std::move(parent));
}

RestrictionTimes restriction_times(const ParentFunction& phi,
                                   const CoverMatrix& rho) {
  const std::size_t n = phi.size();
  if (rho.rows() != n || rho.cols() != n)
    throw InputError("restriction times: cover matrix and tree differ in size");

  std::vector<Extended> own(n, Extended::infinity());
  for (std::size_t l = 0; l < n; ++l)
    if (phi[l] != l) own[l] = rho(l, phi[l]);

  // Breadth-first from the root, then accumulate children-first.
  const auto children = phi.children();
  std::vector<std::size_t> order{phi.root()};
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t c : children[order[i]]) order.push_back(c);

  RestrictionTimes r{own};
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (phi[*it] != *it)
      r.times[phi[*it]] = std::max(r.times[phi[*it]], r.times[*it]);
  return r;
}

}  // namespace dowker
