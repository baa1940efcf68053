#include "dowker/tree.hpp"

#include <string>

#include "dowker/error.hpp"

namespace dowker {

ParentFunction::ParentFunction(std::vector<std::size_t> parents)
    : parent_(std::move(parents)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw InputError("parent function over an empty set");

  std::size_t roots = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (parent_[l] >= n)
      throw InputError("parent of " + std::to_string(l) + " is out of range");
    if (parent_[l] == l) {
      root_ = l;
      ++roots;
    }
  }
  if (roots != 1)
    throw InputError("parent function has " + std::to_string(roots) +
                     " fixed points, expected exactly one");

  // 0 = unvisited, 1 = on current path, 2 = known to reach the root.
  std::vector<unsigned char> state(n, 0);
  state[root_] = 2;
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < n; ++start) {
    path.clear();
    std::size_t l = start;
    while (state[l] == 0) {
      state[l] = 1;
      path.push_back(l);
      l = parent_[l];
    }
    if (state[l] == 1)
      throw InputError("parent function has a cycle through " +
                       std::to_string(l));
    for (std::size_t p : path) state[p] = 2;
  }
}

std::vector<std::vector<std::size_t>> ParentFunction::children() const {
  std::vector<std::vector<std::size_t>> out(parent_.size());
  for (std::size_t l = 0; l < parent_.size(); ++l)
    if (parent_[l] != l) out[parent_[l]].push_back(l);
  return out;
}

}  // namespace dowker
