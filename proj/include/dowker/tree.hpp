#pragma once

#include <cstddef>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker {

/// A map l -> parent(l) over L = {0..n-1} whose only fixed point is the root
/// and whose non-trivial edges form a spanning tree.
class ParentFunction {
 public:
  /// Throws InputError unless `parents` has exactly one fixed point and
  /// every other index reaches it without revisiting a node.
  explicit ParentFunction(std::vector<std::size_t> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t root() const noexcept { return root_; }
  std::size_t operator[](std::size_t l) const { return parent_[l]; }
  const std::vector<std::size_t>& parents() const noexcept { return parent_; }

  /// children()[l] lists every l' != l with parent(l') = l, in index order.
  std::vector<std::vector<std::size_t>> children() const;

  friend bool operator==(const ParentFunction&, const ParentFunction&) = default;

 private:
  std::vector<std::size_t> parent_;
  std::size_t root_ = 0;
};

/// Per-point removal times R: L -> [0, inf].
struct RestrictionTimes {
  std::vector<Extended> times;

  std::size_t size() const noexcept { return times.size(); }
  Extended operator[](std::size_t l) const { return times[l]; }

  friend bool operator==(const RestrictionTimes&,
                         const RestrictionTimes&) = default;
};

}  // namespace dowker
