#pragma once

#include "dowker/cover.hpp"
#include "dowker/tree.hpp"

namespace dowker {

/// Greedy parent tree from a cover matrix.
///
/// m(l) is the minimum of rho(l, l') over l' != l, attained first at
/// phi*(l). Points are stably sorted by non-increasing m; the first becomes
/// the root. Every later point takes phi*(l) when that comes earlier in the
/// sorted order, otherwise the earliest-sorted predecessor minimizing the
/// positive entries rho(l, .), otherwise the root.
ParentFunction parent_function(const CoverMatrix& rho);

/// Minimal restriction times: R'(l) = rho(l, phi(l)) (inf at the root), and
/// R(l) is the maximum of R' over the subtree rooted at l.
RestrictionTimes restriction_times(const ParentFunction& phi,
                                   const CoverMatrix& rho);

}  // namespace dowker
