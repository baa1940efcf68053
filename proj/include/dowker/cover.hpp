#pragma once

#include "dowker/dissimilarity.hpp"
#include "dowker/matrix.hpp"

namespace dowker {

/// rho(l, l') = sup{ first(l', w) : second(l, w) < first(l', w) }, or 0 when
/// that set is empty. Square over the row set of the inputs.
using CoverMatrix = Matrix<Extended>;

/// Cover matrix of two dissimilarities over the same L x W.
/// Throws InputError on a shape mismatch.
CoverMatrix cover_matrix(const DowkerDissimilarity& first,
                         const DowkerDissimilarity& second);

/// Single-dissimilarity form, first = second = lambda.
CoverMatrix cover_matrix(const DowkerDissimilarity& lambda);

}  // namespace dowker
