#include "dowker/cover.hpp"

#include "dowker/error.hpp"

namespace dowker {

CoverMatrix cover_matrix(const DowkerDissimilarity& first,
                         const DowkerDissimilarity& second) {
  if (first.rows() != second.rows() || first.cols() != second.cols())
    throw InputError("cover matrix: dissimilarities differ in shape");

  const std::size_t n = first.rows();
  const std::size_t m = first.cols();
  CoverMatrix rho(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const auto lower = second.row(l);
    for (std::size_t other = 0; other < n; ++other) {
      const auto upper = first.row(other);
      Extended best = Extended::zero();
      for (std::size_t w = 0; w < m; ++w)
        if (lower[w] < upper[w] && best < upper[w]) best = upper[w];
      rho(l, other) = best;
    }
  }
  return rho;
}

CoverMatrix cover_matrix(const DowkerDissimilarity& lambda) {
  return cover_matrix(lambda, lambda);
}

}  // namespace dowker
