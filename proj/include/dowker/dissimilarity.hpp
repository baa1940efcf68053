#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dowker/extended.hpp"
#include "dowker/matrix.hpp"

namespace dowker {

/// Location of a problem found while validating raw matrix input.
struct EntryIssue {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;
};

struct ValidationReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t infinity_count = 0;
  std::vector<EntryIssue> errors;            // ragged rows, NaN, negatives
  std::vector<EntryIssue> metric_violations; // only filled when declared metric

  bool valid() const { return errors.empty() && metric_violations.empty(); }
  /// First problem as "row R, col C: message", or empty when valid.
  std::string first_problem() const;
};

/// Checks raw rows (possibly ragged) for shape, NaN and negative entries.
/// With `declared_metric` the matrix must also be square, symmetric and have
/// a zero diagonal; violations are reported with their indices.
ValidationReport validate_dissimilarity(
    const std::vector<std::vector<double>>& rows, bool declared_metric);

/// A finite Dowker dissimilarity L x W -> [0, inf]. Immutable once built.
class DowkerDissimilarity {
 public:
  DowkerDissimilarity() = default;
  explicit DowkerDissimilarity(Matrix<Extended> entries);

  /// Validates and converts; throws InputError naming the first bad entry.
  static DowkerDissimilarity from_rows(
      const std::vector<std::vector<double>>& rows,
      bool declared_metric = false);

  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  Extended operator()(std::size_t l, std::size_t w) const { return m_(l, w); }
  std::span<const Extended> row(std::size_t l) const { return m_.row(l); }
  const Matrix<Extended>& matrix() const noexcept { return m_; }

  /// Largest finite entry, or 0 when there is none.
  double max_finite() const;

  std::optional<std::vector<std::string>> row_labels;
  std::optional<std::vector<std::string>> col_labels;

  friend bool operator==(const DowkerDissimilarity& a,
                         const DowkerDissimilarity& b) {
    return a.m_ == b.m_;
  }

 private:
  Matrix<Extended> m_;
};

}  // namespace dowker
