#include "dowker/dissimilarity.hpp"

#include <cmath>

#include "dowker/error.hpp"

namespace dowker {

std::string ValidationReport::first_problem() const {
  const EntryIssue* issue = nullptr;
  if (!errors.empty())
    issue = &errors.front();
  else if (!metric_violations.empty())
    issue = &metric_violations.front();
  if (issue == nullptr) return {};
  return "row " + std::to_string(issue->row) + ", col " +
         std::to_string(issue->col) + ": " + issue->message;
}

ValidationReport validate_dissimilarity(
    const std::vector<std::vector<double>>& rows, bool declared_metric) {
  ValidationReport report;
  report.rows = rows.size();
  report.cols = rows.empty() ? 0 : rows.front().size();

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != report.cols) {
      report.errors.push_back(
          {r, rows[r].size(),
           "row has " + std::to_string(rows[r].size()) + " entries, expected " +
               std::to_string(report.cols)});
      continue;
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const double v = rows[r][c];
      if (std::isnan(v))
        report.errors.push_back({r, c, "entry is NaN"});
      else if (v < 0.0)
        report.errors.push_back({r, c, "entry is negative"});
      else if (std::isinf(v))
        ++report.infinity_count;
    }
  }
  if (!declared_metric || !report.errors.empty()) return report;

  if (report.rows != report.cols) {
    report.metric_violations.push_back(
        {report.rows, report.cols, "metric matrix is not square"});
    return report;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r][r] != 0.0)
      report.metric_violations.push_back({r, r, "nonzero diagonal"});
    for (std::size_t c = r + 1; c < rows.size(); ++c)
      if (rows[r][c] != rows[c][r])
        report.metric_violations.push_back({r, c, "asymmetric entry"});
  }
  return report;
}

DowkerDissimilarity::DowkerDissimilarity(Matrix<Extended> entries)
    : m_(std::move(entries)) {}

DowkerDissimilarity DowkerDissimilarity::from_rows(
    const std::vector<std::vector<double>>& rows, bool declared_metric) {
  const ValidationReport report = validate_dissimilarity(rows, declared_metric);
  if (!report.valid())
    throw InputError("invalid dissimilarity: " + report.first_problem());
  Matrix<Extended> m(report.rows, report.cols);
  for (std::size_t r = 0; r < report.rows; ++r)
    for (std::size_t c = 0; c < report.cols; ++c) m(r, c) = Extended(rows[r][c]);
  return DowkerDissimilarity(std::move(m));
}

double DowkerDissimilarity::max_finite() const {
  double best = 0.0;
  for (Extended e : m_.data())
    if (e.is_finite() && e.value() > best) best = e.value();
  return best;
}

}  // namespace dowker
