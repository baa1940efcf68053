#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dowker/extended.hpp"

namespace dowker {

/// An interleaving function alpha: [0, inf] -> [0, inf] with alpha(t) >= t,
/// non-decreasing, alpha(inf) = inf.
///
/// Every factory validates its result: declared-kind checks on the
/// parameters, then a sampled check on a fixed log-spaced grid. Data-dependent
/// ranges are checked again with validate_range() once the input is known.
class TranslationFunction {
 public:
  enum class Kind { identity, additive, multiplicative, polynomial, tabulated };

  /// The identity.
  TranslationFunction() = default;

  static TranslationFunction identity();
  static TranslationFunction additive(double a);
  static TranslationFunction multiplicative(double c);
  /// Coefficients in ascending powers: c0 + c1 t + c2 t^2 + ...
  static TranslationFunction polynomial(std::vector<double> coefficients);
  /// Piecewise linear through (t, alpha(t)) knots sorted by t; the first knot
  /// must be at t = 0. Past the last knot the function continues with slope 1.
  static TranslationFunction tabulated(
      std::vector<std::pair<double, double>> knots);

  /// Parses `id`, `add:<a>`, `mult:<c>` or `poly:<c0>,<c1>,...`.
  static TranslationFunction parse(const std::string& spec);

  Kind kind() const noexcept { return kind_; }
  /// Multiplicative constant, or 1 for the identity; 0 for every other kind.
  double multiplicative_constant() const noexcept;
  /// Text form accepted by parse() (tabulated functions print their knots).
  std::string describe() const;

  Extended operator()(Extended t) const;
  double operator()(double t) const;

  /// Samples `samples` evenly spaced points of [0, upper] plus infinity and
  /// throws InputError if alpha(t) < t or alpha decreases anywhere.
  void validate_range(double upper, std::size_t samples = 1024) const;

 private:
  TranslationFunction(Kind kind, std::vector<double> params,
                      std::vector<std::pair<double, double>> knots = {});
  void validate_grid(const std::vector<double>& grid) const;

  Kind kind_ = Kind::identity;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> knots_;
};

}  // namespace dowker
