#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace dowker {

/// A value in [0, inf]. NaN and negative values cannot be represented, so
/// the ordering is total and infinity is the maximum.
class Extended {
 public:
  constexpr Extended() noexcept = default;

  /// Throws std::invalid_argument on NaN or negative input.
  explicit Extended(double v);

  static constexpr Extended infinity() noexcept {
    Extended e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }
  static constexpr Extended zero() noexcept { return Extended{}; }

  constexpr double value() const noexcept { return v_; }
  constexpr bool is_infinite() const noexcept {
    return v_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const noexcept { return !is_infinite(); }

  friend constexpr bool operator==(Extended, Extended) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Extended a,
                                                    Extended b) noexcept {
    // NaN is excluded at construction, so this ordering is total.
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  double v_ = 0.0;
};

/// Shortest round-trip text form; infinity prints as "inf".
std::string to_string(Extended e);

/// Parses a decimal number or "inf"/"infinity" (case-insensitive).
Extended parse_extended(const std::string& token);

std::ostream& operator<<(std::ostream& os, Extended e);

}  // namespace dowker
