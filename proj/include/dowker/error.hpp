#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dowker {

/// Malformed or inconsistent input data (bad files, invalid matrices, bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a complex would exceed the configured simplex budget.
class SizeLimitError : public std::runtime_error {
 public:
  SizeLimitError(std::size_t attempted, std::size_t limit)
      : std::runtime_error("simplex count " + std::to_string(attempted) +
                           " exceeds limit " + std::to_string(limit)),
        attempted_(attempted),
        limit_(limit) {}

  std::size_t attempted() const noexcept { return attempted_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t attempted_;
  std::size_t limit_;
};

}  // namespace dowker
