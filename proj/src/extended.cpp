#include "dowker/extended.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dowker {

Extended::Extended(double v) : v_(v) {
  if (std::isnan(v)) throw std::invalid_argument("extended value is NaN");
  if (v < 0.0) throw std::invalid_argument("extended value is negative");
}

std::string to_string(Extended e) {
  if (e.is_infinite()) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.value());
  return std::string(buf, ptr);
}

Extended parse_extended(const std::string& token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "+inf" || lower == "infinity")
    return Extended::infinity();
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw std::invalid_argument("not a number: '" + token + "'");
  return Extended(v);
}

std::ostream& operator<<(std::ostream& os, Extended e) {
  return os << to_string(e);
}

}  // namespace dowker
