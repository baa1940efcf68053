#include "dowker/translation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "dowker/error.hpp"

namespace dowker {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_number(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    throw InputError("bad number in interleaving spec: '" + s + "'");
  return v;
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  grid.reserve(1024);
  grid.push_back(0.0);
  // 1023 log-spaced points over [1e-6, 1e6].
  for (int i = 0; i < 1023; ++i)
    grid.push_back(std::pow(10.0, -6.0 + 12.0 * i / 1022.0));
  return grid;
}

std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

TranslationFunction::TranslationFunction(
    Kind kind, std::vector<double> params,
    std::vector<std::pair<double, double>> knots)
    : kind_(kind), params_(std::move(params)), knots_(std::move(knots)) {
  for (double p : params_)
    if (!std::isfinite(p)) throw InputError("interleaving parameter is not finite");
  validate_grid(default_grid());
}

TranslationFunction TranslationFunction::identity() {
  return TranslationFunction(Kind::identity, {});
}

TranslationFunction TranslationFunction::additive(double a) {
  if (!(a >= 0.0)) throw InputError("additive interleaving requires a >= 0");
  return TranslationFunction(Kind::additive, {a});
}

TranslationFunction TranslationFunction::multiplicative(double c) {
  if (!(c >= 1.0)) throw InputError("multiplicative interleaving requires c >= 1");
  return TranslationFunction(Kind::multiplicative, {c});
}

TranslationFunction TranslationFunction::polynomial(
    std::vector<double> coefficients) {
  if (coefficients.empty()) throw InputError("polynomial needs coefficients");
  return TranslationFunction(Kind::polynomial, std::move(coefficients));
}

TranslationFunction TranslationFunction::tabulated(
    std::vector<std::pair<double, double>> knots) {
  if (knots.empty()) throw InputError("tabulated interleaving needs knots");
  if (knots.front().first != 0.0)
    throw InputError("tabulated interleaving must start at t = 0");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
      throw InputError("tabulated interleaving knot is not finite");
    if (i > 0 && !(knots[i].first > knots[i - 1].first))
      throw InputError("tabulated interleaving knots must increase in t");
  }
  return TranslationFunction(Kind::tabulated, {}, std::move(knots));
}

TranslationFunction TranslationFunction::parse(const std::string& spec) {
  if (spec == "id" || spec == "identity") return identity();
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("unknown interleaving spec: '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  if (head == "add") return additive(parse_number(tail));
  if (head == "mult") return multiplicative(parse_number(tail));
  if (head == "poly") {
    std::vector<double> coeffs;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_number(item));
    return polynomial(std::move(coeffs));
  }
  throw InputError("unknown interleaving spec: '" + spec + "'");
}

double TranslationFunction::multiplicative_constant() const noexcept {
  if (kind_ == Kind::identity) return 1.0;
  if (kind_ == Kind::multiplicative) return params_[0];
  return 0.0;
}

std::string TranslationFunction::describe() const {
  switch (kind_) {
    case Kind::identity:
      return "id";
    case Kind::additive:
      return "add:" + number(params_[0]);
    case Kind::multiplicative:
      return "mult:" + number(params_[0]);
    case Kind::polynomial: {
      std::string s = "poly:";
      for (std::size_t i = 0; i < params_.size(); ++i)
        s += (i ? "," : "") + number(params_[i]);
      return s;
    }
    case Kind::tabulated: {
      std::string s = "table:";
      for (std::size_t i = 0; i < knots_.size(); ++i)
        s += (i ? ";" : "") + number(knots_[i].first) + "," +
             number(knots_[i].second);
      return s;
    }
  }
  return {};
}

double TranslationFunction::operator()(double t) const {
  if (t == kInf) return kInf;
  switch (kind_) {
    case Kind::identity:
      return t;
    case Kind::additive:
      return t + params_[0];
    case Kind::multiplicative:
      return t * params_[0];
    case Kind::polynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it)
        acc = acc * t + *it;
      return acc;
    }
    case Kind::tabulated: {
      const auto& last = knots_.back();
      if (t >= last.first) return last.second + (t - last.first);
      auto hi = std::upper_bound(
          knots_.begin(), knots_.end(), t,
          [](double x, const auto& knot) { return x < knot.first; });
      auto lo = hi - 1;
      const double s = (t - lo->first) / (hi->first - lo->first);
      return lo->second + s * (hi->second - lo->second);
    }
  }
  return t;
}

Extended TranslationFunction::operator()(Extended t) const {
  if (t.is_infinite()) return Extended::infinity();
  return Extended((*this)(t.value()));
}

void TranslationFunction::validate_grid(const std::vector<double>& grid) const {
  double previous = -kInf;
  for (double t : grid) {
    const double a = (*this)(t);
    if (std::isnan(a))
      throw InputError("interleaving " + describe() + " is NaN at t=" + number(t));
    if (a < t)
      throw InputError("interleaving " + describe() + " has alpha(t) < t at t=" +
                       number(t));
    if (a < previous)
      throw InputError("interleaving " + describe() + " decreases at t=" +
                       number(t));
    previous = a;
  }
  if ((*this)(kInf) != kInf)
    throw InputError("interleaving must map infinity to infinity");
}

void TranslationFunction::validate_range(double upper,
                                         std::size_t samples) const {
  std::vector<double> grid;
  if (samples < 2) samples = 2;
  grid.reserve(samples + 1);
  for (std::size_t i = 0; i < samples; ++i)
    grid.push_back(upper * static_cast<double>(i) /
                   static_cast<double>(samples - 1));
  grid.push_back(kInf);
  validate_grid(grid);
}

}  // namespace dowker
