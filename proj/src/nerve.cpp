#include "dowker/nerve.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "dowker/cover.hpp"
#include "dowker/error.hpp"
#include "dowker/miniball.hpp"
#include "dowker/sparsify.hpp"
#include "dowker/truncation.hpp"

namespace dowker {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

__extension__ typedef unsigned __int128 uint128;

// C(n, k) saturated at the uint64 maximum.
std::uint64_t binomial_saturated(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint128 acc = 1;
  constexpr uint128 cap = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::size_t SlopePointSet::count() const {
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

SlopePointSet slope_points(const ParentFunction& phi, const RestrictionTimes& r) {
  const std::size_t n = phi.size();
  SlopePointSet s{std::vector<bool>(n, true)};
  std::vector<Extended> child_max(n, Extended::zero());
  for (std::size_t l = 0; l < n; ++l)
    if (phi[l] != l) child_max[phi[l]] = std::max(child_max[phi[l]], r[l]);
  for (std::size_t l = 0; l < n; ++l)
    if (r[l].is_finite() && child_max[l] < r[l]) s.member[l] = false;
  return s;
}

std::vector<Simplex> maximal_faces(const DowkerDissimilarity& gamma,
                                   const RestrictionTimes& r,
                                   const SlopePointSet& slope) {
  const std::size_t n = gamma.rows();
  if (r.size() != n || slope.member.size() != n)
    throw InputError("maximal faces: restriction times do not match the rows");

  std::unordered_set<Simplex, SimplexHash> unique;
  Simplex face;
  for (std::size_t l = 0; l < n; ++l) {
    const Extended limit = r[l];
    for (std::size_t w = 0; w < gamma.cols(); ++w) {
      if (!(gamma(l, w) <= limit)) continue;
      face.clear();
      for (std::size_t other = 0; other < n; ++other) {
        const Extended g = gamma(other, w);
        if (r[other] < limit || limit < g || g.is_infinite()) continue;
        if (!slope.contains(other) && !(g < r[other])) continue;
        face.push_back(static_cast<std::uint32_t>(other));
      }
      if (!face.empty()) unique.insert(face);
    }
  }

  std::vector<Simplex> faces(unique.begin(), unique.end());
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Simplex> kept;
  std::vector<Bitset> kept_bits;
  for (auto& f : faces) {
    Bitset bits(n);
    for (auto v : f) bits.set(v);
    const bool dominated = std::any_of(
        kept_bits.begin(), kept_bits.end(),
        [&](const Bitset& k) { return bits.subset_of(k); });
    if (dominated) continue;
    kept.push_back(std::move(f));
    kept_bits.push_back(std::move(bits));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Extended filtration_value(const DowkerDissimilarity& lambda,
                          const Simplex& sigma) {
  Extended best = Extended::infinity();
  for (std::size_t w = 0; w < lambda.cols(); ++w) {
    Extended worst = Extended::zero();
    for (auto l : sigma) {
      worst = std::max(worst, lambda(l, w));
      if (!(worst < best)) break;
    }
    best = std::min(best, worst);
  }
  return best;
}

std::vector<Simplex> skeleton(const std::vector<Simplex>& faces,
                              std::size_t max_cardinality, std::size_t limit) {
  std::uint64_t bound = 0;
  for (const auto& f : faces)
    for (std::size_t k = 1; k <= std::min(max_cardinality, f.size()); ++k) {
      const std::uint64_t c = binomial_saturated(f.size(), k);
      bound = c > std::numeric_limits<std::uint64_t>::max() - bound
                  ? std::numeric_limits<std::uint64_t>::max()
                  : bound + c;
    }

  std::unordered_set<Simplex, SimplexHash> seen;
  seen.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(bound, limit)) + 1);
  std::vector<std::size_t> pick;
  Simplex sigma;
  for (const auto& f : faces) {
    const std::size_t top = std::min(max_cardinality, f.size());
    for (std::size_t k = 1; k <= top; ++k) {
      pick.resize(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        sigma.resize(k);
        for (std::size_t i = 0; i < k; ++i) sigma[i] = f[pick[i]];
        if (seen.insert(sigma).second && seen.size() > limit)
          throw SizeLimitError(static_cast<std::size_t>(bound), limit);
        // Advance to the next k-combination of f.size() indices.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == f.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

FilteredComplex sparse_nerve(const DowkerDissimilarity& lambda,
                             const DowkerDissimilarity& gamma,
                             const RestrictionTimes& r,
                             const ParentFunction& phi, std::size_t dim,
                             std::size_t limit) {
  if (lambda.rows() != gamma.rows() || lambda.cols() != gamma.cols())
    throw InputError("sparse nerve: lambda and gamma differ in shape");
  const auto faces = maximal_faces(gamma, r, slope_points(phi, r));

  FilteredComplex complex;
  complex.max_cardinality = dim + 2;
  complex.simplices = skeleton(faces, complex.max_cardinality, limit);
  complex.values.reserve(complex.simplices.size());
  for (const auto& s : complex.simplices)
    complex.values.push_back(filtration_value(lambda, s));
  sort_filtration(complex);
  return complex;
}

long double skeleton_size(std::size_t n, std::size_t dim) {
  long double total = 0.0L;
  bool exact = true;
  std::uint64_t exact_total = 0;
  for (std::size_t k = 1; k <= dim + 2 && k <= n; ++k) {
    const std::uint64_t c = binomial_saturated(n, k);
    if (c == std::numeric_limits<std::uint64_t>::max() ||
        c > std::numeric_limits<std::uint64_t>::max() - exact_total)
      exact = false;
    if (exact) exact_total += c;
    // Floating path for values beyond 64 bits.
    long double term = 1.0L;
    for (std::size_t i = 1; i <= k; ++i)
      term = term * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    total += term;
  }
  return exact ? static_cast<long double>(exact_total) : total;
}

FilteredComplex ambient_support_nerve(const PointCloud& cloud,
                                      const TranslationFunction& alpha,
                                      std::size_t dim, std::size_t initial,
                                      std::size_t limit) {
  validate(cloud);
  const DowkerDissimilarity lambda = distance_matrix(cloud);
  const DowkerDissimilarity gamma = truncate(lambda, alpha, initial);
  const CoverMatrix rho = cover_matrix(gamma);
  const ParentFunction phi = parent_function(rho);
  RestrictionTimes r = restriction_times(phi, rho);
  for (auto& t : r.times)
    if (t.is_finite()) t = Extended(2.0 * t.value());
  return sparse_nerve(lambda, gamma, r, phi, dim, limit);
}

FilteredComplex with_miniball_values(FilteredComplex complex,
                                     const PointCloud& cloud) {
  // Radii within the miniball tolerance of the largest facet radius are
  // snapped to it, so rounding neither breaks monotonicity nor creates
  // spurious pairs of near-zero persistence.
  std::vector<std::size_t> by_size(complex.size());
  for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return complex.simplices[a].size() < complex.simplices[b].size();
  });
  std::unordered_map<Simplex, Extended, SimplexHash> radius;
  radius.reserve(complex.size());
  std::vector<std::vector<double>> pts;
  Simplex facet;
  for (std::size_t i : by_size) {
    const Simplex& s = complex.simplices[i];
    pts.clear();
    for (auto v : s) pts.push_back(cloud.points[v]);
    const double r = miniball(pts).radius;
    double facet_max = 0.0;
    for (std::size_t skip = 0; s.size() > 1 && skip < s.size(); ++skip) {
      facet.clear();
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip) facet.push_back(s[k]);
      if (auto it = radius.find(facet); it != radius.end())
        facet_max = std::max(facet_max, it->second.value());
    }
    const Extended value(r <= facet_max * (1 + 1e-9) + 1e-12 ? facet_max : r);
    radius.emplace(s, value);
    complex.values[i] = value;
  }
  sort_filtration(complex);
  return complex;
}

FilteredComplex ambient_cech_nerve(const PointCloud& cloud,
                                   const TranslationFunction& alpha,
                                   std::size_t dim, std::size_t initial,
                                   std::size_t limit) {
  return with_miniball_values(
      ambient_support_nerve(cloud, alpha, dim, initial, limit), cloud);
}

}  // namespace dowker
