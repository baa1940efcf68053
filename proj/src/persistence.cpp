#include "dowker/persistence.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>

#include "dowker/error.hpp"

namespace dowker {

namespace {

using Column = std::vector<std::uint32_t>;  // ascending row indices

// Symmetric difference of two sorted columns into `target`.
void add_column(Column& target, const Column& source, Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(),
                                source.end(), std::back_inserter(scratch));
  target.swap(scratch);
}

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

}  // namespace

std::vector<DiagramPoint> PersistenceDiagram::in_dimension(std::size_t dim) const {
  std::vector<DiagramPoint> out;
  for (const auto& p : points)
    if (p.dim == dim) out.push_back(p);
  return out;
}

PersistenceDiagram compute_persistence(const FilteredComplex& complex,
                                       std::size_t max_dim) {
  const std::size_t max_card = max_dim + 2;

  // Keep the simplices we need, remembering their filtration positions.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < complex.size(); ++i) {
    const auto card = complex.simplices[i].size();
    if (card == 0) throw InputError("complex contains the empty simplex");
    if (card <= max_card) kept.push_back(i);
  }
  const std::size_t n = kept.size();
  std::unordered_map<Simplex, std::uint32_t, SimplexHash> index;
  index.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    index.emplace(complex.simplices[kept[j]], static_cast<std::uint32_t>(j));

  std::vector<Column> columns(n);
  std::vector<std::size_t> dims(n);
  Simplex facet;
  for (std::size_t j = 0; j < n; ++j) {
    const Simplex& s = complex.simplices[kept[j]];
    dims[j] = s.size() - 1;
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      facet.clear();
      for (std::size_t k = 0; k < s.size(); ++k)
        if (k != skip) facet.push_back(s[k]);
      auto it = index.find(facet);
      if (it == index.end())
        throw InputError("facet " + describe(facet) + " of " + describe(s) +
                         " is missing");
      if (it->second >= j ||
          complex.values[kept[it->second]] > complex.values[kept[j]])
        throw InputError("facet " + describe(facet) + " does not precede " +
                         describe(s));
      columns[j].push_back(it->second);
    }
    std::sort(columns[j].begin(), columns[j].end());
  }

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pivot_owner(n, kNone);  // row -> reducing column
  std::vector<bool> cleared(n, false);
  Column scratch;

  for (std::size_t d = max_dim + 1; d >= 1; --d) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dims[j] != d || cleared[j]) continue;
      Column& col = columns[j];
      while (!col.empty() && pivot_owner[col.back()] != kNone)
        add_column(col, columns[pivot_owner[col.back()]], scratch);
      if (!col.empty()) {
        pivot_owner[col.back()] = static_cast<std::uint32_t>(j);
        cleared[col.back()] = true;
        columns[col.back()].clear();
      }
    }
  }

  PersistenceDiagram diagram;
  auto value = [&](std::size_t j) { return complex.values[kept[j]]; };
  for (std::size_t j = 0; j < n; ++j) {
    if (dims[j] > max_dim) continue;
    if (pivot_owner[j] != kNone) {
      const Extended birth = value(j);
      const Extended death = value(pivot_owner[j]);
      if (birth < death)
        diagram.points.push_back({dims[j], birth, death});
      else
        ++diagram.zero_persistence_pairs;
    } else if (columns[j].empty() && !cleared[j]) {
      diagram.points.push_back({dims[j], value(j), Extended::infinity()});
    }
  }
  std::sort(diagram.points.begin(), diagram.points.end());
  return diagram;
}

InterleavingLine interleaving_line(const TranslationFunction& alpha,
                                   double t_max, std::size_t samples) {
  if (!(t_max > 0.0)) t_max = 1.0;
  samples = std::max<std::size_t>(samples, 2);
  InterleavingLine line{alpha, {}};
  line.samples.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    line.samples.emplace_back(t, alpha(t));
  }
  return line;
}

namespace {

using Admissible = std::function<bool(const DiagramPoint&, const DiagramPoint&)>;
using MayVanish = std::function<bool(const DiagramPoint&)>;

// Exact points and approx points each either pair across or go to the
// diagonal. Left side: exact points then diagonal copies of approx points;
// right side: approx points then diagonal copies of exact points. A perfect
// matching exists iff the check passes.
DimensionMatch match_dimension(std::size_t dim,
                               const std::vector<DiagramPoint>& exact,
                               const std::vector<DiagramPoint>& approx,
                               const Admissible& admissible,
                               const MayVanish& may_vanish) {
  const std::size_t e = exact.size();
  const std::size_t a = approx.size();
  const std::size_t side = e + a;
  std::vector<std::vector<std::size_t>> adj(side);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < a; ++j)
      if (admissible(exact[i], approx[j])) adj[i].push_back(j);
    if (may_vanish(exact[i])) adj[i].push_back(a + i);
  }
  for (std::size_t j = 0; j < a; ++j) {
    if (may_vanish(approx[j])) adj[e + j].push_back(j);
    for (std::size_t i = 0; i < e; ++i) adj[e + j].push_back(a + i);
  }

  std::vector<std::size_t> match_right(side, side);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (match_right[v] == side || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };

  DimensionMatch result;
  result.dim = dim;
  result.passed = true;
  for (std::size_t u = 0; u < side; ++u) {
    visited.assign(side, false);
    if (!augment(u)) result.passed = false;
  }
  std::vector<bool> exact_paired(e, false);
  std::vector<bool> approx_paired(a, false);
  for (std::size_t j = 0; j < a; ++j)
    if (match_right[j] < e) {
      result.matched.emplace_back(match_right[j], j);
      exact_paired[match_right[j]] = approx_paired[j] = true;
    }
  std::sort(result.matched.begin(), result.matched.end());
  for (std::size_t i = 0; i < e; ++i)
    if (!exact_paired[i]) result.unmatched_exact.push_back(i);
  for (std::size_t j = 0; j < a; ++j)
    if (!approx_paired[j]) result.unmatched_approx.push_back(j);
  return result;
}

std::size_t top_dimension(const PersistenceDiagram& a,
                          const PersistenceDiagram& b) {
  std::size_t top = 0;
  for (const auto& p : a.points) top = std::max(top, p.dim);
  for (const auto& p : b.points) top = std::max(top, p.dim);
  return top;
}

bool within(Extended lo, Extended x, Extended hi) { return lo <= x && x <= hi; }

}  // namespace

InterleavingReport diagram_interleaving_check(const PersistenceDiagram& exact,
                                              const PersistenceDiagram& approx,
                                              const TranslationFunction& alpha) {
  const std::size_t top = top_dimension(exact, approx);

  const Admissible box = [&](const DiagramPoint& p, const DiagramPoint& q) {
    return within(p.birth, q.birth, alpha(p.birth)) &&
           within(p.death, q.death, alpha(p.death));
  };
  const MayVanish near_diagonal = [&](const DiagramPoint& p) {
    return p.death <= alpha(p.birth);
  };

  InterleavingReport report;
  report.passed = true;
  for (std::size_t d = 0; d <= top; ++d) {
    auto m = match_dimension(d, exact.in_dimension(d), approx.in_dimension(d),
                             box, near_diagonal);
    report.passed = report.passed && m.passed;
    report.dimensions.push_back(std::move(m));
  }

  if (alpha.kind() == TranslationFunction::Kind::multiplicative ||
      alpha.kind() == TranslationFunction::Kind::identity) {
    const double c = alpha.multiplicative_constant();
    auto scale = [](Extended x, double f) {
      return x.is_infinite() ? x : Extended(x.value() * f);
    };
    const Admissible factor = [&](const DiagramPoint& p, const DiagramPoint& q) {
      return within(scale(p.birth, 1.0 / c), q.birth, scale(p.birth, c)) &&
             within(scale(p.death, 1.0 / c), q.death, scale(p.death, c));
    };
    const MayVanish short_bar = [&](const DiagramPoint& p) {
      return p.death <= scale(p.birth, c);
    };
    bool ok = true;
    for (std::size_t d = 0; d <= top; ++d) {
      auto m = match_dimension(d, exact.in_dimension(d), approx.in_dimension(d),
                               factor, short_bar);
      ok = ok && m.passed;
      report.multiplicative.push_back(std::move(m));
    }
    report.multiplicative_passed = ok;
  }
  return report;
}

}  // namespace dowker
