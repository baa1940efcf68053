#pragma once

// Brute-force reference implementations used only by the tests. They follow
// the defining formulas directly and share no code with the library's
// optimized paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "dowker/dissimilarity.hpp"
#include "dowker/persistence.hpp"
#include "dowker/simplex.hpp"
#include "dowker/translation.hpp"

namespace oracle {

using dowker::DowkerDissimilarity;
using dowker::Extended;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline std::vector<std::vector<double>> to_rows(const DowkerDissimilarity& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).value();
  return rows;
}

/// rho(l, l') = sup{ first(l', w) : second(l, w) < first(l', w) }, 0 if empty.
inline std::vector<std::vector<double>> cover(
    const std::vector<std::vector<double>>& first,
    const std::vector<std::vector<double>>& second) {
  const std::size_t n = first.size();
  std::vector<std::vector<double>> rho(n, std::vector<double>(n, 0.0));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t o = 0; o < n; ++o) {
      std::vector<double> sup_set;
      for (std::size_t w = 0; w < first[o].size(); ++w)
        if (second[l][w] < first[o][w]) sup_set.push_back(first[o][w]);
      rho[l][o] = sup_set.empty() ? 0.0
                                  : *std::max_element(sup_set.begin(), sup_set.end());
    }
  return rho;
}

/// Greedy farthest-point order re-executed from scratch: at each step the
/// distance of every candidate to the inserted set is recomputed in full.
inline std::pair<std::vector<std::size_t>, std::vector<double>> greedy_order(
    const std::vector<std::vector<double>>& rho, std::size_t initial) {
  const std::size_t n = rho.size();
  std::vector<std::size_t> order{initial};
  std::vector<double> t(n, 0.0);
  t[initial] = kInf;
  while (order.size() < n) {
    double best = -1.0;
    std::size_t arg = n;
    for (std::size_t l = 0; l < n; ++l) {
      if (std::find(order.begin(), order.end(), l) != order.end()) continue;
      double d = kInf;
      for (std::size_t p : order) d = std::min(d, rho[l][p]);
      if (d > best) {
        best = d;
        arg = l;
      }
    }
    order.push_back(arg);
    t[arg] = best;
  }
  return {order, t};
}

/// Truncation recomputed recursively from its closed form:
/// gamma(l) = max(lambda(l), min(alpha(lambda(l)), gamma(c) for tree children c)).
inline std::vector<std::vector<double>> truncation(
    const std::vector<std::vector<double>>& lambda,
    const dowker::TranslationFunction& alpha, std::size_t initial) {
  const std::size_t n = lambda.size();
  std::vector<std::vector<double>> inflated = lambda;
  for (auto& row : inflated)
    for (double& x : row) x = alpha(x);
  const auto rho = cover(lambda, inflated);
  const auto [order, t] = greedy_order(rho, initial);

  std::vector<std::size_t> parent(n, initial);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t l = order[i];
    bool found = false;
    for (std::size_t j = 0; j < i && !found; ++j)
      if (rho[l][order[j]] == t[l]) {
        parent[l] = order[j];
        found = true;
      }
    if (found) continue;
    double best = kInf;
    bool any = false;
    for (std::size_t j = 0; j < i; ++j) {
      const double r = rho[l][order[j]];
      if (r > 0.0 && (!any || r < best)) {
        best = r;
        parent[l] = order[j];
        any = true;
      }
    }
  }

  std::vector<std::vector<double>> gamma(n);
  std::vector<bool> done(n, false);
  auto solve = [&](auto&& self, std::size_t l) -> const std::vector<double>& {
    if (done[l]) return gamma[l];
    std::vector<double> row = inflated[l];
    for (std::size_t c = 0; c < n; ++c)
      if (c != initial && c != l && parent[c] == l) {
        const auto& child = self(self, c);
        for (std::size_t w = 0; w < row.size(); ++w) row[w] = std::min(row[w], child[w]);
      }
    for (std::size_t w = 0; w < row.size(); ++w) row[w] = std::max(row[w], lambda[l][w]);
    gamma[l] = row;
    done[l] = true;
    return gamma[l];
  };
  for (std::size_t l = 0; l < n; ++l) solve(solve, l);
  return gamma;
}

/// Full Dowker nerve: every subset of L with cardinality <= max_card that has
/// a common finite witness, valued by min over w of max over the subset.
inline dowker::FilteredComplex full_nerve(const DowkerDissimilarity& lambda,
                                          std::size_t max_card) {
  dowker::FilteredComplex k;
  k.max_cardinality = max_card;
  const std::size_t n = lambda.rows();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    dowker::Simplex s;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (s.size() > max_card) continue;
    double best = kInf;
    for (std::size_t w = 0; w < lambda.cols(); ++w) {
      double worst = 0.0;
      for (auto v : s) worst = std::max(worst, lambda(v, w).value());
      best = std::min(best, worst);
    }
    if (best == kInf) continue;
    k.simplices.push_back(s);
    k.values.push_back(Extended(best));
  }
  dowker::sort_filtration(k);
  return k;
}

/// Rank of a set of GF(2) vectors given as index sets.
inline std::size_t gf2_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] ^ rows[rank][j];
    ++rank;
  }
  return rank;
}

/// Persistent Betti number beta_k^{s,t} = dim Z_k(K_s) - dim(B_k(K_t) ∩ C_k(K_s))
/// from ranks of boundary matrices.
inline std::size_t persistent_betti(const dowker::FilteredComplex& k,
                                    std::size_t dim, double s, double t) {
  std::vector<std::size_t> chains_s, chains_t, cofaces_t;
  std::map<dowker::Simplex, std::size_t> pos;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double v = k.values[i].value();
    const std::size_t d = k.simplices[i].size() - 1;
    if (d == dim && v <= t) {
      pos[k.simplices[i]] = chains_t.size();
      chains_t.push_back(i);
      if (v <= s) chains_s.push_back(i);
    }
    if (d == dim + 1 && v <= t) cofaces_t.push_back(i);
  }
  auto boundary = [&](std::size_t i) {
    std::vector<bool> col(chains_t.size(), false);
    const auto& sx = k.simplices[i];
    if (sx.size() < 2) return col;
    for (std::size_t skip = 0; skip < sx.size(); ++skip) {
      dowker::Simplex f;
      for (std::size_t j = 0; j < sx.size(); ++j)
        if (j != skip) f.push_back(sx[j]);
      col[pos.at(f)] = true;
    }
    return col;
  };
  // dim Z_k(K_s) = #k-simplices in K_s - rank of their boundaries.
  std::size_t rank_ds = 0;
  if (dim > 0) {
    std::map<dowker::Simplex, std::size_t> lower;
    std::vector<std::vector<bool>> rows;
    std::size_t count = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k.simplices[i].size() == dim && k.values[i].value() <= s)
        lower[k.simplices[i]] = count++;
    for (std::size_t i : chains_s) {
      std::vector<bool> col(count, false);
      const auto& sx = k.simplices[i];
      for (std::size_t skip = 0; skip < sx.size(); ++skip) {
        dowker::Simplex f;
        for (std::size_t j = 0; j < sx.size(); ++j)
          if (j != skip) f.push_back(sx[j]);
        col[lower.at(f)] = true;
      }
      rows.push_back(col);
    }
    rank_ds = gf2_rank(rows);
  }
  const std::size_t cycles = chains_s.size() - rank_ds;

  std::vector<std::vector<bool>> b_t, b_t_outside;
  std::set<std::size_t> in_s;
  for (std::size_t i : chains_s) in_s.insert(pos.at(k.simplices[i]));
  for (std::size_t i : cofaces_t) {
    auto col = boundary(i);
    std::vector<bool> outside;
    for (std::size_t j = 0; j < col.size(); ++j)
      if (!in_s.count(j)) outside.push_back(col[j]);
    b_t.push_back(col);
    b_t_outside.push_back(outside);
  }
  const std::size_t intersection = gf2_rank(b_t) - gf2_rank(b_t_outside);
  return cycles - intersection;
}

/// Diagram side of the same number: points of dimension dim with birth <= s
/// and death > t.
inline std::size_t diagram_betti(const dowker::PersistenceDiagram& dgm,
                                 std::size_t dim, double s, double t) {
  std::size_t count = 0;
  for (const auto& p : dgm.points)
    if (p.dim == dim && p.birth.value() <= s && t < p.death.value()) ++count;
  return count;
}

/// Smallest enclosing ball radius by enumeration: over every subset of at
/// most n+1 points, the circumball (if it contains all points); minimum wins.
inline double brute_miniball_radius(const std::vector<std::vector<double>>& pts) {
  const std::size_t n = pts.size(), dim = pts.front().size();
  double best = kInf;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (idx.size() > dim + 1) continue;
    const auto& p0 = pts[idx[0]];
    const std::size_t k = idx.size() - 1;
    // Gram system 2 (p_i - p0).(p_j - p0) x_j = |p_i - p0|^2.
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < dim; ++c)
          a[i][j] += 2.0 * (pts[idx[i + 1]][c] - p0[c]) * (pts[idx[j + 1]][c] - p0[c]);
      for (std::size_t c = 0; c < dim; ++c)
        a[i][k] += (pts[idx[i + 1]][c] - p0[c]) * (pts[idx[i + 1]][c] - p0[c]);
    }
    bool singular = false;
    for (std::size_t c = 0; c < k && !singular; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c; r < k; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      if (std::abs(a[piv][c]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[c]);
      for (std::size_t r = 0; r < k; ++r)
        if (r != c) {
          const double f = a[r][c] / a[c][c];
          for (std::size_t j = c; j <= k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    if (singular) continue;
    std::vector<double> center = p0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < dim; ++c)
        center[c] += a[i][k] / a[i][i] * (pts[idx[i + 1]][c] - p0[c]);
    double r = 0.0;
    for (auto i : idx) {
      double d = 0.0;
      for (std::size_t c = 0; c < dim; ++c) d += (pts[i][c] - center[c]) * (pts[i][c] - center[c]);
      r = std::max(r, std::sqrt(d));
    }
    bool encloses = true;
    for (const auto& q : pts) {
      double d = 0.0;
      for (std::size_t c = 0; c < dim; ++c) d += (q[c] - center[c]) * (q[c] - center[c]);
      if (std::sqrt(d) > r * (1 + 1e-9) + 1e-12) encloses = false;
    }
    if (encloses) best = std::min(best, r);
  }
  return best;
}

inline DowkerDissimilarity random_dissimilarity(std::mt19937& rng,
                                                std::size_t min_size = 2,
                                                std::size_t max_size = 7) {
  std::uniform_int_distribution<std::size_t> size(min_size, max_size);
  std::uniform_int_distribution<int> pick(0, 4);
  const std::size_t rows = size(rng), cols = size(rng);
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
  static constexpr double kValues[] = {0.0, 1.0, 2.0, 3.0, kInf};
  for (auto& row : m)
    for (double& x : row) x = kValues[pick(rng)];
  return DowkerDissimilarity::from_rows(m);
}

}  // namespace oracle
