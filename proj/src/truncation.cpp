#include "dowker/truncation.hpp"

#include <algorithm>
#include <string>

#include "dowker/error.hpp"

namespace dowker {

FarthestPointOrder farthest_point_sampling(const CoverMatrix& rho,
                                           std::size_t initial) {
  const std::size_t n = rho.rows();
  if (n == 0) throw InputError("farthest point sampling over an empty set");
  if (initial >= n)
    throw InputError("initial point " + std::to_string(initial) +
                     " is out of range");

  FarthestPointOrder fps;
  fps.order.reserve(n);
  fps.order.push_back(initial);
  fps.insertion_time.assign(n, Extended::zero());
  fps.insertion_time[initial] = Extended::infinity();

  std::vector<bool> inserted(n, false);
  inserted[initial] = true;
  std::vector<Extended> distance(n);
  for (std::size_t l = 0; l < n; ++l) distance[l] = rho(l, initial);

  while (fps.order.size() < n) {
    std::size_t best = n;
    for (std::size_t l = 0; l < n; ++l)
      if (!inserted[l] && (best == n || distance[best] < distance[l])) best = l;
    inserted[best] = true;
    fps.order.push_back(best);
    fps.insertion_time[best] = distance[best];
    for (std::size_t l = 0; l < n; ++l)
      if (!inserted[l]) distance[l] = std::min(distance[l], rho(l, best));
  }
  return fps;
}

std::vector<std::pair<std::size_t, std::size_t>> truncation_tree(
    const CoverMatrix& rho, const FarthestPointOrder& fps) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto& order = fps.order;
  if (order.empty()) return edges;
  edges.reserve(order.size() - 1);

  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t l = order[i];
    const Extended t = fps.insertion_time[l];
    std::size_t parent = order.size();  // sentinel
    for (std::size_t j = 0; j < i && parent == order.size(); ++j)
      if (rho(l, order[j]) == t) parent = order[j];

    if (parent == order.size()) {
      for (std::size_t j = 0; j < i; ++j) {
        const Extended r = rho(l, order[j]);
        if (r > Extended::zero() &&
            (parent == order.size() || r < rho(l, parent)))
          parent = order[j];
      }
    }
    if (parent == order.size()) parent = order.front();
    edges.emplace_back(l, parent);
  }
  return edges;
}

DowkerDissimilarity apply(const TranslationFunction& alpha,
                          const DowkerDissimilarity& lambda) {
  Matrix<Extended> out(lambda.rows(), lambda.cols());
  for (std::size_t l = 0; l < lambda.rows(); ++l)
    for (std::size_t w = 0; w < lambda.cols(); ++w)
      out(l, w) = alpha(lambda(l, w));
  return DowkerDissimilarity(std::move(out));
}

DowkerDissimilarity truncate(const DowkerDissimilarity& lambda,
                             const TranslationFunction& alpha,
                             std::size_t initial) {
  alpha.validate_range(2.0 * lambda.max_finite());
  const DowkerDissimilarity inflated = apply(alpha, lambda);
  const CoverMatrix rho = cover_matrix(lambda, inflated);

  FarthestPointOrder fps = farthest_point_sampling(rho, initial);
  fps.edges = truncation_tree(rho, fps);

  std::vector<std::vector<std::size_t>> children(lambda.rows());
  for (auto [child, parent] : fps.edges) children[parent].push_back(child);

  Matrix<Extended> gamma = inflated.matrix();
  for (auto it = fps.order.rbegin(); it != fps.order.rend(); ++it) {
    const std::size_t l = *it;
    auto row = gamma.row(l);
    for (std::size_t child : children[l]) {
      const auto child_row = gamma.row(child);
      for (std::size_t w = 0; w < row.size(); ++w)
        row[w] = std::min(row[w], child_row[w]);
    }
    const auto floor = lambda.row(l);
    for (std::size_t w = 0; w < row.size(); ++w)
      row[w] = std::max(row[w], floor[w]);
  }
  return DowkerDissimilarity(std::move(gamma));
}

}  // namespace dowker
