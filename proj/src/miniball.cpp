#include "dowker/miniball.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <list>
#include <random>

#include "dowker/error.hpp"

namespace dowker {

namespace {

using Point = Eigen::VectorXd;

constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-12;

struct WorkBall {
  Point center;
  double radius = -1.0;  // negative: empty ball

  bool contains(const Point& p) const {
    if (radius < 0.0) return false;
    return (p - center).norm() <= radius * (1.0 + kRelTol) + kAbsTol;
  }
};

// Smallest ball with every boundary point on its sphere: the circumcenter
// inside the affine hull of the boundary.
WorkBall circumball(const std::vector<const Point*>& boundary) {
  WorkBall ball;
  if (boundary.empty()) return ball;
  const Point& origin = *boundary.front();
  if (boundary.size() == 1) {
    ball.center = origin;
    ball.radius = 0.0;
    return ball;
  }
  const Eigen::Index k = static_cast<Eigen::Index>(boundary.size()) - 1;
  Eigen::MatrixXd span(origin.size(), k);
  for (Eigen::Index i = 0; i < k; ++i)
    span.col(i) = *boundary[static_cast<std::size_t>(i) + 1] - origin;
  const Eigen::MatrixXd gram = 2.0 * span.transpose() * span;
  const Eigen::VectorXd rhs = span.colwise().squaredNorm().transpose();
  const Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  ball.center = origin + span * lambda;
  ball.radius = 0.0;
  for (const Point* p : boundary)
    ball.radius = std::max(ball.radius, (*p - ball.center).norm());
  return ball;
}

WorkBall move_to_front(std::list<Point>& points, std::list<Point>::iterator end,
                       std::vector<const Point*>& boundary, std::size_t dim) {
  WorkBall ball = circumball(boundary);
  if (boundary.size() == dim + 1) return ball;
  for (auto it = points.begin(); it != end;) {
    auto next = std::next(it);
    if (!ball.contains(*it)) {
      boundary.push_back(&*it);
      ball = move_to_front(points, it, boundary, dim);
      boundary.pop_back();
      points.splice(points.begin(), points, it);
    }
    it = next;
  }
  return ball;
}

}  // namespace

Ball miniball(std::span<const std::vector<double>> points) {
  if (points.empty()) throw InputError("miniball of an empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw InputError("miniball: mixed point dimensions");

  std::vector<Point> shuffled;
  shuffled.reserve(points.size());
  for (const auto& p : points)
    shuffled.push_back(Eigen::Map<const Point>(p.data(),
                                               static_cast<Eigen::Index>(dim)));
  std::mt19937 rng(0x5eed);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::list<Point> work(shuffled.begin(), shuffled.end());

  std::vector<const Point*> boundary;
  boundary.reserve(dim + 1);
  const WorkBall ball = move_to_front(work, work.end(), boundary, dim);

  Ball out;
  out.center.assign(ball.center.data(), ball.center.data() + ball.center.size());
  out.radius = ball.radius;
  return out;
}

}  // namespace dowker
