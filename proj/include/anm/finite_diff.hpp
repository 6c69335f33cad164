#pragma once

#include <Eigen/Dense>
#include <unordered_map>

#include "anm/core.hpp"

namespace anm {

// Memoizes evaluations by the exact bit pattern of the point, so shared
// stencil points (the center, symmetric pairs) are evaluated once. Single
// owner per call chain; concurrent callers use separate caches.
class EvalCache {
 public:
  double evaluate(const ObjectiveSpec& objective, const Point& x);
  std::size_t unique_evaluations() const { return cache_.size(); }

 private:
  std::unordered_map<Point, double, PointBitsHash, PointBitsEqual> cache_;
};

Eigen::VectorXd to_eigen(const Point& p);
Point to_point(const Eigen::VectorXd& v);

// Central difference, (f(x + s_i e_i) - f(x - s_i e_i)) / (2 s_i) per
// coordinate: 2n fresh evaluations on an empty cache.
Eigen::VectorXd fd_gradient(const ObjectiveSpec& objective, const Point& x,
                            const StepVector& s, EvalCache& cache);

// Four-point cross stencil off the diagonal, (f(x+2s_i) - 2f(x) + f(x-2s_i))
// / (4 s_i^2) on it. Upper triangle computed, lower mirrored. At most
// 2n^2 + 1 unique evaluations on an empty cache.
Eigen::MatrixXd fd_hessian(const ObjectiveSpec& objective, const Point& x,
                           const StepVector& s, EvalCache& cache);

struct NewtonDirection {
  Point direction;
  bool fallback = false;  // true when -g was used instead of the Newton step
};

// Solves H d = -g when H is well conditioned (condition estimate <= 1e12),
// else falls back to steepest descent. Never forms an explicit inverse.
NewtonDirection newton_direction(const Eigen::VectorXd& gradient,
                                 const Eigen::MatrixXd& hessian);

}  // namespace anm
