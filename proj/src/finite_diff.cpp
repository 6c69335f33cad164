#include "anm/finite_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace anm {

namespace {

constexpr double kConditionLimit = 1e12;

Point shifted(const Point& x, std::size_t i, double delta) {
  Point p = x;
  p[i] += delta;
  return p;
}

void require_in_bounds(const Bounds& bounds, const Point& p) {
  if (!bounds.contains(p))
    throw std::domain_error("finite difference stencil point out of bounds");
}

}  // namespace

double EvalCache::evaluate(const ObjectiveSpec& objective, const Point& x) {
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  double f = objective.evaluate(x);
  cache_.emplace(x, f);
  return f;
}

Eigen::VectorXd to_eigen(const Point& p) {
  return Eigen::Map<const Eigen::VectorXd>(p.data(),
                                           static_cast<Eigen::Index>(p.size()));
}

Point to_point(const Eigen::VectorXd& v) {
  return Point(v.data(), v.data() + v.size());
}

Eigen::VectorXd fd_gradient(const ObjectiveSpec& objective, const Point& x,
                            const StepVector& s, EvalCache& cache) {
  const std::size_t n = x.size();
  if (s.size() != n)
    throw std::invalid_argument("fd_gradient: step dimension mismatch");
  Eigen::VectorXd g(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Point plus = shifted(x, i, s[i]);
    Point minus = shifted(x, i, -s[i]);
    require_in_bounds(objective.bounds, plus);
    require_in_bounds(objective.bounds, minus);
    g(static_cast<Eigen::Index>(i)) =
        (cache.evaluate(objective, plus) - cache.evaluate(objective, minus)) /
        (2.0 * s[i]);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const ObjectiveSpec& objective, const Point& x,
                           const StepVector& s, EvalCache& cache) {
  const std::size_t n = x.size();
  if (s.size() != n)
    throw std::invalid_argument("fd_hessian: step dimension mismatch");
  Eigen::MatrixXd h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double value;
      if (i == j) {
        Point plus2 = shifted(x, i, 2.0 * s[i]);
        Point minus2 = shifted(x, i, -2.0 * s[i]);
        require_in_bounds(objective.bounds, plus2);
        require_in_bounds(objective.bounds, minus2);
        value = (cache.evaluate(objective, plus2) -
                 2.0 * cache.evaluate(objective, x) +
                 cache.evaluate(objective, minus2)) /
                (4.0 * s[i] * s[i]);
      } else {
        Point pp = shifted(shifted(x, i, s[i]), j, s[j]);
        Point mp = shifted(shifted(x, i, -s[i]), j, s[j]);
        Point pm = shifted(shifted(x, i, s[i]), j, -s[j]);
        Point mm = shifted(shifted(x, i, -s[i]), j, -s[j]);
        for (const Point* p : {&pp, &mp, &pm, &mm})
          require_in_bounds(objective.bounds, *p);
        value = (cache.evaluate(objective, pp) - cache.evaluate(objective, mp) -
                 cache.evaluate(objective, pm) + cache.evaluate(objective, mm)) /
                (4.0 * s[i] * s[j]);
      }
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
      h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = value;
    }
  }
  return h;
}

NewtonDirection newton_direction(const Eigen::VectorXd& gradient,
                                 const Eigen::MatrixXd& hessian) {
  if (hessian.rows() != hessian.cols() || hessian.rows() != gradient.size())
    throw std::invalid_argument("newton_direction: dimension mismatch");
  if (!gradient.allFinite() || !hessian.allFinite())
    throw std::invalid_argument("newton_direction: non-finite input");

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      hessian, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double smax = sv(0);
  double smin = sv(sv.size() - 1);

  NewtonDirection result;
  if (smin > 0.0 && smax / smin <= kConditionLimit) {
    result.direction = to_point(svd.solve(-gradient));
    result.fallback = false;
  } else {
    result.direction = to_point(-gradient);
    result.fallback = true;
  }
  return result;
}

}  // namespace anm
