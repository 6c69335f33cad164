#include "anm/regression.hpp"

#include <cmath>
#include <string>

#include "anm/kernels.hpp"

namespace anm {

RankDeficientError::RankDeficientError(std::size_t rank_, std::size_t needed_)
    : std::runtime_error("regression design matrix is rank deficient (rank " +
                         std::to_string(rank_) + " of " +
                         std::to_string(needed_) + ")"),
      rank(rank_),
      needed(needed_) {}

std::size_t cross_term_index(std::size_t j, std::size_t k, std::size_t n) {
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in row-major order.
  return j * (2 * n - j - 1) / 2 + (k - j - 1);
}

DesignMatrix build_design_matrix(std::span<const RegressionSample> samples,
                                 std::size_t n) {
  const std::size_t cols = quadratic_basis_size(n);
  if (samples.size() < cols)
    throw std::invalid_argument(
        "build_design_matrix: need at least " + std::to_string(cols) +
        " samples for dimension " + std::to_string(n) + ", got " +
        std::to_string(samples.size()));

  std::vector<Point> deltas(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].delta.size() != n)
      throw std::invalid_argument("build_design_matrix: delta dimension mismatch");
    deltas[i] = samples[i].delta;
  }

  std::vector<double> rows(samples.size() * cols);
  build_design(deltas, n, rows);

  DesignMatrix dm;
  dm.dimension = n;
  dm.values = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                             Eigen::Dynamic, Eigen::RowMajor>>(
      rows.data(), static_cast<Eigen::Index>(samples.size()),
      static_cast<Eigen::Index>(cols));
  return dm;
}

Eigen::VectorXd fit_least_squares(const DesignMatrix& x,
                                  const Eigen::VectorXd& y) {
  if (y.size() != x.values.rows())
    throw std::invalid_argument("fit_least_squares: y length mismatch");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x.values);
  const auto rank = static_cast<std::size_t>(qr.rank());
  if (rank < x.cols()) throw RankDeficientError(rank, x.cols());
  return qr.solve(y);
}

QuadraticModel extract_model(const Eigen::VectorXd& coefficients, std::size_t n,
                             const Point& center, double residual_norm,
                             double r_squared) {
  const std::size_t cols = quadratic_basis_size(n);
  if (static_cast<std::size_t>(coefficients.size()) != cols)
    throw std::invalid_argument("extract_model: coefficient length mismatch");

  QuadraticModel model;
  model.coefficients = coefficients;
  model.center = center;
  model.residual_norm = residual_norm;
  model.r_squared = r_squared;
  model.intercept = coefficients(0);
  model.gradient = coefficients.segment(1, static_cast<Eigen::Index>(n));
  model.hessian.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    model.hessian(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
        coefficients(static_cast<Eigen::Index>(1 + n + i));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double v = coefficients(
          static_cast<Eigen::Index>(1 + 2 * n + cross_term_index(j, k, n)));
      model.hessian(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
      model.hessian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return model;
}

QuadraticModel regress_model(const Point& center,
                             std::span<const EvaluationRecord> evaluations,
                             std::size_t n) {
  if (center.size() != n)
    throw std::invalid_argument("regress_model: center dimension mismatch");

  std::vector<RegressionSample> samples(evaluations.size());
  Eigen::VectorXd y(static_cast<Eigen::Index>(evaluations.size()));
  for (std::size_t i = 0; i < evaluations.size(); ++i) {
    const auto& rec = evaluations[i];
    if (rec.point.size() != n)
      throw std::invalid_argument("regress_model: point dimension mismatch");
    if (!all_finite(rec.point) || !std::isfinite(rec.fitness))
      throw std::invalid_argument("regress_model: non-finite evaluation");
    samples[i].delta.resize(n);
    for (std::size_t d = 0; d < n; ++d)
      samples[i].delta[d] = rec.point[d] - center[d];
    samples[i].fitness = rec.fitness;
    y(static_cast<Eigen::Index>(i)) = rec.fitness;
  }

  DesignMatrix x = build_design_matrix(samples, n);
  Eigen::VectorXd b = fit_least_squares(x, y);

  double residual_norm = (x.values * b - y).norm();
  double mean = y.mean();
  double ss_tot = (y.array() - mean).matrix().squaredNorm();
  double r_squared =
      ss_tot > 0.0 ? 1.0 - (residual_norm * residual_norm) / ss_tot : 1.0;

  return extract_model(b, n, center, residual_norm, r_squared);
}

}  // namespace anm
