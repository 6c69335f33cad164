#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "anm/core.hpp"

namespace anm {

// Offset from the regression center plus the observed fitness there.
struct RegressionSample {
  Point delta;
  double fitness = 0.0;
};

// Quadratic-basis design matrix. Column 0 is all ones; the fit requires at
// least as many rows as columns.
struct DesignMatrix {
  Eigen::MatrixXd values;
  std::size_t dimension = 0;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(values.cols()); }
};

// Thrown when the sample set does not pin down all coefficients. The driver
// reacts by requesting more samples rather than regularizing.
class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(std::size_t rank, std::size_t needed);
  std::size_t rank;
  std::size_t needed;
};

// Fitted quadratic surrogate around `center`. The fit runs in delta
// coordinates, so `gradient` and `hessian` are the model derivatives at the
// center itself.
struct QuadraticModel {
  Eigen::VectorXd coefficients;
  double intercept = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
  double residual_norm = 0.0;
  double r_squared = 1.0;
  Point center;
};

DesignMatrix build_design_matrix(std::span<const RegressionSample> samples,
                                 std::size_t n);

// Least-squares solve of X B ~= y by column-pivoted QR; throws
// RankDeficientError when X lacks full column rank.
Eigen::VectorXd fit_least_squares(const DesignMatrix& x,
                                  const Eigen::VectorXd& y);

QuadraticModel extract_model(const Eigen::VectorXd& coefficients, std::size_t n,
                             const Point& center, double residual_norm,
                             double r_squared);

// Centers the evaluations, builds the design matrix, fits, and extracts.
QuadraticModel regress_model(const Point& center,
                             std::span<const EvaluationRecord> evaluations,
                             std::size_t n);

// Lexicographic cross-term position of pair (j, k), j < k.
std::size_t cross_term_index(std::size_t j, std::size_t k, std::size_t n);

}  // namespace anm
