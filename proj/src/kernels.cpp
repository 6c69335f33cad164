#include "anm/kernels.hpp"

#include <cstdint>
#include <stdexcept>

namespace anm {

void eval_batch_serial(const ObjectiveSpec& objective,
                       std::span<const Point> points, std::span<double> out) {
  if (points.size() != out.size())
    throw std::invalid_argument("eval_batch: output size mismatch");
  for (std::size_t i = 0; i < points.size(); ++i)
    out[i] = objective.evaluate(points[i]);
}

void eval_batch(const ObjectiveSpec& objective, std::span<const Point> points,
                std::span<double> out) {
  if (points.size() != out.size())
    throw std::invalid_argument("eval_batch: output size mismatch");
#ifdef _OPENMP
  const std::int64_t m = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i)
    out[static_cast<std::size_t>(i)] =
        objective.evaluate(points[static_cast<std::size_t>(i)]);
#else
  eval_batch_serial(objective, points, out);
#endif
}

std::vector<EvaluationRecord> eval_records(const ObjectiveSpec& objective,
                                           std::span<const Point> points) {
  std::vector<double> fitness(points.size());
  eval_batch(objective, points, fitness);
  std::vector<EvaluationRecord> records(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    records[i].point = points[i];
    records[i].fitness = fitness[i];
    records[i].source = EvalSource::kOracle;
  }
  return records;
}

std::size_t quadratic_basis_size(std::size_t n) {
  return 1 + 2 * n + n * (n - 1) / 2;
}

void fill_design_row(std::span<const double> delta, std::span<double> row) {
  const std::size_t n = delta.size();
  if (row.size() != quadratic_basis_size(n))
    throw std::invalid_argument("fill_design_row: row size mismatch");
  row[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) row[1 + j] = delta[j];
  for (std::size_t j = 0; j < n; ++j) row[1 + n + j] = 0.5 * delta[j] * delta[j];
  std::size_t c = 1 + 2 * n;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) row[c++] = delta[j] * delta[k];
}

void build_design_serial(std::span<const Point> deltas, std::size_t n,
                         std::span<double> out) {
  const std::size_t cols = quadratic_basis_size(n);
  if (out.size() != deltas.size() * cols)
    throw std::invalid_argument("build_design: output size mismatch");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i].size() != n)
      throw std::invalid_argument("build_design: delta dimension mismatch");
    fill_design_row(deltas[i], out.subspan(i * cols, cols));
  }
}

void build_design(std::span<const Point> deltas, std::size_t n,
                  std::span<double> out) {
  const std::size_t cols = quadratic_basis_size(n);
  if (out.size() != deltas.size() * cols)
    throw std::invalid_argument("build_design: output size mismatch");
  for (const Point& d : deltas)
    if (d.size() != n)
      throw std::invalid_argument("build_design: delta dimension mismatch");
#ifdef _OPENMP
  const std::int64_t m = static_cast<std::int64_t>(deltas.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    auto idx = static_cast<std::size_t>(i);
    fill_design_row(deltas[idx], out.subspan(idx * cols, cols));
  }
#else
  build_design_serial(deltas, n, out);
#endif
}

}  // namespace anm
