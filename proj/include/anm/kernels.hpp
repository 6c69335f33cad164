#pragma once

#include <span>
#include <vector>

#include "anm/core.hpp"

namespace anm {

// Data-parallel inner loops: evaluating a batch of scattered points and
// assembling the quadratic design matrix. Each has an OpenMP version and a
// serial reference; both write every output slot independently from its
// inputs alone, so the parallel results are bit-identical to the serial
// ones regardless of thread count.

void eval_batch_serial(const ObjectiveSpec& objective,
                       std::span<const Point> points, std::span<double> out);

// OpenMP over the points. Falls back to the serial loop when built
// without OpenMP.
void eval_batch(const ObjectiveSpec& objective, std::span<const Point> points,
                std::span<double> out);

std::vector<EvaluationRecord> eval_records(const ObjectiveSpec& objective,
                                           std::span<const Point> points);

// Row count of the quadratic basis: 1 + 2n + n(n-1)/2.
std::size_t quadratic_basis_size(std::size_t n);

// Fills row r of the design matrix for offset delta:
// [1, d_0..d_{n-1}, d_0^2/2..d_{n-1}^2/2, d_j*d_k for j < k in lex order].
void fill_design_row(std::span<const double> delta, std::span<double> row);

// row_major out has shape m x quadratic_basis_size(n).
void build_design_serial(std::span<const Point> deltas, std::size_t n,
                         std::span<double> out);
void build_design(std::span<const Point> deltas, std::size_t n,
                  std::span<double> out);

}  // namespace anm
