#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anm {

// A position in the n-dimensional search space. Coordinates are plain
// doubles; all containment and cache lookups treat them bit-exactly.
using Point = std::vector<double>;

bool all_finite(const Point& p);

// Hash/equality over the exact bit patterns of the coordinates. Used by the
// evaluation cache and by the driver to match returned results to planned
// points. Note -0.0 != 0.0 under this comparison, which is intentional.
struct PointBitsHash {
  std::size_t operator()(const Point& p) const;
};
struct PointBitsEqual {
  bool operator()(const Point& a, const Point& b) const;
};

// Box constraints: lower[i] < upper[i] for all i.
struct Bounds {
  Point lower;
  Point upper;

  Bounds() = default;
  Bounds(Point lo, Point hi);

  std::size_t size() const { return lower.size(); }
  bool contains(const Point& p) const;

  // Uniform box of side [lo, hi] in every coordinate.
  static Bounds uniform(std::size_t n, double lo, double hi);
};

// Per-coordinate sampling radii; also the finite-difference stencil widths.
// All entries strictly positive.
class StepVector {
 public:
  StepVector() = default;
  explicit StepVector(Point steps);
  static StepVector uniform(std::size_t n, double s);

  double operator[](std::size_t i) const { return steps_[i]; }
  std::size_t size() const { return steps_.size(); }
  const Point& values() const { return steps_; }

 private:
  Point steps_;
};

// Origin of an evaluation result. Worker ids only apply to grid results.
enum class EvalSource { kOracle, kWorker };

struct EvaluationRecord {
  Point point;
  double fitness = 0.0;
  EvalSource source = EvalSource::kOracle;
  int worker_id = -1;
};

// Deterministic seeded random stream. The raw 64-bit sequence is fully
// specified by the standard (mt19937_64), so identical seeds give identical
// draws on every platform. Distributions are implemented here instead of
// with std::*_distribution, whose output is implementation-defined.
//
// A stream has a single owner. Concurrent consumers fork child streams.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on [a, b); degenerate a == b returns a.
  double uniform(double a, double b);
  std::size_t uniform_index(std::size_t n);

  double normal(double mean, double stddev);
  double lognormal(double mu, double sigma);
  double exponential(double rate);

  // Derives an independent child stream. Distinct ids give (with
  // overwhelming probability) non-overlapping sequences.
  RngStream fork(std::uint64_t stream_id) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// An objective to minimize. `evaluate` must be pure and deterministic:
// the same point always yields the bit-identical fitness, and every
// in-bounds point yields a finite value.
struct ObjectiveSpec {
  std::string name;
  std::size_t dimension = 0;
  Bounds bounds;
  std::function<double(const Point&)> evaluate;
  // Optional, for tests only.
  std::function<Point(const Point&)> analytic_gradient;
  std::optional<std::pair<Point, double>> known_minimum;
  // Virtual seconds one evaluation costs on a unit-speed worker.
  double simulated_cost = 1.0;

  // For quadratic_spd the generator keeps its exact Hessian and linear term
  // around so tests can compare recovered derivatives against them.
  std::optional<std::vector<double>> generator_hessian;  // row-major n*n
  std::optional<Point> generator_linear;
};

// Benchmark suite. Names: sphere, quadratic_spd, rosenbrock, rastrigin,
// double_well (n = 1 only). quadratic_spd uses `generator_seed` to fix a
// random SPD quadratic with condition number 1e3.
ObjectiveSpec make_benchmark(const std::string& name, std::size_t n,
                             std::uint64_t generator_seed = 0);

std::vector<std::string> benchmark_names();

// One point drawn coordinate-wise uniformly from
// [center[i] - s[i], center[i] + s[i]] intersected with the bounds.
Point sample_box(const Point& center, const StepVector& s, const Bounds& bounds,
                 RngStream& rng);

}  // namespace anm
