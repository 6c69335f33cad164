#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <numbers>

#include "anm/core.hpp"

namespace anm {

namespace {

constexpr double kSpdConditionNumber = 1e3;

double sphere_eval(const Point& x) {
  double f = 0.0;
  for (double xi : x) f += xi * xi;
  return f;
}

double rosenbrock_eval(const Point& x) {
  double f = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double a = x[i + 1] - x[i] * x[i];
    double b = 1.0 - x[i];
    f += 100.0 * a * a + b * b;
  }
  return f;
}

Point rosenbrock_grad(const Point& x) {
  Point g(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double a = x[i + 1] - x[i] * x[i];
    g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
    g[i + 1] += 200.0 * a;
  }
  return g;
}

double rastrigin_eval(const Point& x) {
  double f = 10.0 * static_cast<double>(x.size());
  for (double xi : x)
    f += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
  return f;
}

Point rastrigin_grad(const Point& x) {
  Point g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    g[i] = 2.0 * x[i] +
           20.0 * std::numbers::pi * std::sin(2.0 * std::numbers::pi * x[i]);
  return g;
}

double double_well_eval(const Point& x) {
  double a = x[0] * x[0] - 1.0;
  return a * a + 0.2 * x[0];
}

// Stationary points solve 4x^3 - 4x + 0.2 = 0; the deep minimum sits left
// of -1. Newton refinement from -1 converges to machine precision.
double double_well_deep_minimizer() {
  double x = -1.0;
  for (int k = 0; k < 60; ++k) {
    double fp = 4.0 * x * x * x - 4.0 * x + 0.2;
    double fpp = 12.0 * x * x - 4.0;
    x -= fp / fpp;
  }
  return x;
}

// Quadratic with fixed random SPD Hessian: f(x) = 0.5 x'Hx + g'x + c.
// Spectrum is pinned to [1, kSpdConditionNumber] so the condition number is
// exact, the minimizer is drawn inside [-1, 1]^n, and the bounds leave it a
// wide margin.
struct SpdQuadratic {
  std::size_t n;
  std::vector<double> hessian;  // row-major
  Point linear;
  double constant;

  double eval(const Point& x) const {
    double quad = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double hx = 0.0;
      for (std::size_t j = 0; j < n; ++j) hx += hessian[i * n + j] * x[j];
      quad += x[i] * hx;
    }
    double lin = 0.0;
    for (std::size_t i = 0; i < n; ++i) lin += linear[i] * x[i];
    return 0.5 * quad + lin + constant;
  }

  Point grad(const Point& x) const {
    Point g(n);
    for (std::size_t i = 0; i < n; ++i) {
      double hx = 0.0;
      for (std::size_t j = 0; j < n; ++j) hx += hessian[i * n + j] * x[j];
      g[i] = hx + linear[i];
    }
    return g;
  }
};

ObjectiveSpec make_quadratic_spd(std::size_t n, std::uint64_t seed) {
  RngStream rng(RngStream(seed).fork(0x5bd1u).seed());

  Eigen::MatrixXd gauss(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gauss(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rng.normal(0.0, 1.0);
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(gauss).householderQ();

  Eigen::VectorXd lambda(n);
  lambda(0) = 1.0;
  if (n > 1) lambda(static_cast<Eigen::Index>(n - 1)) = kSpdConditionNumber;
  for (std::size_t i = 1; i + 1 < n; ++i)
    lambda(static_cast<Eigen::Index>(i)) =
        std::exp(rng.uniform(0.0, std::log(kSpdConditionNumber)));

  Eigen::MatrixXd h = q * lambda.asDiagonal() * q.transpose();
  h = 0.5 * (h + h.transpose()).eval();  // exact symmetry

  auto spd = std::make_shared<SpdQuadratic>();
  spd->n = n;
  spd->hessian.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      spd->hessian[i * n + j] =
          h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  Point minimizer(n);
  for (std::size_t i = 0; i < n; ++i) minimizer[i] = rng.uniform(-1.0, 1.0);

  spd->linear.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double hx = 0.0;
    for (std::size_t j = 0; j < n; ++j) hx += spd->hessian[i * n + j] * minimizer[j];
    spd->linear[i] = -hx;
  }

  double fstar = rng.uniform(0.5, 2.0);
  double quad_at_min = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double hx = 0.0;
    for (std::size_t j = 0; j < n; ++j) hx += spd->hessian[i * n + j] * minimizer[j];
    quad_at_min += minimizer[i] * hx;
  }
  spd->constant = fstar + 0.5 * quad_at_min;

  ObjectiveSpec spec;
  spec.name = "quadratic_spd";
  spec.dimension = n;
  spec.bounds = Bounds::uniform(n, -5.0, 5.0);
  spec.evaluate = [spd](const Point& x) { return spd->eval(x); };
  spec.analytic_gradient = [spd](const Point& x) { return spd->grad(x); };
  spec.known_minimum = {minimizer, spec.evaluate(minimizer)};
  spec.generator_hessian = spd->hessian;
  spec.generator_linear = spd->linear;
  return spec;
}

}  // namespace

std::vector<std::string> benchmark_names() {
  return {"sphere", "quadratic_spd", "rosenbrock", "rastrigin", "double_well"};
}

ObjectiveSpec make_benchmark(const std::string& name, std::size_t n,
                             std::uint64_t generator_seed) {
  if (n == 0) throw std::invalid_argument("make_benchmark: dimension must be >= 1");

  ObjectiveSpec spec;
  spec.name = name;
  spec.dimension = n;

  if (name == "sphere") {
    spec.bounds = Bounds::uniform(n, -10.0, 10.0);
    spec.evaluate = sphere_eval;
    spec.analytic_gradient = [](const Point& x) {
      Point g(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * x[i];
      return g;
    };
    spec.known_minimum = {Point(n, 0.0), 0.0};
    return spec;
  }
  if (name == "quadratic_spd") {
    return make_quadratic_spd(n, generator_seed);
  }
  if (name == "rosenbrock") {
    if (n < 2)
      throw std::invalid_argument("make_benchmark: rosenbrock requires n >= 2");
    spec.bounds = Bounds::uniform(n, -5.0, 10.0);
    spec.evaluate = rosenbrock_eval;
    spec.analytic_gradient = rosenbrock_grad;
    spec.known_minimum = {Point(n, 1.0), 0.0};
    return spec;
  }
  if (name == "rastrigin") {
    spec.bounds = Bounds::uniform(n, -5.12, 5.12);
    spec.evaluate = rastrigin_eval;
    spec.analytic_gradient = rastrigin_grad;
    spec.known_minimum = {Point(n, 0.0), 0.0};
    return spec;
  }
  if (name == "double_well") {
    if (n != 1)
      throw std::invalid_argument("make_benchmark: double_well requires n = 1");
    spec.bounds = Bounds::uniform(1, -2.0, 2.0);
    spec.evaluate = double_well_eval;
    spec.analytic_gradient = [](const Point& x) {
      return Point{4.0 * x[0] * x[0] * x[0] - 4.0 * x[0] + 0.2};
    };
    Point deep{double_well_deep_minimizer()};
    spec.known_minimum = {deep, double_well_eval(deep)};
    return spec;
  }
  throw std::invalid_argument("make_benchmark: unknown objective '" + name +
                              "' (known: sphere, quadratic_spd, rosenbrock, "
                              "rastrigin, double_well)");
}

}  // namespace anm
