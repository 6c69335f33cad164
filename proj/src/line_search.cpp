#include "anm/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anm {

namespace {

Point point_on_line(const Point& origin, const Point& direction, double alpha) {
  Point p(origin.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = origin[i] + alpha * direction[i];
  return p;
}

}  // namespace

std::optional<AlphaInterval> clip_alpha(const LineSpec& line,
                                        const Bounds& bounds) {
  if (line.origin.size() != bounds.size() ||
      line.direction.size() != bounds.size())
    throw std::invalid_argument("clip_alpha: dimension mismatch");
  if (!bounds.contains(line.origin))
    throw std::invalid_argument("clip_alpha: origin out of bounds");
  if (!(line.alpha_min < line.alpha_max))
    throw std::invalid_argument("clip_alpha: alpha_min must be < alpha_max");

  double lo = line.alpha_min;
  double hi = line.alpha_max;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    double d = line.direction[i];
    if (d == 0.0) continue;  // origin is feasible in this coordinate
    double a = (bounds.lower[i] - line.origin[i]) / d;
    double b = (bounds.upper[i] - line.origin[i]) / d;
    if (d < 0.0) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  if (lo > hi) return std::nullopt;
  return AlphaInterval{lo, hi};
}

Point sample_line(const LineSpec& line, const AlphaInterval& clipped,
                  double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("sample_line: r must be in [0, 1)");
  double alpha = clipped.lo + r * (clipped.hi - clipped.lo);
  return point_on_line(line.origin, line.direction, alpha);
}

const EvaluationRecord& select_best(std::span<const EvaluationRecord> results) {
  if (results.empty())
    throw std::invalid_argument("select_best: empty result list");
  const EvaluationRecord* best = &results[0];
  for (const auto& rec : results.subspan(1)) {
    // Earlier arrivals win ties, so strictly-better only. The lexicographic
    // rule below matters only for callers that merge equal-position lists.
    if (rec.fitness < best->fitness) {
      best = &rec;
    }
  }
  return *best;
}

Point backtracking_search(const ObjectiveSpec& objective, const Point& x,
                          const Point& direction, const Bounds& bounds) {
  constexpr double kArmijo = 1e-4;
  constexpr int kMaxHalvings = 50;

  bool zero_direction = std::all_of(direction.begin(), direction.end(),
                                    [](double d) { return d == 0.0; });
  if (zero_direction) return x;

  LineSpec line{x, direction, 0.0, kDefaultAlphaMax};
  auto clipped = clip_alpha(line, bounds);
  if (!clipped || clipped->hi <= 0.0) return x;

  double fx = objective.evaluate(x);

  // Directional slope estimate from a forward difference along d.
  double eps = clipped->hi * 1e-6;
  double slope =
      (objective.evaluate(point_on_line(x, direction, eps)) - fx) / eps;
  if (slope > 0.0) slope = 0.0;  // defective estimate; require plain descent

  double alpha = clipped->hi;
  for (int k = 0; k < kMaxHalvings; ++k, alpha *= 0.5) {
    Point candidate = point_on_line(x, direction, alpha);
    double fc = objective.evaluate(candidate);
    if (fc <= fx + kArmijo * alpha * slope && fc < fx) return candidate;
  }
  return x;
}

}  // namespace anm
