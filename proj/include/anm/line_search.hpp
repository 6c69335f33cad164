#pragma once

#include <optional>
#include <span>

#include "anm/core.hpp"

namespace anm {

// Default requested step interval. Signed so the search can correct an
// overshot direction; the upper end covers the unit Newton step with room.
constexpr double kDefaultAlphaMin = -0.5;
constexpr double kDefaultAlphaMax = 2.0;

// A directional line x = origin + alpha * direction with the requested step
// interval [alpha_min, alpha_max].
struct LineSpec {
  Point origin;
  Point direction;
  double alpha_min = kDefaultAlphaMin;
  double alpha_max = kDefaultAlphaMax;
};

struct AlphaInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Intersects the requested interval with every box constraint along the
// line, so any alpha in the result lands in bounds. Returns nullopt when
// the request misses the feasible segment entirely (origin itself always
// admits alpha = 0, so this only happens for one-sided requests).
std::optional<AlphaInterval> clip_alpha(const LineSpec& line,
                                        const Bounds& bounds);

// origin + (lo + r * (hi - lo)) * direction, r in [0, 1).
Point sample_line(const LineSpec& line, const AlphaInterval& clipped, double r);

// Minimal fitness; ties go to the earliest arrival, then to the
// lexicographically smallest point.
const EvaluationRecord& select_best(std::span<const EvaluationRecord> results);

// Armijo backtracking from the clipped upper alpha bound, halving at most 50
// times. The curvature-free slope estimate comes from a forward directional
// difference. Returns x when no improving step is found.
Point backtracking_search(const ObjectiveSpec& objective, const Point& x,
                          const Point& direction, const Bounds& bounds);

}  // namespace anm
