#include "anm/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace anm {

namespace {

// splitmix64, the usual seed-scrambling step.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

bool all_finite(const Point& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double x) { return std::isfinite(x); });
}

std::size_t PointBitsHash::operator()(const Point& p) const {
  std::uint64_t h = 0x243f6a8885a308d3ULL ^ p.size();
  for (double x : p) {
    h = splitmix64(h ^ std::bit_cast<std::uint64_t>(x));
  }
  return static_cast<std::size_t>(h);
}

bool PointBitsEqual::operator()(const Point& a, const Point& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i]))
      return false;
  }
  return true;
}

Bounds::Bounds(Point lo, Point hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size())
    throw std::invalid_argument("Bounds: lower/upper dimension mismatch");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i]))
      throw std::invalid_argument("Bounds: lower[i] must be < upper[i]");
  }
}

bool Bounds::contains(const Point& p) const {
  if (p.size() != lower.size())
    throw std::invalid_argument("Bounds::contains: dimension mismatch");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < lower[i] || p[i] > upper[i]) return false;
  }
  return true;
}

Bounds Bounds::uniform(std::size_t n, double lo, double hi) {
  return Bounds(Point(n, lo), Point(n, hi));
}

StepVector::StepVector(Point steps) : steps_(std::move(steps)) {
  for (double s : steps_) {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("StepVector: steps must be positive finite");
  }
}

StepVector StepVector::uniform(std::size_t n, double s) {
  return StepVector(Point(n, s));
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RngStream::next_u64() { return engine_(); }

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
  return a + uniform01() * (b - a);
}

std::size_t RngStream::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: n must be > 0");
  // Rejection-free modulo is biased for huge n; n here is worker counts and
  // sample sizes, far below 2^32, where the bias is immaterial.
  return static_cast<std::size_t>(next_u64() % n);
}

double RngStream::normal(double mean, double stddev) {
  // Box-Muller, cosine branch only, so one draw consumes exactly two u64s.
  double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  double u2 = uniform01();
  double z = std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

double RngStream::lognormal(double mu, double sigma) {
  return std::exp(normal(mu, sigma));
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
  double u = 1.0 - uniform01();  // (0, 1]
  return -std::log(u) / rate;
}

RngStream RngStream::fork(std::uint64_t stream_id) const {
  return RngStream(splitmix64(seed_ ^ splitmix64(stream_id + 1)));
}

Point sample_box(const Point& center, const StepVector& s, const Bounds& bounds,
                 RngStream& rng) {
  if (center.size() != s.size() || center.size() != bounds.size())
    throw std::invalid_argument("sample_box: dimension mismatch");
  if (!bounds.contains(center))
    throw std::invalid_argument("sample_box: center out of bounds");
  Point p(center.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    double lo = std::max(center[i] - s[i], bounds.lower[i]);
    double hi = std::min(center[i] + s[i], bounds.upper[i]);
    p[i] = rng.uniform(lo, hi);
  }
  return p;
}

}  // namespace anm
