#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "anm/core.hpp"
#include "anm/line_search.hpp"
#include "anm/regression.hpp"

namespace anm {

enum class Phase { kRegressing, kLineSearching, kConverged, kFailed };

const char* to_string(Phase phase);

// What a trace row describes: completion of a regression batch, completion
// of a line-search batch, or one synchronous baseline iteration.
enum class RowKind { kRegression, kLineSearch, kBaselineStep };

const char* to_string(RowKind kind);

struct TraceRow {
  std::size_t iteration = 0;  // 1-based
  RowKind kind = RowKind::kRegression;
  double best_fitness = 0.0;  // center fitness after this row's batch
  double avg_fitness = 0.0;   // mean fitness over the batch's results
  std::size_t cumulative_evals = 0;
  Point center;
};

// One line-search evaluation, keyed by its step multiplier. The per-seed
// scatter of these is the local-optimum-escape picture.
struct LineSample {
  std::size_t iteration = 0;
  double alpha = 0.0;
  double fitness = 0.0;
};

struct Trace {
  std::string objective_name;
  std::size_t dimension = 0;
  std::uint64_t objective_seed = 0;
  std::optional<double> f_star;
  std::string algorithm;
  std::size_t max_concurrency = 0;
  Phase final_phase = Phase::kFailed;
  double initial_fitness = 0.0;
  std::vector<TraceRow> rows;
  std::vector<LineSample> line_samples;
};

struct AnmConfig {
  std::size_t m_regress = 0;  // validated results per regression batch
  std::size_t m_line = 0;     // validated results per line-search batch
  StepVector step;
  double alpha_min = kDefaultAlphaMin;
  double alpha_max = kDefaultAlphaMax;
  double epsilon_rel = 1e-8;
  std::size_t stall_iterations = 3;
  std::size_t max_iterations = 100;
  std::uint64_t rng_seed = 0;
};

struct SearchState {
  Phase phase = Phase::kRegressing;
  std::size_t iteration = 0;
  Point center;
  double center_fitness = 0.0;
  std::optional<QuadraticModel> model;
  std::optional<LineSpec> line;
  std::vector<EvaluationRecord> pending;
};

enum class ConvergenceStatus { kContinue, kConverged, kFailed };

// Converged once the relative best-fitness improvement stays below
// epsilon_rel for stall_iterations consecutive iterations; Failed at
// max_iterations without that. `best_per_iteration` holds the center
// fitness after each completed iteration.
ConvergenceStatus check_convergence(std::span<const double> best_per_iteration,
                                    double initial_fitness,
                                    const AnmConfig& config);

// The ANM phase machine. Exactly one owner mutates it; backends deliver
// results in any order and any grouping through accept(). Points are matched
// to the current batch bit-exactly, so results for earlier phases
// (stragglers) are counted and dropped without touching the state.
class AnmDriver {
 public:
  AnmDriver(ObjectiveSpec objective, Point start, AnmConfig config);

  Phase phase() const { return state_.phase; }
  bool terminal() const {
    return state_.phase == Phase::kConverged || state_.phase == Phase::kFailed;
  }

  // Validated results still required to complete the current phase. Grows
  // past the configured quota only after a rank-deficient fit.
  std::size_t needed() const;

  // Draws `count` new points for the current phase: box samples around the
  // center while regressing, line samples along the Newton direction while
  // line searching. Callable any number of times per phase.
  std::vector<Point> plan(std::size_t count);

  // Feeds validated results in arrival order. Completes the phase once the
  // quota is met; surplus results delivered in the same call are consumed.
  void accept(std::span<const EvaluationRecord> validated);

  void mark_failed();

  const ObjectiveSpec& objective() const { return objective_; }
  const AnmConfig& config() const { return config_; }
  const SearchState& state() const { return state_; }
  std::size_t ignored_results() const { return ignored_; }

  const Trace& trace() const { return trace_; }
  Trace take_trace();

 private:
  void complete_regression();
  void complete_line_search();

  ObjectiveSpec objective_;
  AnmConfig config_;
  RngStream rng_;
  SearchState state_;
  Trace trace_;

  AlphaInterval clipped_{0.0, 0.0};
  std::size_t regress_target_ = 0;
  std::size_t cumulative_evals_ = 0;
  std::size_t ignored_ = 0;
  std::vector<double> best_per_iteration_;
  std::unordered_set<Point, PointBitsHash, PointBitsEqual> planned_;
  std::unordered_map<Point, double, PointBitsHash, PointBitsEqual> alpha_of_;
};

// Supplies evaluations for one phase of the driver. Returns false when it
// can make no further progress (virtual-time cap, deadlock); the caller then
// fails the search with a partial trace.
class EvaluationBackend {
 public:
  virtual ~EvaluationBackend() = default;
  virtual bool run_phase(AnmDriver& driver) = 0;
};

// In-process backend: evaluates every planned point immediately (OpenMP
// batch kernel) and returns results in plan order.
class DirectBackend : public EvaluationBackend {
 public:
  bool run_phase(AnmDriver& driver) override;
};

// Drives plan/accept cycles until a terminal phase and returns the trace.
Trace run_anm(const ObjectiveSpec& objective, const Point& start,
              const AnmConfig& config, EvaluationBackend& backend);

}  // namespace anm
