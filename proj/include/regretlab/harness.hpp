#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regretlab/algorithm.hpp"
#include "regretlab/problem.hpp"
#include "regretlab/regret.hpp"
#include "regretlab/slope.hpp"
#include "regretlab/trace.hpp"

namespace regretlab {

/// One (algorithm x problem) experiment run to a fixed evaluation budget.
struct ExperimentSpec {
  std::string suite_id = "custom";
  AlgorithmSpec algorithm;
  std::size_t dimension = 2;
  double noise_std = 0.3;
  std::size_t budget = 1'000'000;
  std::size_t replicates = 10;
  std::uint64_t master_seed = 1;
  std::size_t checkpoints_per_decade = 20;
  RegretConfig regret;
  // Slopes are fitted over checkpoints in [window_fraction * budget, budget].
  double window_fraction = 0.01;

  void validate() const;
  std::size_t window_lo() const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

/// ceil(fraction * budget), at least 1.
std::size_t slope_window_lo(double fraction, std::size_t budget);

/// Sorted, duplicate-free, roughly geometric indices with `per_decade` points per factor of
/// ten; always contains 1 and `budget`.
std::vector<std::size_t> log_spaced_checkpoints(std::size_t budget, std::size_t per_decade);

struct ReplicateResult {
  std::size_t replicate = 0;
  Vector optimum;
  std::size_t evaluations = 0;
  RegretSeries sr{RegretKind::sr, {}};
  RegretSeries asr{RegretKind::asr, {}};
  RegretSeries rsr{RegretKind::rsr, {}};
  // ||x~_n - x*|| / sigma_n at each checkpoint, for optimizers exposing a step size.
  std::vector<double> distance_over_step;
  // First RunOptions::trace_prefix evaluations, kept for self-checks.
  RunTrace prefix;

  const RegretSeries& series(RegretKind kind) const;
};

using EvaluationObserver =
    std::function<void(const Vector& search_point, double noisy_value, const Vector& recommendation)>;

/// Runs `optimizer` for exactly `budget` evaluations of `box`. Within a batch every point is
/// reported with the recommendation from before the batch, except the last point of a
/// complete batch, which sees the recommendation after tell(). A batch cut short by the
/// budget is never told.
void drive_optimizer(Optimizer& optimizer, NoisyBlackBox& box, std::size_t budget,
                     const EvaluationObserver& observe);

/// Full trace of `budget` evaluations under drive_optimizer.
RunTrace record_trace(Optimizer& optimizer, const ProblemInstance& problem, std::size_t budget,
                      std::uint64_t noise_seed);

struct RunOptions {
  std::size_t trace_prefix = 0;
};

/// Runs replicate `replicate` of `spec`. Deterministic in (master seed, label, replicate).
ReplicateResult run_single(const ExperimentSpec& spec, std::size_t replicate,
                           const RunOptions& options = {});

enum class Aggregation { mean, median };

std::string_view to_string(Aggregation aggregation);

struct AggregatedSeries {
  RegretKind kind = RegretKind::sr;
  std::vector<std::size_t> checkpoints;
  std::vector<double> mean;
  std::vector<double> median;
  // exp(mean(log(max(value, floor)))): mean taken over log-regrets.
  std::vector<double> mean_log;

  RegretSeries as_series(Aggregation aggregation) const;
};

struct SlopeRow {
  RegretKind kind;
  Aggregation aggregation;
  SlopeEstimate estimate;
};

struct AggregateResult {
  std::array<AggregatedSeries, 3> series;  // SR, ASR, RSR
  std::vector<SlopeRow> slopes;            // fits that had enough points

  const AggregatedSeries& of(RegretKind kind) const;
  std::optional<SlopeEstimate> slope(RegretKind kind, Aggregation aggregation) const;
};

/// Per-checkpoint mean/median across replicates and least-squares slopes over
/// [window_lo, window_hi]. All replicates must share checkpoint indices.
AggregateResult aggregate_runs(const std::vector<ReplicateResult>& replicates,
                               std::size_t window_lo, std::size_t window_hi);

struct RunResult {
  ExperimentSpec spec;
  std::vector<ReplicateResult> replicates;
  AggregateResult aggregate;
};

struct SpecFailure {
  std::string label;
  std::string message;
};

struct SuiteResult {
  std::vector<RunResult> runs;
  std::vector<SpecFailure> failures;

  const RunResult* find(std::string_view label) const;
};

/// Runs every replicate of every spec on `threads` workers (0 = hardware concurrency).
/// A failing spec is reported in `failures` and does not stop the others.
SuiteResult run_suite(const std::vector<ExperimentSpec>& specs, std::size_t threads = 1,
                      const RunOptions& options = {});

/// Built-in reproduction suite: random search, (1+1)-ES, (1+1)-ES with 2^n resampling,
/// Shamir and Fabian on the 2-d noisy sphere with noise 0.3 and 10 replicates.
std::vector<ExperimentSpec> fig1_suite(std::uint64_t master_seed = 1,
                                       std::size_t budget = 1'000'000);

inline constexpr std::string_view kFig1SuiteId = "fig1";

}  // namespace regretlab
