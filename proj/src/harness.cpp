#include "regretlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "regretlab/problem.hpp"
#include "regretlab/random.hpp"

namespace regretlab {

void ExperimentSpec::validate() const {
  algorithm.validate();
  regret.validate();
  WindowSchedule schedule(regret);  // rejects exponents whose window edge never settles
  if (dimension == 0) throw std::invalid_argument("dim must be >= 1");
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
    throw std::invalid_argument("noise_std must be a finite nonnegative real");
  }
  if (budget < 100) throw std::invalid_argument("budget must be >= 100");
  if (replicates == 0) throw std::invalid_argument("replicates must be >= 1");
  if (checkpoints_per_decade == 0) throw std::invalid_argument("checkpoints_per_decade must be >= 1");
  if (!(window_fraction > 0.0 && window_fraction < 1.0)) {
    throw std::invalid_argument("window_fraction must lie in (0, 1)");
  }
}

std::size_t slope_window_lo(double fraction, std::size_t budget) {
  const double lo = std::ceil(fraction * static_cast<double>(budget) - 1e-9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(lo));
}

std::size_t ExperimentSpec::window_lo() const { return slope_window_lo(window_fraction, budget); }

std::vector<std::size_t> log_spaced_checkpoints(std::size_t budget, std::size_t per_decade) {
  if (budget < 1) throw std::invalid_argument("log_spaced_checkpoints: budget must be >= 1");
  if (per_decade == 0) throw std::invalid_argument("log_spaced_checkpoints: per_decade must be >= 1");
  std::vector<std::size_t> out;
  for (std::size_t i = 0;; ++i) {
    const double exponent = static_cast<double>(i) / static_cast<double>(per_decade);
    const double raw = std::round(std::pow(10.0, exponent));
    if (raw > static_cast<double>(budget)) break;
    const auto idx = static_cast<std::size_t>(raw);
    if (out.empty() || idx > out.back()) out.push_back(idx);
  }
  if (out.back() != budget) out.push_back(budget);
  return out;
}

const RegretSeries& ReplicateResult::series(RegretKind kind) const {
  switch (kind) {
    case RegretKind::sr:
      return sr;
    case RegretKind::asr:
      return asr;
    case RegretKind::rsr:
      return rsr;
  }
  throw std::logic_error("unknown regret kind");
}

void drive_optimizer(Optimizer& optimizer, NoisyBlackBox& box, std::size_t budget,
                     const EvaluationObserver& observe) {
  std::vector<double> values;
  std::size_t used = 0;
  while (used < budget) {
    const std::vector<Vector> batch = optimizer.ask(budget - used);
    if (batch.empty()) throw std::logic_error(optimizer.name() + " returned an empty batch");
    const std::size_t take = std::min(batch.size(), budget - used);
    const bool complete = take == batch.size();
    // Unchanged until tell(); only the last point of a complete batch sees the update.
    const Vector& before = optimizer.recommend();
    values.clear();
    for (std::size_t i = 0; i < take; ++i) {
      const double y = box.evaluate(batch[i]);
      values.push_back(y);
      ++used;
      if (complete && i + 1 == take) {
        optimizer.tell(values);
        observe(batch[i], y, optimizer.recommend());
      } else {
        observe(batch[i], y, before);
      }
    }
  }
}

RunTrace record_trace(Optimizer& optimizer, const ProblemInstance& problem, std::size_t budget,
                      std::uint64_t noise_seed) {
  NoisyBlackBox box(problem, noise_seed);
  RunTrace trace;
  drive_optimizer(optimizer, box, budget,
                  [&](const Vector& x, double y, const Vector& rec) { trace.append(x, y, rec); });
  return trace;
}

ReplicateResult run_single(const ExperimentSpec& spec, std::size_t replicate,
                           const RunOptions& options) {
  spec.validate();
  const std::uint64_t key = hash_label(spec.algorithm.label);
  const ProblemInstance problem = make_sphere_problem(
      spec.dimension, spec.noise_std,
      derive_seed(spec.master_seed, key, replicate, StreamRole::optimum));
  NoisyBlackBox box(problem, derive_seed(spec.master_seed, key, replicate, StreamRole::noise));
  auto optimizer =
      make_optimizer(spec.algorithm, spec.dimension,
                     derive_seed(spec.master_seed, key, replicate, StreamRole::algorithm),
                     spec.regret);

  const std::vector<std::size_t> checkpoints =
      log_spaced_checkpoints(spec.budget, spec.checkpoints_per_decade);
  const double f_star = true_value(problem, problem.optimum());

  ReplicateResult result;
  result.replicate = replicate;
  result.optimum = problem.optimum();
  AsrTracker asr;
  RsrTracker rsr(spec.regret);
  std::size_t n = 0;
  std::size_t next_checkpoint = 0;

  auto observe = [&](const Vector& x, double y, const Vector& rec) {
    ++n;
    const double search_regret = true_value(problem, x) - f_star;
    asr.push(search_regret);
    const double sr = true_value(problem, rec) - f_star;
    rsr.push(sr);
    if (n <= options.trace_prefix) result.prefix.append(x, y, rec);
    if (n == checkpoints[next_checkpoint]) {
      if (asr.value() > search_regret) {
        throw std::logic_error("ASR exceeds the current search-point regret");
      }
      result.sr.points.push_back({n, sr});
      result.asr.points.push_back({n, asr.value()});
      result.rsr.points.push_back({n, rsr.value()});
      if (auto sigma = optimizer->step_size()) {
        result.distance_over_step.push_back(distance(rec, problem.optimum()) / *sigma);
      }
      ++next_checkpoint;
    }
  };

  drive_optimizer(*optimizer, box, spec.budget, observe);

  result.evaluations = box.evaluations();
  if (result.evaluations != spec.budget) {
    throw std::logic_error("evaluation count differs from budget");
  }
  require_non_increasing(result.asr);
  require_non_increasing(result.rsr);
  return result;
}

std::string_view to_string(Aggregation aggregation) {
  return aggregation == Aggregation::mean ? "mean" : "median";
}

RegretSeries AggregatedSeries::as_series(Aggregation aggregation) const {
  const std::vector<double>& values = aggregation == Aggregation::mean ? mean : median;
  RegretSeries out{kind, {}};
  out.points.reserve(checkpoints.size());
  for (std::size_t i = 0; i < checkpoints.size(); ++i) out.points.push_back({checkpoints[i], values[i]});
  return out;
}

const AggregatedSeries& AggregateResult::of(RegretKind kind) const {
  return series[static_cast<std::size_t>(kind)];
}

std::optional<SlopeEstimate> AggregateResult::slope(RegretKind kind,
                                                    Aggregation aggregation) const {
  for (const SlopeRow& row : slopes) {
    if (row.kind == kind && row.aggregation == aggregation) return row.estimate;
  }
  return std::nullopt;
}

AggregateResult aggregate_runs(const std::vector<ReplicateResult>& replicates,
                               std::size_t window_lo, std::size_t window_hi) {
  if (replicates.empty()) throw std::invalid_argument("aggregate_runs: no replicates");
  AggregateResult out;
  constexpr std::array kinds{RegretKind::sr, RegretKind::asr, RegretKind::rsr};
  const auto count = static_cast<double>(replicates.size());
  std::vector<double> column(replicates.size());

  for (RegretKind kind : kinds) {
    AggregatedSeries& agg = out.series[static_cast<std::size_t>(kind)];
    agg.kind = kind;
    const RegretSeries& first = replicates.front().series(kind);
    for (const ReplicateResult& rep : replicates) {
      const RegretSeries& s = rep.series(kind);
      if (s.points.size() != first.points.size()) {
        throw std::invalid_argument("aggregate_runs: replicates have different checkpoints");
      }
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (s.points[i].n != first.points[i].n) {
          throw std::invalid_argument("aggregate_runs: replicates have different checkpoints");
        }
      }
    }
    for (std::size_t i = 0; i < first.points.size(); ++i) {
      double sum = 0.0;
      double log_sum = 0.0;
      for (std::size_t r = 0; r < replicates.size(); ++r) {
        const double v = replicates[r].series(kind).points[i].value;
        column[r] = v;
        sum += v;
        log_sum += std::log(std::max(v, kDefaultRegretFloor));
      }
      std::sort(column.begin(), column.end());
      const std::size_t mid = column.size() / 2;
      const double median =
          column.size() % 2 == 1 ? column[mid] : 0.5 * (column[mid - 1] + column[mid]);
      agg.checkpoints.push_back(first.points[i].n);
      agg.mean.push_back(sum / count);
      agg.median.push_back(median);
      agg.mean_log.push_back(std::exp(log_sum / count));
    }
    for (Aggregation a : {Aggregation::mean, Aggregation::median}) {
      try {
        out.slopes.push_back({kind, a, estimate_slope(agg.as_series(a), window_lo, window_hi)});
      } catch (const std::invalid_argument&) {
        // Window too narrow for this budget; no slope row.
      }
    }
  }
  return out;
}

const RunResult* SuiteResult::find(std::string_view label) const {
  for (const RunResult& run : runs) {
    if (run.spec.algorithm.label == label) return &run;
  }
  return nullptr;
}

SuiteResult run_suite(const std::vector<ExperimentSpec>& specs, std::size_t threads,
                      const RunOptions& options) {
  struct Task {
    std::size_t spec;
    std::size_t replicate;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<ReplicateResult>> replicates(specs.size());
  std::vector<std::string> errors(specs.size());
  for (std::size_t s = 0; s < specs.size(); ++s) {
    try {
      specs[s].validate();
    } catch (const std::exception& e) {
      errors[s] = e.what();
      continue;
    }
    replicates[s].resize(specs[s].replicates);
    for (std::size_t r = 0; r < specs[s].replicates; ++r) tasks.push_back({s, r});
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task task = tasks[t];
      try {
        replicates[task.spec][task.replicate] = run_single(specs[task.spec], task.replicate, options);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (errors[task.spec].empty()) errors[task.spec] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  SuiteResult out;
  for (std::size_t s = 0; s < specs.size(); ++s) {
    if (errors[s].empty()) {
      try {
        RunResult run{specs[s], std::move(replicates[s]), {}};
        run.aggregate = aggregate_runs(run.replicates, specs[s].window_lo(), specs[s].budget);
        out.runs.push_back(std::move(run));
        continue;
      } catch (const std::exception& e) {
        errors[s] = e.what();
      }
    }
    out.failures.push_back({specs[s].algorithm.label, errors[s]});
  }
  return out;
}

std::vector<ExperimentSpec> fig1_suite(std::uint64_t master_seed, std::size_t budget) {
  auto make = [&](std::string label, AlgorithmParams params) {
    ExperimentSpec spec;
    spec.suite_id = std::string(kFig1SuiteId);
    spec.algorithm = {std::move(label), std::move(params), std::nullopt, false};
    spec.dimension = 2;
    spec.noise_std = 0.3;
    spec.budget = budget;
    spec.replicates = 10;
    spec.master_seed = master_seed;
    return spec;
  };
  EsConfig resampled;
  resampled.schedule = ResamplingSchedule::exponential(1.0, 2.0);
  return {
      make("random_search", RandomSearchConfig{}),
      make("es", EsConfig{}),
      make("es_resamp", resampled),
      make("shamir", ShamirConfig{0.3, 0.1, 3.0}),
      make("fabian", FabianConfig{4, 1.0, 1.0, 1.0, 0.01}),
  };
}

}  // namespace regretlab
