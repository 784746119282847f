#include "regretlab/regret.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regretlab {

std::string_view to_string(RegretKind kind) {
  switch (kind) {
    case RegretKind::sr:
      return "SR";
    case RegretKind::asr:
      return "ASR";
    case RegretKind::rsr:
      return "RSR";
  }
  return "?";
}

double RegretSeries::value_at(std::size_t n) const {
  auto it = std::lower_bound(points.begin(), points.end(), n,
                             [](const RegretPoint& p, std::size_t idx) { return p.n < idx; });
  if (it == points.end() || it->n != n) {
    throw std::out_of_range("no regret value at index " + std::to_string(n));
  }
  return it->value;
}

void require_non_increasing(const RegretSeries& series) {
  for (std::size_t i = 1; i < series.points.size(); ++i) {
    if (series.points[i].value > series.points[i - 1].value) {
      throw std::logic_error(std::string(to_string(series.kind)) + " series increases at index " +
                             std::to_string(series.points[i].n));
    }
  }
}

RsrTracker::RsrTracker(const RegretConfig& config)
    : schedule_(config), quantile_(config.quantile), use_max_(config.quantile == 1.0) {}

void RsrTracker::push(double simple_regret) {
  ++k_;
  const std::size_t lo = schedule_.lower(k_);
  const std::size_t keep_from = schedule_.earliest_needed(k_);
  double window_value = 0.0;

  if (use_max_) {
    // Dominated entries are older and no larger than the new one; every later window that
    // contains them also contains k_.
    while (!monotone_.empty() && monotone_.back().value <= simple_regret) monotone_.pop_back();
    monotone_.push_back({k_, simple_regret});
    auto first = std::partition_point(monotone_.begin(), monotone_.end(),
                                      [lo](const Entry& e) { return e.index < lo; });
    window_value = first->value;
    while (monotone_.front().index < keep_from) monotone_.pop_front();
  } else {
    recent_.push_back(simple_regret);
    const std::size_t offset = lo - recent_start_;
    scratch_.assign(recent_.begin() + static_cast<std::ptrdiff_t>(offset), recent_.end());
    const std::size_t rank = quantile_rank(quantile_, scratch_.size());
    std::nth_element(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                     scratch_.end());
    window_value = scratch_[rank - 1];
    while (recent_start_ < keep_from) {
      recent_.pop_front();
      ++recent_start_;
    }
  }
  if (window_value < best_) best_ = window_value;
}

double simple_regret(const ProblemInstance& problem, const RunTrace& trace, std::size_t n) {
  const Vector& rec = trace.recommendation(n);
  return true_value(problem, rec) - true_value(problem, problem.optimum());
}

RegretSeries sr_series(const ProblemInstance& problem, const RunTrace& trace) {
  RegretSeries series{RegretKind::sr, {}};
  series.points.reserve(trace.size());
  for (std::size_t n = 1; n <= trace.size(); ++n) {
    series.points.push_back({n, simple_regret(problem, trace, n)});
  }
  return series;
}

RegretSeries asr_stream(const ProblemInstance& problem, const RunTrace& trace) {
  if (trace.empty()) throw std::invalid_argument("asr_stream: empty trace");
  const double f_star = true_value(problem, problem.optimum());
  RegretSeries series{RegretKind::asr, {}};
  series.points.reserve(trace.size());
  AsrTracker tracker;
  for (const EvaluationRecord& rec : trace.evaluations()) {
    tracker.push(true_value(problem, rec.search_point) - f_star);
    series.points.push_back({rec.index, tracker.value()});
  }
  require_non_increasing(series);
  return series;
}

double asr(const ProblemInstance& problem, const RunTrace& trace, std::size_t n) {
  if (n == 0 || n > trace.size()) throw std::out_of_range("asr: index outside trace");
  const double f_star = true_value(problem, problem.optimum());
  AsrTracker tracker;
  for (std::size_t m = 1; m <= n; ++m) {
    tracker.push(true_value(problem, trace.evaluation(m).search_point) - f_star);
  }
  return tracker.value();
}

RegretSeries rsr_from_simple_regrets(std::span<const double> simple_regrets,
                                     const RegretConfig& config) {
  if (simple_regrets.empty()) throw std::invalid_argument("rsr: empty trace");
  RegretSeries series{RegretKind::rsr, {}};
  series.points.reserve(simple_regrets.size());
  RsrTracker tracker(config);
  for (double sr : simple_regrets) {
    tracker.push(sr);
    series.points.push_back({tracker.count(), tracker.value()});
  }
  require_non_increasing(series);
  return series;
}

RegretSeries rsr_oracle_from_simple_regrets(std::span<const double> simple_regrets,
                                            const RegretConfig& config) {
  config.validate();
  if (simple_regrets.empty()) throw std::invalid_argument("rsr_oracle: empty trace");
  RegretSeries series{RegretKind::rsr, {}};
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> window;
  for (std::size_t k = 1; k <= simple_regrets.size(); ++k) {
    const std::size_t g =
        config.constant_window ? *config.constant_window : default_g(k, config.g_exponent);
    window.clear();
    // m ranges over (k - g, k], clamped to start at 1.
    const std::size_t first = k > g ? k - g + 1 : 1;
    for (std::size_t m = first; m <= k; ++m) window.push_back(simple_regrets[m - 1]);
    std::sort(window.begin(), window.end());
    const double q_value = window[quantile_rank(config.quantile, window.size()) - 1];
    best = std::min(best, q_value);
    series.points.push_back({k, best});
  }
  return series;
}

namespace {

std::vector<double> simple_regret_values(const ProblemInstance& problem, const RunTrace& trace) {
  std::vector<double> values;
  values.reserve(trace.size());
  for (std::size_t n = 1; n <= trace.size(); ++n) values.push_back(simple_regret(problem, trace, n));
  return values;
}

}  // namespace

RegretSeries rsr_stream(const ProblemInstance& problem, const RunTrace& trace,
                        const RegretConfig& config) {
  return rsr_from_simple_regrets(simple_regret_values(problem, trace), config);
}

RegretSeries rsr_oracle(const ProblemInstance& problem, const RunTrace& trace,
                        const RegretConfig& config) {
  return rsr_oracle_from_simple_regrets(simple_regret_values(problem, trace), config);
}

}  // namespace regretlab
