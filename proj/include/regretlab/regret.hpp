#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "regretlab/problem.hpp"
#include "regretlab/regret_config.hpp"
#include "regretlab/trace.hpp"

namespace regretlab {

enum class RegretKind { sr, asr, rsr };

std::string_view to_string(RegretKind kind);

struct RegretPoint {
  std::size_t n = 0;
  double value = 0.0;

  friend bool operator==(const RegretPoint&, const RegretPoint&) = default;
};

/// (evaluation index, regret) pairs with strictly increasing indices.
struct RegretSeries {
  RegretKind kind = RegretKind::sr;
  std::vector<RegretPoint> points;

  /// Value at evaluation index n; throws std::out_of_range when n is not in the series.
  double value_at(std::size_t n) const;
  std::size_t size() const { return points.size(); }
};

/// Throws std::logic_error if values increase anywhere (ASR and RSR must never do so).
void require_non_increasing(const RegretSeries& series);

/// Running minimum, O(1) per observation.
class AsrTracker {
 public:
  void push(double regret) {
    if (regret < best_) best_ = regret;
  }
  double value() const { return best_; }

 private:
  double best_ = std::numeric_limits<double>::infinity();
};

/// Streaming robust simple regret: min over k of the q-quantile of the simple regrets in the
/// window ending at k. Uses a monotone deque for q = 1 and a bounded ring of recent values
/// otherwise; results are bit-identical to the direct definition.
class RsrTracker {
 public:
  explicit RsrTracker(const RegretConfig& config);

  void push(double simple_regret);
  double value() const { return best_; }
  std::size_t count() const { return k_; }

 private:
  struct Entry {
    std::size_t index;
    double value;
  };

  WindowSchedule schedule_;
  double quantile_;
  bool use_max_;
  std::size_t k_ = 0;
  double best_ = std::numeric_limits<double>::infinity();
  std::deque<Entry> monotone_;     // q == 1: decreasing values, increasing indices
  std::deque<double> recent_;      // q < 1: values from recent_start_ to k_
  std::size_t recent_start_ = 1;
  std::vector<double> scratch_;
};

/// F(x~_n) - F(x*) for the n-th recommendation of the trace (1-based).
double simple_regret(const ProblemInstance& problem, const RunTrace& trace, std::size_t n);

/// SR at every index of the trace.
RegretSeries sr_series(const ProblemInstance& problem, const RunTrace& trace);

/// ASR at every index of the trace.
RegretSeries asr_stream(const ProblemInstance& problem, const RunTrace& trace);
double asr(const ProblemInstance& problem, const RunTrace& trace, std::size_t n);

/// RSR at every index, computed with RsrTracker.
RegretSeries rsr_stream(const ProblemInstance& problem, const RunTrace& trace,
                        const RegretConfig& config);

/// RSR at every index by direct nested loops over the definition; reference for tests.
RegretSeries rsr_oracle(const ProblemInstance& problem, const RunTrace& trace,
                        const RegretConfig& config);

/// Same two computations starting from a raw simple-regret sequence (index 1 first).
RegretSeries rsr_from_simple_regrets(std::span<const double> simple_regrets,
                                     const RegretConfig& config);
RegretSeries rsr_oracle_from_simple_regrets(std::span<const double> simple_regrets,
                                            const RegretConfig& config);

}  // namespace regretlab
