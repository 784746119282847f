#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regretlab/vector_ops.hpp"

namespace regretlab {

struct EvaluationRecord {
  std::size_t index = 0;  // 1-based evaluation count
  Vector search_point;
  double noisy_value = 0.0;
};

/// Search points and recommendations, one of each per evaluation index.
class RunTrace {
 public:
  /// Appends evaluation number size()+1 together with the recommendation in force after it.
  void append(std::span<const double> x, double y, std::span<const double> recommendation);

  std::size_t size() const { return evaluations_.size(); }
  bool empty() const { return evaluations_.empty(); }

  const std::vector<EvaluationRecord>& evaluations() const { return evaluations_; }
  const std::vector<Vector>& recommendations() const { return recommendations_; }

  /// 1-based accessors.
  const EvaluationRecord& evaluation(std::size_t n) const;
  const Vector& recommendation(std::size_t n) const;

 private:
  std::vector<EvaluationRecord> evaluations_;
  std::vector<Vector> recommendations_;
};

/// Functional form of RunTrace::append.
inline RunTrace trace_append(RunTrace trace, std::span<const double> x, double y,
                             std::span<const double> recommendation) {
  trace.append(x, y, recommendation);
  return trace;
}

}  // namespace regretlab
