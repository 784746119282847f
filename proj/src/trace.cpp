#include "regretlab/trace.hpp"

#include <stdexcept>
#include <string>

namespace regretlab {

void RunTrace::append(std::span<const double> x, double y, std::span<const double> recommendation) {
  evaluations_.push_back({evaluations_.size() + 1, Vector(x.begin(), x.end()), y});
  recommendations_.emplace_back(recommendation.begin(), recommendation.end());
}

const EvaluationRecord& RunTrace::evaluation(std::size_t n) const {
  if (n == 0 || n > size()) {
    throw std::out_of_range("evaluation index " + std::to_string(n) + " outside trace of length " +
                            std::to_string(size()));
  }
  return evaluations_[n - 1];
}

const Vector& RunTrace::recommendation(std::size_t n) const {
  if (n == 0 || n > size()) {
    throw std::out_of_range("recommendation index " + std::to_string(n) +
                            " outside trace of length " + std::to_string(size()));
  }
  return recommendations_[n - 1];
}

}  // namespace regretlab
