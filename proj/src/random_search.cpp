#include "regretlab/random_search.hpp"

#include <stdexcept>

namespace regretlab {

RandomSearch::RandomSearch(std::size_t dimension, std::uint64_t seed)
    : dimension_(dimension), stream_(seed) {
  if (dimension_ == 0) throw std::invalid_argument("RandomSearch: dimension must be >= 1");
  best_ = draw();
  pending_ = best_;
}

Vector RandomSearch::draw() {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector x(dimension_);
  for (double& v : x) v = unit(stream_);
  return x;
}

std::vector<Vector> RandomSearch::ask(std::size_t /*remaining*/) {
  if (!initial_) pending_ = draw();
  initial_ = false;
  return {pending_};
}

void RandomSearch::tell(std::span<const double> values) {
  if (values.size() != 1) throw std::invalid_argument("RandomSearch::tell expects one value");
  // Strict improvement only: ties keep the incumbent.
  if (values[0] < best_value_) {
    best_value_ = values[0];
    best_ = pending_;
  }
}

}  // namespace regretlab
