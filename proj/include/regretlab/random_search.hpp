#pragma once

#include <cstdint>
#include <limits>

#include "regretlab/optimizer.hpp"
#include "regretlab/random.hpp"

namespace regretlab {

/// Uniform random search in the unit box, recommending the point with the best single noisy
/// value seen so far. The initial candidate is the first search point.
class RandomSearch final : public Optimizer {
 public:
  RandomSearch(std::size_t dimension, std::uint64_t seed);

  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override { return best_; }
  std::string name() const override { return "random_search"; }

  double best_value() const { return best_value_; }

 private:
  Vector draw();

  std::size_t dimension_;
  RandomStream stream_;
  Vector best_;
  Vector pending_;
  double best_value_ = std::numeric_limits<double>::infinity();
  bool initial_ = true;
};

}  // namespace regretlab
