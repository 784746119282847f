#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regretlab/vector_ops.hpp"

namespace regretlab {

/// Ask/tell/recommend contract shared by every optimizer and wrapper.
///
/// The driver calls ask(), evaluates the returned points in order (one noisy evaluation
/// each), then tell()s the values in the same order. If the budget runs out mid-batch the
/// run ends without a tell. recommend() is valid at any time after construction.
///
/// Optimizers only ever see noisy values; nothing here can reach the noise-free objective.
class Optimizer {
 public:
  virtual ~Optimizer() = default;

  /// Next batch of search points; never empty. `remaining` is the number of evaluations
  /// left in the run and may be used to cap batch sizes.
  virtual std::vector<Vector> ask(std::size_t remaining) = 0;

  /// Noisy values for the full batch returned by the last ask().
  virtual void tell(std::span<const double> values) = 0;

  /// Current approximation of the optimum.
  virtual const Vector& recommend() const = 0;

  virtual std::string name() const = 0;

  /// Step size, for algorithms that have one.
  virtual std::optional<double> step_size() const { return std::nullopt; }
};

}  // namespace regretlab
