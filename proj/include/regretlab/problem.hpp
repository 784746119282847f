#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "regretlab/random.hpp"
#include "regretlab/vector_ops.hpp"

namespace regretlab {

/// Noisy sphere F(x) = ||x - x*||^2 observed as F(x) + noise_std * N(0, 1).
///
/// Immutable after construction; safe to share across concurrent runs. The optimum always
/// lies in the axis-aligned domain box.
class ProblemInstance {
 public:
  /// Explicit optimum inside the unit box [0,1]^d.
  ProblemInstance(Vector optimum, double noise_std);
  ProblemInstance(Vector optimum, double noise_std, Vector lower, Vector upper);

  std::size_t dimension() const { return optimum_.size(); }
  const Vector& optimum() const { return optimum_; }
  double noise_std() const { return noise_std_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

 private:
  Vector optimum_;
  double noise_std_;
  Vector lower_;
  Vector upper_;
};

/// Draws x* uniformly in [0,1]^d from a stream seeded by `seed`. Rejects d = 0.
ProblemInstance make_sphere_problem(std::size_t dimension, double noise_std, std::uint64_t seed);

/// Noise-free objective ||x - x*||^2. Harness-only: optimizers never see this.
double true_value(const ProblemInstance& problem, std::span<const double> x);

/// One noisy observation; each call consumes fresh Gaussian draws from `noise_stream`.
double noisy_eval(const ProblemInstance& problem, std::span<const double> x,
                  RandomStream& noise_stream);

/// Black-box handle: owns the noise stream and counts evaluations. Offers no access to the
/// noise-free value.
class NoisyBlackBox {
 public:
  NoisyBlackBox(const ProblemInstance& problem, std::uint64_t noise_seed)
      : problem_(&problem), stream_(noise_seed) {}

  double evaluate(std::span<const double> x) {
    ++evaluations_;
    const double value = true_value(*problem_, x);
    if (problem_->noise_std() == 0.0) return value;
    return value + problem_->noise_std() * gaussian_(stream_);
  }

  std::size_t dimension() const { return problem_->dimension(); }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const ProblemInstance* problem_;
  RandomStream stream_;
  std::normal_distribution<double> gaussian_;
  std::size_t evaluations_ = 0;
};

}  // namespace regretlab
