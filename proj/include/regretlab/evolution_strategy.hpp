#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

#include "regretlab/optimizer.hpp"
#include "regretlab/random.hpp"

namespace regretlab {

/// Number of noisy re-evaluations r(n) at iteration n (1-based).
struct ResamplingSchedule {
  enum class Kind { none, constant, exponential };

  Kind kind = Kind::none;
  std::size_t constant = 1;  // K for Kind::constant
  double base = 1.0;         // R for Kind::exponential
  double growth = 2.0;       // zeta for Kind::exponential

  static ResamplingSchedule none() { return {}; }
  static ResamplingSchedule constant_count(std::size_t k) { return {Kind::constant, k, 1.0, 2.0}; }
  static ResamplingSchedule exponential(double r, double zeta) {
    return {Kind::exponential, 1, r, zeta};
  }

  /// r(n) >= 1; exponential: max(1, round(R * zeta^n)), saturating at `cap`.
  std::size_t count(std::size_t iteration, std::size_t cap) const;
  void validate() const;

  friend bool operator==(const ResamplingSchedule&, const ResamplingSchedule&) = default;
};

/// (1+1)-ES with one-fifth-rule step-size adaptation and optional resampling.
struct EsConfig {
  std::size_t mu = 1;
  std::size_t lambda = 1;
  double sigma0 = 1.0;
  ResamplingSchedule schedule;
  double success_up = 1.5;
  double failure_down = 0.9036020036098448;  // 1.5^(-1/4)
  // MES+R: r(n) extra offspring per iteration, evaluated once, never selected.
  bool fake_offspring = false;

  void validate() const;

  friend bool operator==(const EsConfig&, const EsConfig&) = default;
};

/// Evaluation layout of one iteration: `resamples` copies of the offspring, the same number
/// of fresh parent re-evaluations, then (MES+R only) `resamples` fake offspring.
///
/// Selection compares the two averages; the parent is replaced only on strict improvement.
class EvolutionStrategy final : public Optimizer {
 public:
  EvolutionStrategy(std::size_t dimension, std::uint64_t seed, EsConfig config);

  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override { return parent_; }
  std::string name() const override { return config_.fake_offspring ? "mes_r" : "es"; }
  std::optional<double> step_size() const override { return sigma_; }

  const Vector& parent() const { return parent_; }
  double sigma() const { return sigma_; }
  std::size_t iteration() const { return iteration_; }
  /// r used for the batch currently out for evaluation.
  std::size_t current_resamples() const { return resamples_; }
  const EsConfig& config() const { return config_; }

 private:
  Vector gaussian_around_parent(RandomStream& stream, std::normal_distribution<double>& dist);

  std::size_t dimension_;
  EsConfig config_;
  RandomStream mutation_stream_;
  RandomStream fake_stream_;
  std::normal_distribution<double> gaussian_;
  std::normal_distribution<double> fake_gaussian_;
  Vector parent_;
  Vector offspring_;
  double sigma_;
  std::size_t iteration_ = 1;
  std::size_t resamples_ = 0;
};

}  // namespace regretlab
