#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>

#include "regretlab/optimizer.hpp"
#include "regretlab/random.hpp"

namespace regretlab {

struct ShamirConfig {
  double epsilon = 0.3;      // probe radius
  double lambda_step = 0.1;  // step size at iteration n is 1 / (lambda_step * n)
  double ball_radius = 3.0;  // iterates are projected onto the ball of this radius at 0

  void validate() const;

  friend bool operator==(const ShamirConfig&, const ShamirConfig&) = default;
};

/// Euclidean projection onto the closed ball of `radius` centred at the origin.
Vector project_onto_ball(Vector x, double radius);

/// One-point gradient estimate for quadratics with projected descent.
///
/// Iteration n probes x_n = c_n + (eps/sqrt(d)) r with r uniform in {-1,1}^d, so every probe is
/// exactly eps away from the centre c_n. The estimate (sqrt(d) v / eps) r is unbiased for the
/// gradient of a quadratic. The recommendation after n iterations is the mean of c_k for
/// k in [ceil(n/2), n].
class Shamir final : public Optimizer {
 public:
  Shamir(std::size_t dimension, std::uint64_t seed, ShamirConfig config);

  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override { return recommendation_; }
  std::string name() const override { return "shamir"; }

  /// Centre used by the pending (or next) probe.
  const Vector& center() const { return center_; }
  std::size_t iteration() const { return iteration_; }
  const ShamirConfig& config() const { return config_; }

 private:
  std::size_t dimension_;
  ShamirConfig config_;
  RandomStream stream_;
  Vector center_;
  Vector signs_;
  std::size_t iteration_ = 1;
  // Centres c_lo .. c_n of the averaging window, and their running sum.
  std::deque<Vector> window_;
  std::size_t window_lo_ = 1;
  Vector window_sum_;
  Vector recommendation_;
};

}  // namespace regretlab
