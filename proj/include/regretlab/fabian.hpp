#pragma once

#include <cstddef>
#include <cstdint>

#include "regretlab/optimizer.hpp"
#include "regretlab/random.hpp"

namespace regretlab {

/// Finite-difference stochastic approximation with s/2 redundant central differences per
/// coordinate. Gains are a_n = a / n^alpha and c_n = c / n^gamma.
struct FabianConfig {
  std::size_t s = 4;
  double a = 1.0;
  double alpha = 1.0;
  double c = 1.0;
  double gamma = 0.01;

  /// s even and 2 <= s <= 32, a > 0, c > 0, alpha == 1, 0 < gamma < 1/2.
  void validate() const;

  /// 2 * lambda0 * a > beta0 with lambda0 = 2 (Hessian eigenvalue of the sphere) and
  /// beta0 = min(2 s gamma, 1 - 2 gamma).
  bool stable_on_sphere() const;

  friend bool operator==(const FabianConfig&, const FabianConfig&) = default;
};

/// Weights v solving U v = e1 / 2 with U(i,j) = u_j^(2i-1), u_j = 1/j, i,j = 1..s/2.
/// Throws std::invalid_argument for odd or out-of-range s, std::runtime_error if the solve
/// does not reach a residual of 1e-10.
Vector fabian_weights(std::size_t s);

/// Max-norm residual of U v - e1/2 for the given weights.
double fabian_weights_residual(const Vector& v);

class Fabian final : public Optimizer {
 public:
  Fabian(std::size_t dimension, std::uint64_t seed, FabianConfig config);

  /// s*d points ordered by (j, i, sign): x~ + c_n u_j e_i then x~ - c_n u_j e_i.
  std::vector<Vector> ask(std::size_t remaining) override;
  void tell(std::span<const double> values) override;
  const Vector& recommend() const override { return estimate_; }
  std::string name() const override { return "fabian"; }

  std::size_t iteration() const { return iteration_; }
  double probe_scale() const;  // c_n for the current iteration
  const Vector& weights() const { return weights_; }
  const FabianConfig& config() const { return config_; }

 private:
  std::size_t dimension_;
  FabianConfig config_;
  Vector weights_;
  Vector estimate_;
  std::size_t iteration_ = 1;
};

}  // namespace regretlab
