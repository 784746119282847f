#include "regretlab/shamir.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace regretlab {

void ShamirConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(lambda_step > 0.0)) throw std::invalid_argument("lambda_step must be > 0");
  if (!(ball_radius > 0.0)) throw std::invalid_argument("ball_radius must be > 0");
}

Vector project_onto_ball(Vector x, double radius) {
  const double r = norm(x);
  if (r > radius) {
    const double scale = radius / r;
    for (double& v : x) v *= scale;
  }
  return x;
}

Shamir::Shamir(std::size_t dimension, std::uint64_t seed, ShamirConfig config)
    : dimension_(dimension),
      config_(config),
      stream_(seed),
      center_(dimension, 0.0),
      signs_(dimension, 0.0),
      window_sum_(dimension, 0.0) {
  if (dimension_ == 0) throw std::invalid_argument("Shamir: dimension must be >= 1");
  config_.validate();
  window_.push_back(center_);
  window_sum_ = center_;
  recommendation_ = center_;
}

std::vector<Vector> Shamir::ask(std::size_t /*remaining*/) {
  std::bernoulli_distribution coin(0.5);
  const double offset = config_.epsilon / std::sqrt(static_cast<double>(dimension_));
  Vector probe(center_);
  for (std::size_t i = 0; i < dimension_; ++i) {
    signs_[i] = coin(stream_) ? 1.0 : -1.0;
    probe[i] += offset * signs_[i];
  }
  return {std::move(probe)};
}

void Shamir::tell(std::span<const double> values) {
  if (values.size() != 1) throw std::invalid_argument("Shamir::tell expects one value");
  const std::size_t n = iteration_;
  const double scale = std::sqrt(static_cast<double>(dimension_)) * values[0] / config_.epsilon;
  const double step = 1.0 / (config_.lambda_step * static_cast<double>(n));

  // Descent step along the gradient estimate, then projection.
  Vector next(center_);
  for (std::size_t i = 0; i < dimension_; ++i) next[i] -= step * scale * signs_[i];
  next = project_onto_ball(std::move(next), config_.ball_radius);

  // window_ holds c_lo..c_n; the recommendation after iteration n averages c_ceil(n/2)..c_n.
  const std::size_t lo = (n + 1) / 2;
  while (window_lo_ < lo) {
    const Vector& old = window_.front();
    for (std::size_t i = 0; i < dimension_; ++i) window_sum_[i] -= old[i];
    window_.pop_front();
    ++window_lo_;
  }
  const auto count = static_cast<double>(window_.size());
  for (std::size_t i = 0; i < dimension_; ++i) recommendation_[i] = window_sum_[i] / count;

  center_ = std::move(next);
  window_.push_back(center_);
  for (std::size_t i = 0; i < dimension_; ++i) window_sum_[i] += center_[i];
  ++iteration_;
}

}  // namespace regretlab
