#include "regretlab/fabian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace regretlab {

namespace {

constexpr std::size_t kMaxHalfOrder = 16;
constexpr double kWeightResidualTolerance = 1e-10;

Eigen::MatrixXd difference_matrix(std::size_t half) {
  Eigen::MatrixXd u(half, half);
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < half; ++j) {
      u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::pow(1.0 / static_cast<double>(j + 1), static_cast<double>(2 * i + 1));
    }
  }
  return u;
}

}  // namespace

void FabianConfig::validate() const {
  if (s < 2 || s % 2 != 0) throw std::invalid_argument("s must be even (and >= 2)");
  if (s / 2 > kMaxHalfOrder) throw std::invalid_argument("s must be <= 32");
  if (!(a > 0.0)) throw std::invalid_argument("a must be > 0");
  if (!(c > 0.0)) throw std::invalid_argument("c must be > 0");
  if (alpha != 1.0) throw std::invalid_argument("alpha must be 1");
  if (!(gamma > 0.0 && gamma < 0.5)) {
    throw std::invalid_argument("gamma must satisfy 0 < gamma < 1/2");
  }
}

bool FabianConfig::stable_on_sphere() const {
  const double lambda0 = 2.0;
  const double beta0 = std::min(2.0 * static_cast<double>(s) * gamma, 1.0 - 2.0 * gamma);
  return 2.0 * lambda0 * a > beta0;
}

Vector fabian_weights(std::size_t s) {
  if (s < 2 || s % 2 != 0) throw std::invalid_argument("fabian_weights: s must be even and >= 2");
  const std::size_t half = s / 2;
  if (half > kMaxHalfOrder) {
    throw std::invalid_argument("fabian_weights: s/2 must be <= 16 (system too ill-conditioned)");
  }
  const Eigen::MatrixXd u = difference_matrix(half);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(half));
  rhs(0) = 0.5;
  const Eigen::VectorXd v = u.fullPivLu().solve(rhs);
  Vector weights(v.data(), v.data() + v.size());
  if (!(fabian_weights_residual(weights) <= kWeightResidualTolerance)) {
    throw std::runtime_error("fabian_weights: linear solve residual above 1e-10 for s = " +
                             std::to_string(s));
  }
  return weights;
}

double fabian_weights_residual(const Vector& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      sum += v[j] * std::pow(1.0 / static_cast<double>(j + 1), static_cast<double>(2 * i + 1));
    }
    worst = std::max(worst, std::abs(sum - (i == 0 ? 0.5 : 0.0)));
  }
  return worst;
}

Fabian::Fabian(std::size_t dimension, std::uint64_t seed, FabianConfig config)
    : dimension_(dimension), config_(config) {
  if (dimension_ == 0) throw std::invalid_argument("Fabian: dimension must be >= 1");
  config_.validate();
  if (!config_.stable_on_sphere()) {
    std::clog << "warning: Fabian gains violate 2*lambda0*a > beta0 on the sphere (a = "
              << config_.a << ")\n";
  }
  weights_ = fabian_weights(config_.s);
  RandomStream stream(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  estimate_.resize(dimension_);
  for (double& v : estimate_) v = unit(stream);
}

double Fabian::probe_scale() const {
  return config_.c / std::pow(static_cast<double>(iteration_), config_.gamma);
}

std::vector<Vector> Fabian::ask(std::size_t /*remaining*/) {
  const double cn = probe_scale();
  std::vector<Vector> batch;
  batch.reserve(config_.s * dimension_);
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    const double offset = cn / static_cast<double>(j + 1);
    for (std::size_t i = 0; i < dimension_; ++i) {
      Vector plus(estimate_);
      Vector minus(estimate_);
      plus[i] += offset;
      minus[i] -= offset;
      batch.push_back(std::move(plus));
      batch.push_back(std::move(minus));
    }
  }
  return batch;
}

void Fabian::tell(std::span<const double> values) {
  if (values.size() != config_.s * dimension_) {
    throw std::invalid_argument("Fabian::tell: batch size mismatch");
  }
  const double cn = probe_scale();
  const double an = config_.a / std::pow(static_cast<double>(iteration_), config_.alpha);
  Vector gradient(dimension_, 0.0);
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    for (std::size_t i = 0; i < dimension_; ++i) {
      const std::size_t k = 2 * (j * dimension_ + i);
      gradient[i] += weights_[j] * (values[k] - values[k + 1]);
    }
  }
  for (std::size_t i = 0; i < dimension_; ++i) estimate_[i] -= an * gradient[i] / cn;
  ++iteration_;
}

}  // namespace regretlab
