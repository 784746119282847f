#include "regretlab/evolution_strategy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace regretlab {

std::size_t ResamplingSchedule::count(std::size_t iteration, std::size_t cap) const {
  cap = std::max<std::size_t>(cap, 1);
  switch (kind) {
    case Kind::none:
      return 1;
    case Kind::constant:
      return std::min(std::max<std::size_t>(constant, 1), cap);
    case Kind::exponential: {
      const double raw = std::round(base * std::pow(growth, static_cast<double>(iteration)));
      if (!(raw < static_cast<double>(cap))) return cap;
      return std::max<std::size_t>(1, static_cast<std::size_t>(raw));
    }
  }
  return 1;
}

void ResamplingSchedule::validate() const {
  if (kind == Kind::constant && constant == 0) {
    throw std::invalid_argument("constant resampling count must be >= 1");
  }
  if (kind == Kind::exponential) {
    if (!(base > 0.0)) throw std::invalid_argument("resample_R must be > 0");
    if (!(growth > 1.0)) throw std::invalid_argument("resample_zeta must be > 1");
  }
}

void EsConfig::validate() const {
  if (mu != 1 || lambda != 1) {
    throw std::invalid_argument("only the (1+1) configuration (mu = lambda = 1) is supported");
  }
  if (!(sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be > 0");
  if (!(success_up > 1.0)) throw std::invalid_argument("success_up must be > 1");
  if (!(failure_down > 0.0 && failure_down < 1.0)) {
    throw std::invalid_argument("failure_down must lie in (0, 1)");
  }
  if (fake_offspring && schedule.kind != ResamplingSchedule::Kind::exponential) {
    throw std::invalid_argument("fake offspring require an exponential resampling schedule");
  }
  schedule.validate();
}

EvolutionStrategy::EvolutionStrategy(std::size_t dimension, std::uint64_t seed, EsConfig config)
    : dimension_(dimension),
      config_(config),
      mutation_stream_(child_seed(seed, 1)),
      fake_stream_(child_seed(seed, 2)),
      sigma_(config.sigma0) {
  if (dimension_ == 0) throw std::invalid_argument("EvolutionStrategy: dimension must be >= 1");
  config_.validate();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  parent_.resize(dimension_);
  for (double& v : parent_) v = unit(mutation_stream_);
}

Vector EvolutionStrategy::gaussian_around_parent(RandomStream& stream,
                                                 std::normal_distribution<double>& dist) {
  Vector x(parent_);
  for (double& v : x) v += sigma_ * dist(stream);
  return x;
}

std::vector<Vector> EvolutionStrategy::ask(std::size_t remaining) {
  const std::size_t per_resample = config_.fake_offspring ? 3 : 2;
  const std::size_t cap = std::max<std::size_t>(1, remaining / per_resample);
  resamples_ = config_.schedule.count(iteration_, cap);

  offspring_ = gaussian_around_parent(mutation_stream_, gaussian_);
  std::vector<Vector> batch;
  batch.reserve(per_resample * resamples_);
  batch.insert(batch.end(), resamples_, offspring_);
  batch.insert(batch.end(), resamples_, parent_);
  if (config_.fake_offspring) {
    for (std::size_t i = 0; i < resamples_; ++i) {
      batch.push_back(gaussian_around_parent(fake_stream_, fake_gaussian_));
    }
  }
  return batch;
}

void EvolutionStrategy::tell(std::span<const double> values) {
  const std::size_t per_resample = config_.fake_offspring ? 3 : 2;
  if (values.size() != per_resample * resamples_) {
    throw std::invalid_argument("EvolutionStrategy::tell: batch size mismatch");
  }
  double offspring_sum = 0.0;
  double parent_sum = 0.0;
  for (std::size_t i = 0; i < resamples_; ++i) {
    offspring_sum += values[i];
    parent_sum += values[resamples_ + i];
  }
  const auto r = static_cast<double>(resamples_);
  if (offspring_sum / r < parent_sum / r) {
    parent_ = offspring_;
    sigma_ *= config_.success_up;
  } else {
    // Clamped so sigma stays strictly positive after long noise-free runs.
    sigma_ = std::max(sigma_ * config_.failure_down, std::numeric_limits<double>::min());
  }
  sigma_ = std::min(sigma_, std::numeric_limits<double>::max());
  ++iteration_;
}

}  // namespace regretlab
