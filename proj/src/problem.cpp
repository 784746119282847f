#include "regretlab/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace regretlab {

ProblemInstance::ProblemInstance(Vector optimum, double noise_std)
    : ProblemInstance(optimum, noise_std, Vector(optimum.size(), 0.0), Vector(optimum.size(), 1.0)) {}

ProblemInstance::ProblemInstance(Vector optimum, double noise_std, Vector lower, Vector upper)
    : optimum_(std::move(optimum)),
      noise_std_(noise_std),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {
  if (optimum_.empty()) throw std::invalid_argument("problem dimension must be >= 1");
  if (!(noise_std_ >= 0.0) || !std::isfinite(noise_std_)) {
    throw std::invalid_argument("noise_std must be a finite nonnegative real");
  }
  require_same_dimension(optimum_.size(), lower_.size(), "ProblemInstance lower bound");
  require_same_dimension(optimum_.size(), upper_.size(), "ProblemInstance upper bound");
  for (std::size_t i = 0; i < optimum_.size(); ++i) {
    if (!(lower_[i] <= optimum_[i] && optimum_[i] <= upper_[i])) {
      throw std::invalid_argument("optimum must lie inside the domain box");
    }
  }
}

ProblemInstance make_sphere_problem(std::size_t dimension, double noise_std, std::uint64_t seed) {
  if (dimension == 0) throw std::invalid_argument("make_sphere_problem: dimension must be >= 1");
  RandomStream stream(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector optimum(dimension);
  for (double& v : optimum) v = unit(stream);
  return ProblemInstance(std::move(optimum), noise_std);
}

double true_value(const ProblemInstance& problem, std::span<const double> x) {
  require_same_dimension(problem.dimension(), x.size(), "true_value");
  return squared_distance(x, problem.optimum());
}

double noisy_eval(const ProblemInstance& problem, std::span<const double> x,
                  RandomStream& noise_stream) {
  require_same_dimension(problem.dimension(), x.size(), "noisy_eval");
  const double value = squared_distance(x, problem.optimum());
  if (problem.noise_std() == 0.0) return value;
  std::normal_distribution<double> gaussian;
  return value + problem.noise_std() * gaussian(noise_stream);
}

}  // namespace regretlab
