#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace regretlab {

/// Dense point in R^d. Dimensions in this project are small (d <= ~10).
using Vector = std::vector<double>;

inline void require_same_dimension(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                std::to_string(expected) + ", got " + std::to_string(got) + ")");
  }
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  require_same_dimension(a.size(), b.size(), "squared_distance");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

inline double squared_norm(std::span<const double> a) {
  double sum = 0.0;
  for (double v : a) sum += v * v;
  return sum;
}

inline double norm(std::span<const double> a) { return std::sqrt(squared_norm(a)); }

inline double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace regretlab
