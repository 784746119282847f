#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "regretlab/regret.hpp"

namespace regretlab {

enum class SlopeMethod { least_squares, endpoint };

std::string_view to_string(SlopeMethod method);

/// Fitted log-log slope of a regret series over [n_lo, n_hi] (the indices actually used).
struct SlopeEstimate {
  double slope = 0.0;
  SlopeMethod method = SlopeMethod::least_squares;
  std::size_t n_lo = 0;
  std::size_t n_hi = 0;
  double residual_rms = 0.0;
  std::size_t points_used = 0;
  // Number of values below the floor that were raised to it before taking logs.
  std::size_t clamped_points = 0;

  bool clamped() const { return clamped_points > 0; }
};

inline constexpr double kDefaultRegretFloor = 1e-15;

/// Log-log slope over points with window_lo <= n <= window_hi.
///
/// least_squares regresses log(value) on log(n); endpoint returns
/// log(value(n_hi)) / log(n_hi). Values below `floor` are clamped to it and counted.
/// Throws std::invalid_argument when fewer than three points fall in the window.
SlopeEstimate estimate_slope(std::span<const RegretPoint> points, std::size_t window_lo,
                             std::size_t window_hi, SlopeMethod method = SlopeMethod::least_squares,
                             double floor = kDefaultRegretFloor);

inline SlopeEstimate estimate_slope(const RegretSeries& series, std::size_t window_lo,
                                    std::size_t window_hi,
                                    SlopeMethod method = SlopeMethod::least_squares,
                                    double floor = kDefaultRegretFloor) {
  return estimate_slope(series.points, window_lo, window_hi, method, floor);
}

}  // namespace regretlab
