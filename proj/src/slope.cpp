#include "regretlab/slope.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace regretlab {

std::string_view to_string(SlopeMethod method) {
  return method == SlopeMethod::least_squares ? "least_squares" : "endpoint";
}

SlopeEstimate estimate_slope(std::span<const RegretPoint> points, std::size_t window_lo,
                             std::size_t window_hi, SlopeMethod method, double floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("estimate_slope: floor must be positive");
  SlopeEstimate est;
  est.method = method;

  std::vector<double> log_n;
  std::vector<double> log_v;
  for (const RegretPoint& p : points) {
    if (p.n < window_lo || p.n > window_hi) continue;
    if (p.n == 0) throw std::invalid_argument("estimate_slope: evaluation index 0");
    double v = p.value;
    if (!(v >= floor)) {
      v = floor;
      ++est.clamped_points;
    }
    if (log_n.empty()) est.n_lo = p.n;
    est.n_hi = p.n;
    log_n.push_back(std::log(static_cast<double>(p.n)));
    log_v.push_back(std::log(v));
  }
  if (log_n.size() < 3) {
    throw std::invalid_argument("estimate_slope: fewer than 3 points in window [" +
                                std::to_string(window_lo) + ", " + std::to_string(window_hi) + "]");
  }
  est.points_used = log_n.size();
  const auto count = static_cast<double>(log_n.size());

  double intercept = 0.0;
  if (method == SlopeMethod::least_squares) {
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      mean_x += log_n[i];
      mean_y += log_v[i];
    }
    mean_x /= count;
    mean_y /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
      const double dx = log_n[i] - mean_x;
      sxx += dx * dx;
      sxy += dx * (log_v[i] - mean_y);
    }
    est.slope = sxy / sxx;
    intercept = mean_y - est.slope * mean_x;
  } else {
    est.slope = log_v.back() / log_n.back();
  }

  double ss = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    const double r = log_v[i] - (intercept + est.slope * log_n[i]);
    ss += r * r;
  }
  est.residual_rms = std::sqrt(ss / count);
  return est;
}

}  // namespace regretlab
