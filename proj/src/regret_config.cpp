#include "regretlab/regret_config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regretlab {

namespace {

// Past this index the lower edge must already be monotone; larger exponents are rejected.
constexpr std::size_t kMaxMonotoneThreshold = 10'000'000;

// Smallest n such that (ln(1+x))^p has derivative <= 1 and decreasing for all x >= n.
// From there on g increases by at most one per step, so k - g(k) never decreases.
std::size_t monotone_threshold(double p) {
  const double t_min = std::max(p - 1.0, 0.0);
  auto ok = [&](double n) {
    const double t = std::log1p(n);
    if (t < t_min) return false;
    return p * std::pow(t, p - 1.0) / (1.0 + n) <= 1.0;
  };
  double hi = 1.0;
  while (!ok(hi)) {
    hi *= 2.0;
    if (hi > 2.0 * static_cast<double>(kMaxMonotoneThreshold)) {
      throw std::invalid_argument("g_exponent too large: window edge is not monotone early enough");
    }
  }
  std::size_t lo_i = 1;
  auto hi_i = static_cast<std::size_t>(hi);
  while (lo_i < hi_i) {
    const std::size_t mid = lo_i + (hi_i - lo_i) / 2;
    if (ok(static_cast<double>(mid))) {
      hi_i = mid;
    } else {
      lo_i = mid + 1;
    }
  }
  return lo_i;
}

}  // namespace

void RegretConfig::validate() const {
  if (!(g_exponent > 0.0) || !std::isfinite(g_exponent)) {
    throw std::invalid_argument("g_exponent must be a positive real");
  }
  if (!(quantile > 0.0 && quantile <= 1.0)) {
    throw std::invalid_argument("quantile must lie in (0, 1]");
  }
  if (constant_window && *constant_window == 0) {
    throw std::invalid_argument("constant window must be >= 1");
  }
}

std::size_t default_g(std::size_t n, double p) {
  const double value = std::ceil(std::pow(std::log1p(static_cast<double>(n)), p));
  return std::max<std::size_t>(1, static_cast<std::size_t>(value));
}

std::size_t quantile_rank(double q, std::size_t window_size) {
  if (window_size == 0) throw std::invalid_argument("quantile_rank: empty window");
  // The small offset keeps products such as 0.9 * 10 from rounding up to the next rank.
  const double raw = std::ceil(q * static_cast<double>(window_size) - 1e-9);
  const auto rank = static_cast<std::size_t>(std::max(raw, 1.0));
  return std::min(rank, window_size);
}

WindowSchedule::WindowSchedule(const RegretConfig& config) : config_(config) {
  config_.validate();
  if (config_.constant_window) return;
  const std::size_t threshold = monotone_threshold(config_.g_exponent);
  suffix_min_.assign(threshold + 1, 0);
  suffix_min_[threshold] = lower(threshold);
  for (std::size_t k = threshold; k-- > 1;) {
    suffix_min_[k] = std::min(lower(k), suffix_min_[k + 1]);
  }
}

std::size_t WindowSchedule::g(std::size_t k) const {
  if (config_.constant_window) return *config_.constant_window;
  return default_g(k, config_.g_exponent);
}

std::size_t WindowSchedule::lower(std::size_t k) const {
  const std::size_t w = g(k);
  return w >= k ? 1 : k - w + 1;
}

std::size_t WindowSchedule::earliest_needed(std::size_t k) const {
  if (k < suffix_min_.size()) return suffix_min_[k];
  return lower(k);
}

}  // namespace regretlab
