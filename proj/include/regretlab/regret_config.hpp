#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace regretlab {

/// Window and quantile settings of the robust simple regret.
///
/// The window length is g(n) = ceil((ln(1+n))^p) unless `constant_window` is set, in which
/// case g(n) is that constant for every n. `quantile` = 1 selects the window maximum.
struct RegretConfig {
  double g_exponent = 2.0;
  double quantile = 1.0;
  std::optional<std::size_t> constant_window;

  /// Throws std::invalid_argument unless p > 0, q in (0, 1] and any constant window is >= 1.
  void validate() const;

  friend bool operator==(const RegretConfig&, const RegretConfig&) = default;
};

/// ceil((ln(1+n))^p); always >= 1 for n >= 1.
std::size_t default_g(std::size_t n, double p);

/// 1-based rank of the q-quantile inside a window of `window_size` sorted values
/// (smallest element whose rank is >= ceil(q*w); q = 1 gives the maximum).
std::size_t quantile_rank(double q, std::size_t window_size);

/// Index bookkeeping for the robust-regret window (k - g(k), k], clamped at 1.
///
/// The lower edge k - g(k) + 1 is not monotone for every exponent (it can move left early
/// on when p > 2), so streaming consumers ask `earliest_needed` before discarding data.
class WindowSchedule {
 public:
  explicit WindowSchedule(const RegretConfig& config);

  std::size_t g(std::size_t k) const;

  /// First index of the window ending at k (1-based, >= 1).
  std::size_t lower(std::size_t k) const;

  /// min over k' >= k of lower(k'): data older than this is never read again.
  std::size_t earliest_needed(std::size_t k) const;

 private:
  RegretConfig config_;
  // suffix_min_[k] = earliest_needed(k) for k < suffix_min_.size(); beyond it lower() is
  // nondecreasing.
  std::vector<std::size_t> suffix_min_;
};

}  // namespace regretlab
