#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "regretlab/harness.hpp"

namespace regretlab {

inline constexpr std::string_view kRegretCsvHeader =
    "suite_id,algorithm,dim,noise_std,replicate,eval_index,sr,asr,rsr";
inline constexpr std::string_view kSlopeCsvHeader =
    "algorithm,regret_kind,aggregation,slope,residual_rms,window_lo,window_hi";

struct RegretCsvRow {
  std::string suite_id;
  std::string algorithm;
  std::size_t dim = 0;
  double noise_std = 0.0;
  std::size_t replicate = 0;
  std::size_t eval_index = 0;
  double sr = 0.0;
  double asr = 0.0;
  double rsr = 0.0;

  friend bool operator==(const RegretCsvRow&, const RegretCsvRow&) = default;
};

struct SlopeSummaryRow {
  std::string algorithm;
  RegretKind kind = RegretKind::sr;
  Aggregation aggregation = Aggregation::mean;
  SlopeEstimate estimate;
};

/// Checkpoint rows of every replicate, sorted by (algorithm, replicate, eval_index).
std::vector<RegretCsvRow> regret_rows(const SuiteResult& suite);

/// Slope rows sorted by (algorithm, regret kind, aggregation).
std::vector<SlopeSummaryRow> slope_summary(const SuiteResult& suite);

void write_regret_csv(const std::vector<RegretCsvRow>& rows, std::ostream& sink);
void write_regret_csv(const SuiteResult& suite, std::ostream& sink);
void write_slope_summary(const std::vector<SlopeSummaryRow>& rows, std::ostream& sink);
void write_slope_summary(const SuiteResult& suite, std::ostream& sink);

/// Per-checkpoint aggregates: suite_id, algorithm, regret_kind, eval_index, mean, median,
/// mean_log (exp of the mean log-regret).
void write_aggregate_csv(const SuiteResult& suite, std::ostream& sink);

/// ||x~_n - x*|| / sigma_n per checkpoint for algorithms with a step size.
void write_diagnostics_csv(const SuiteResult& suite, std::ostream& sink);

/// Reads a regret CSV; throws std::runtime_error naming the offending line.
std::vector<RegretCsvRow> read_regret_csv(std::istream& source);

/// Recomputes the slope summary from regret CSV rows. The window is
/// [ceil(window_fraction * budget), budget] with budget the largest eval_index of each
/// algorithm, as in the harness.
std::vector<SlopeSummaryRow> slopes_from_rows(const std::vector<RegretCsvRow>& rows,
                                              double window_fraction = 0.01);

/// Writes regret.csv, slopes.csv, aggregate.csv and diagnostics.csv into `dir` (created if
/// needed). Throws std::runtime_error with the path on I/O failure.
void write_outputs(const SuiteResult& suite, const std::filesystem::path& dir);

}  // namespace regretlab
