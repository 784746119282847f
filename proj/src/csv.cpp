#include "regretlab/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace regretlab {

namespace {

constexpr std::array kKinds{RegretKind::sr, RegretKind::asr, RegretKind::rsr};

bool row_less(const RegretCsvRow& a, const RegretCsvRow& b) {
  return std::tie(a.algorithm, a.replicate, a.eval_index) <
         std::tie(b.algorithm, b.replicate, b.eval_index);
}

bool slope_less(const SlopeSummaryRow& a, const SlopeSummaryRow& b) {
  return std::tie(a.algorithm, a.kind, a.aggregation) < std::tie(b.algorithm, b.kind, b.aggregation);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(sep, start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T parse_field(std::string_view text, std::size_t line, std::string_view column) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(fmt::format("regret CSV line {}: bad {} value '{}'", line, column, text));
  }
  return value;
}

std::vector<SlopeSummaryRow> rows_for(const std::string& algorithm, const AggregateResult& agg) {
  std::vector<SlopeSummaryRow> out;
  for (const SlopeRow& row : agg.slopes) out.push_back({algorithm, row.kind, row.aggregation, row.estimate});
  return out;
}

void open_and_write(const std::filesystem::path& path, const auto& writer) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
  writer(file);
  file.flush();
  if (!file) throw std::runtime_error(fmt::format("write to {} failed", path.string()));
}

}  // namespace

std::vector<RegretCsvRow> regret_rows(const SuiteResult& suite) {
  std::vector<RegretCsvRow> rows;
  for (const RunResult& run : suite.runs) {
    for (const ReplicateResult& rep : run.replicates) {
      for (std::size_t i = 0; i < rep.sr.points.size(); ++i) {
        rows.push_back({run.spec.suite_id, run.spec.algorithm.label, run.spec.dimension,
                        run.spec.noise_std, rep.replicate, rep.sr.points[i].n,
                        rep.sr.points[i].value, rep.asr.points[i].value, rep.rsr.points[i].value});
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::vector<SlopeSummaryRow> slope_summary(const SuiteResult& suite) {
  std::vector<SlopeSummaryRow> out;
  for (const RunResult& run : suite.runs) {
    auto rows = rows_for(run.spec.algorithm.label, run.aggregate);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  std::stable_sort(out.begin(), out.end(), slope_less);
  return out;
}

void write_regret_csv(const std::vector<RegretCsvRow>& rows, std::ostream& sink) {
  sink << kRegretCsvHeader << '\n';
  for (const RegretCsvRow& r : rows) {
    fmt::print(sink, "{},{},{},{:.17g},{},{},{:.17g},{:.17g},{:.17g}\n", r.suite_id, r.algorithm, r.dim,
               r.noise_std, r.replicate, r.eval_index, r.sr, r.asr, r.rsr);
  }
}

void write_regret_csv(const SuiteResult& suite, std::ostream& sink) {
  write_regret_csv(regret_rows(suite), sink);
}

void write_slope_summary(const std::vector<SlopeSummaryRow>& rows, std::ostream& sink) {
  sink << kSlopeCsvHeader << '\n';
  for (const SlopeSummaryRow& r : rows) {
    fmt::print(sink, "{},{},{},{:.17g},{:.17g},{},{}\n", r.algorithm, to_string(r.kind),
               to_string(r.aggregation), r.estimate.slope, r.estimate.residual_rms, r.estimate.n_lo,
               r.estimate.n_hi);
  }
}

void write_slope_summary(const SuiteResult& suite, std::ostream& sink) {
  write_slope_summary(slope_summary(suite), sink);
}

void write_aggregate_csv(const SuiteResult& suite, std::ostream& sink) {
  sink << "suite_id,algorithm,regret_kind,eval_index,mean,median,mean_log\n";
  for (const RunResult& run : suite.runs) {
    for (RegretKind kind : kKinds) {
      const AggregatedSeries& s = run.aggregate.of(kind);
      for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
        fmt::print(sink, "{},{},{},{},{:.17g},{:.17g},{:.17g}\n", run.spec.suite_id,
                   run.spec.algorithm.label, to_string(kind), s.checkpoints[i], s.mean[i], s.median[i],
                   s.mean_log[i]);
      }
    }
  }
}

void write_diagnostics_csv(const SuiteResult& suite, std::ostream& sink) {
  sink << "algorithm,replicate,eval_index,distance_over_step\n";
  for (const RunResult& run : suite.runs) {
    for (const ReplicateResult& rep : run.replicates) {
      for (std::size_t i = 0; i < rep.distance_over_step.size(); ++i) {
        fmt::print(sink, "{},{},{},{:.17g}\n", run.spec.algorithm.label, rep.replicate,
                   rep.sr.points[i].n, rep.distance_over_step[i]);
      }
    }
  }
}

std::vector<RegretCsvRow> read_regret_csv(std::istream& source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(source, line)) throw std::runtime_error("regret CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRegretCsvHeader) {
    throw std::runtime_error(fmt::format("regret CSV line 1: expected header '{}'", kRegretCsvHeader));
  }
  std::vector<RegretCsvRow> rows;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw std::runtime_error(fmt::format("regret CSV line {}: expected 9 fields, got {}", line_no, f.size()));
    }
    rows.push_back({std::string(f[0]), std::string(f[1]), parse_field<std::size_t>(f[2], line_no, "dim"),
                    parse_field<double>(f[3], line_no, "noise_std"),
                    parse_field<std::size_t>(f[4], line_no, "replicate"),
                    parse_field<std::size_t>(f[5], line_no, "eval_index"),
                    parse_field<double>(f[6], line_no, "sr"), parse_field<double>(f[7], line_no, "asr"),
                    parse_field<double>(f[8], line_no, "rsr")});
  }
  return rows;
}

std::vector<SlopeSummaryRow> slopes_from_rows(const std::vector<RegretCsvRow>& input,
                                              double window_fraction) {
  std::vector<RegretCsvRow> rows = input;
  std::stable_sort(rows.begin(), rows.end(), row_less);
  std::vector<SlopeSummaryRow> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    const std::string& algorithm = rows[i].algorithm;
    std::vector<ReplicateResult> replicates;
    std::size_t budget = 0;
    for (; i < rows.size() && rows[i].algorithm == algorithm; ++i) {
      const RegretCsvRow& r = rows[i];
      if (replicates.empty() || replicates.back().replicate != r.replicate) {
        replicates.emplace_back();
        replicates.back().replicate = r.replicate;
      }
      ReplicateResult& rep = replicates.back();
      rep.sr.points.push_back({r.eval_index, r.sr});
      rep.asr.points.push_back({r.eval_index, r.asr});
      rep.rsr.points.push_back({r.eval_index, r.rsr});
      budget = std::max(budget, r.eval_index);
    }
    const AggregateResult agg =
        aggregate_runs(replicates, slope_window_lo(window_fraction, budget), budget);
    auto rows_here = rows_for(algorithm, agg);
    out.insert(out.end(), rows_here.begin(), rows_here.end());
  }
  std::stable_sort(out.begin(), out.end(), slope_less);
  return out;
}

void write_outputs(const SuiteResult& suite, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create {}: {}", dir.string(), ec.message()));
  open_and_write(dir / "regret.csv", [&](std::ostream& os) { write_regret_csv(suite, os); });
  open_and_write(dir / "slopes.csv", [&](std::ostream& os) { write_slope_summary(suite, os); });
  open_and_write(dir / "aggregate.csv", [&](std::ostream& os) { write_aggregate_csv(suite, os); });
  open_and_write(dir / "diagnostics.csv", [&](std::ostream& os) { write_diagnostics_csv(suite, os); });
}

}  // namespace regretlab
