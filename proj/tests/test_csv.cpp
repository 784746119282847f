#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "regretlab/csv.hpp"

using namespace regretlab;

namespace {

SuiteResult tiny_suite() {
  ExperimentSpec spec;
  spec.algorithm = {"es", EsConfig{}, std::nullopt, false};
  spec.budget = 100;
  spec.replicates = 1;
  spec.checkpoints_per_decade = 1;
  return run_suite({spec});
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("regret CSV layout") {
  const SuiteResult suite = tiny_suite();
  std::ostringstream out;
  write_regret_csv(suite, out);
  const std::string text = out.str();
  CHECK(count_lines(text) == 4);
  CHECK(text.starts_with(std::string(kRegretCsvHeader) + "\n"));
  CHECK(text.find("\ncustom,es,2,0.29999999999999999,0,1,") != std::string::npos);
  const auto rows = regret_rows(suite);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].eval_index == 1);
  CHECK(rows[1].eval_index == 10);
  CHECK(rows[2].eval_index == 100);
}

TEST_CASE("regret CSV round trip is bit-exact") {
  ExperimentSpec a;
  a.algorithm = {"shamir", ShamirConfig{}, std::nullopt, false};
  a.budget = 3'000;
  a.replicates = 2;
  ExperimentSpec b = a;
  b.algorithm = {"random_search", RandomSearchConfig{}, std::nullopt, false};
  const SuiteResult suite = run_suite({a, b});
  std::stringstream io;
  write_regret_csv(suite, io);
  const auto back = read_regret_csv(io);
  CHECK(back == regret_rows(suite));
  // Sorted by algorithm first.
  CHECK(back.front().algorithm == "random_search");

  const auto direct = slope_summary(suite);
  const auto rebuilt = slopes_from_rows(back, a.window_fraction);
  REQUIRE(direct.size() == rebuilt.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(direct[i].algorithm == rebuilt[i].algorithm);
    CHECK(direct[i].kind == rebuilt[i].kind);
    CHECK(direct[i].aggregation == rebuilt[i].aggregation);
    CHECK(direct[i].estimate.slope == rebuilt[i].estimate.slope);
    CHECK(direct[i].estimate.n_lo == rebuilt[i].estimate.n_lo);
  }
}

TEST_CASE("malformed CSV input names the line") {
  std::istringstream bad_header("a,b\n");
  CHECK_THROWS_AS(read_regret_csv(bad_header), std::runtime_error);
  std::istringstream bad_row(std::string(kRegretCsvHeader) + "\nfig1,es,2,0.3,0,1,x,1,1\n");
  CHECK_THROWS_WITH(read_regret_csv(bad_row), doctest::Contains("line 2"));
  std::istringstream short_row(std::string(kRegretCsvHeader) + "\nfig1,es,2\n");
  CHECK_THROWS_AS(read_regret_csv(short_row), std::runtime_error);
}

TEST_CASE("slope summary of the built-in suite has 30 rows") {
  const SuiteResult suite = run_suite(fig1_suite(1, 2'000), 0);
  REQUIRE(suite.failures.empty());
  const auto rows = slope_summary(suite);
  CHECK(rows.size() == 30);
  std::ostringstream out;
  write_slope_summary(rows, out);
  CHECK(count_lines(out.str()) == 31);
  CHECK(out.str().starts_with(std::string(kSlopeCsvHeader) + "\n"));
  for (const auto& r : rows) {
    CHECK(r.estimate.n_lo >= 20);
    CHECK(r.estimate.n_hi == 2'000);
  }
}

TEST_CASE("write_outputs creates all files") {
  const auto dir = std::filesystem::temp_directory_path() / "regretlab_csv_test";
  std::filesystem::remove_all(dir);
  write_outputs(tiny_suite(), dir);
  for (const char* name : {"regret.csv", "slopes.csv", "aggregate.csv", "diagnostics.csv"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  std::filesystem::remove_all(dir);
}
