#include <doctest.h>

#include <cstdlib>

#include "regretlab/config.hpp"

using namespace regretlab;

namespace {

const char* const kGlobals = "dim = 2\nbudget = 1e6\nreplicates = 10\nseed = 7\n";

std::string joined_errors(const ParsedConfig& parsed) {
  std::string all;
  for (const ConfigError& e : parsed.errors) all += e.format() + "\n";
  return all;
}

}  // namespace

TEST_CASE("minimal config") {
  const ParsedConfig parsed = parse_config(std::string(kGlobals) + "[algorithm random_search]\n");
  REQUIRE(parsed.ok());
  REQUIRE(parsed.specs.size() == 1);
  const ExperimentSpec& s = parsed.specs[0];
  CHECK(s.algorithm.label == "random_search");
  CHECK(std::holds_alternative<RandomSearchConfig>(s.algorithm.params));
  CHECK(s.dimension == 2);
  CHECK(s.budget == 1'000'000);
  CHECK(s.replicates == 10);
  CHECK(s.master_seed == 7);
  CHECK(s.noise_std == 0.3);
  CHECK(s.regret == RegretConfig{});
}

TEST_CASE("algorithm sections and parameters") {
  const std::string text = std::string(kGlobals) +
                           "# resampled ES\n"
                           "[algorithm es es_resamp]\n"
                           "resample_kind = exponential\n"
                           "resample_R = 1\n"
                           "resample_zeta = 2   # doubling\n"
                           "\n"
                           "[algorithm fabian]\n"
                           "s = 6\n"
                           "gamma = 0.1\n"
                           "probe_period = 2\n";
  const ParsedConfig parsed = parse_config(text);
  REQUIRE_MESSAGE(parsed.ok(), joined_errors(parsed));
  REQUIRE(parsed.specs.size() == 2);
  const auto& es = std::get<EsConfig>(parsed.specs[0].algorithm.params);
  CHECK(parsed.specs[0].algorithm.label == "es_resamp");
  CHECK(es.schedule == ResamplingSchedule::exponential(1.0, 2.0));
  const auto& fb = std::get<FabianConfig>(parsed.specs[1].algorithm.params);
  CHECK(fb.s == 6);
  CHECK(fb.gamma == 0.1);
  CHECK(parsed.specs[1].algorithm.probe_period == 2);
}

TEST_CASE("invalid parameters are reported with line numbers") {
  SUBCASE("gamma out of range") {
    const ParsedConfig p = parse_config(std::string(kGlobals) + "[algorithm fabian]\ngamma = 0.6\n");
    REQUIRE(p.errors.size() == 1);
    CHECK(p.errors[0].line == 5);
    CHECK(p.errors[0].message.find("0 < gamma < 1/2") != std::string::npos);
    CHECK(p.specs.empty());
  }
  SUBCASE("odd s") {
    const ParsedConfig p = parse_config(std::string(kGlobals) + "[algorithm fabian]\ns = 3\n");
    REQUIRE_FALSE(p.ok());
    CHECK(joined_errors(p).find("s must be even") != std::string::npos);
  }
  SUBCASE("unknown and misplaced keys") {
    const ParsedConfig p = parse_config(std::string(kGlobals) +
                                        "colour = red\n"
                                        "[algorithm shamir]\n"
                                        "sigma0 = 2\n"
                                        "epsilon = 0.3\n"
                                        "epsilon = 0.4\n"
                                        "budget = 10\n");
    REQUIRE(p.errors.size() == 4);
    CHECK(p.errors[0].line == 5);
    CHECK(p.errors[0].message == "unknown key 'colour'");
    CHECK(p.errors[1].message == "key 'sigma0' does not apply to algorithm shamir");
    CHECK(p.errors[2].message == "duplicate key 'epsilon'");
    CHECK(p.errors[3].line == 10);
  }
  SUBCASE("malformed lines and values") {
    const ParsedConfig p = parse_config(std::string(kGlobals) +
                                        "noise_std = abc\n"
                                        "just words\n"
                                        "[algorithm nelder_mead]\n"
                                        "[algorithm es\n");
    CHECK(p.errors.size() == 4);
    CHECK(p.errors[0].format().starts_with("line 5: "));
  }
  SUBCASE("non-integer budget") {
    const ParsedConfig p =
        parse_config("dim = 2\nbudget = 100.5\nreplicates = 1\nseed = 1\n[algorithm es]\n");
    CHECK_FALSE(p.ok());
  }
  SUBCASE("duplicate labels") {
    const ParsedConfig p =
        parse_config(std::string(kGlobals) + "[algorithm es]\n[algorithm es]\n");
    CHECK(joined_errors(p).find("duplicate algorithm label 'es'") != std::string::npos);
  }
}

TEST_CASE("missing keys and the seed fallback") {
  const ParsedConfig none = parse_config("[algorithm es]\n");
  CHECK(none.errors.size() == 4);
  const std::string text = "dim = 2\nbudget = 1000\nreplicates = 2\n[algorithm es]\n";
  CHECK_FALSE(parse_config(text).ok());
  ParseOptions options;
  options.default_seed = 99;
  const ParsedConfig with_default = parse_config(text, options);
  REQUIRE(with_default.ok());
  CHECK(with_default.specs[0].master_seed == 99);
  // An explicit seed wins over the default.
  CHECK(parse_config(std::string(kGlobals) + "[algorithm es]\n", options).specs[0].master_seed == 7);

  ::setenv("REGRETLAB_SEED", "1234", 1);
  CHECK(seed_from_environment() == 1234u);
  ::setenv("REGRETLAB_SEED", "12x", 1);
  CHECK_FALSE(seed_from_environment().has_value());
  ::unsetenv("REGRETLAB_SEED");
  CHECK_FALSE(seed_from_environment().has_value());
}

TEST_CASE("serialize then parse is a fixed point") {
  const std::string text = std::string(kGlobals) +
                           "noise_std = 0.1\n"
                           "g_exponent = 1.5\n"
                           "quantile = 0.9\n"
                           "[algorithm random_search]\n"
                           "[algorithm es es_const]\n"
                           "resample_kind = constant\n"
                           "resample_R = 5\n"
                           "repeat_g = true\n"
                           "[algorithm es mes_r]\n"
                           "resample_kind = exponential\n"
                           "resample_R = 1.1\n"
                           "resample_zeta = 1.7\n"
                           "fake_offspring = true\n"
                           "[algorithm shamir]\n"
                           "epsilon = 0.123456789\n"
                           "probe_period = 3\n"
                           "[algorithm fabian]\n"
                           "a = 0.7\n";
  const ParsedConfig first = parse_config(text);
  REQUIRE_MESSAGE(first.ok(), joined_errors(first));
  const std::string serialized = serialize_config(first.specs);
  const ParsedConfig second = parse_config(serialized);
  REQUIRE_MESSAGE(second.ok(), joined_errors(second));
  CHECK(second.specs == first.specs);
  CHECK(serialize_config(second.specs) == serialized);

  CHECK_THROWS_AS(serialize_config({}), std::invalid_argument);
  std::vector<ExperimentSpec> mixed = first.specs;
  mixed[1].budget = 5;
  CHECK_THROWS_AS(serialize_config(mixed), std::invalid_argument);
}
