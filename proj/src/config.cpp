#include "regretlab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <system_error>

#include <fmt/format.h>

namespace regretlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                    ch == '_' || ch == '-' || ch == '.';
    if (!ok) return false;
  }
  return true;
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw std::invalid_argument(fmt::format("malformed number '{}'", text));
  }
  return value;
}

// Integers may be written as 1000000 or 1e6; the value must be exact.
std::uint64_t parse_count(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc{} && ptr == text.data() + text.size()) return value;
  const double real = parse_real(text);
  if (real < 0.0 || real != std::floor(real) || real > 9007199254740992.0) {
    throw std::invalid_argument(fmt::format("expected a nonnegative integer, got '{}'", text));
  }
  return static_cast<std::uint64_t>(real);
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw std::invalid_argument(fmt::format("expected true or false, got '{}'", text));
}

struct Section {
  std::size_t line = 0;
  AlgorithmSpec algorithm;
  std::set<std::string, std::less<>> seen;
  std::optional<std::string> resample_kind;
  std::optional<double> resample_r;
  std::optional<double> resample_zeta;
};

const std::set<std::string_view> kGlobalKeys = {
    "suite_id",  "dim",        "noise_std", "budget",          "replicates",
    "seed",      "g_exponent", "quantile",  "checkpoints_per_decade", "g_constant",
    "window_fraction"};

const std::map<std::string_view, std::string_view> kAlgorithmKeys = {
    {"sigma0", "es"},          {"resample_kind", "es"},  {"resample_R", "es"},
    {"resample_zeta", "es"},   {"fake_offspring", "es"}, {"success_up", "es"},
    {"failure_down", "es"},    {"epsilon", "shamir"},    {"lambda_step", "shamir"},
    {"ball_radius", "shamir"}, {"s", "fabian"},          {"a", "fabian"},
    {"alpha", "fabian"},       {"c", "fabian"},          {"gamma", "fabian"},
    {"probe_period", ""},      {"repeat_g", ""}};

void apply_algorithm_key(Section& section, std::string_view key, std::string_view value) {
  AlgorithmSpec& alg = section.algorithm;
  if (key == "probe_period") {
    alg.probe_period = parse_count(value);
    return;
  }
  if (key == "repeat_g") {
    alg.repeat_g = parse_bool(value);
    return;
  }
  if (auto* es = std::get_if<EsConfig>(&alg.params)) {
    if (key == "sigma0") es->sigma0 = parse_real(value);
    else if (key == "resample_kind") section.resample_kind = std::string(value);
    else if (key == "resample_R") section.resample_r = parse_real(value);
    else if (key == "resample_zeta") section.resample_zeta = parse_real(value);
    else if (key == "fake_offspring") es->fake_offspring = parse_bool(value);
    else if (key == "success_up") es->success_up = parse_real(value);
    else if (key == "failure_down") es->failure_down = parse_real(value);
  } else if (auto* sh = std::get_if<ShamirConfig>(&alg.params)) {
    if (key == "epsilon") sh->epsilon = parse_real(value);
    else if (key == "lambda_step") sh->lambda_step = parse_real(value);
    else if (key == "ball_radius") sh->ball_radius = parse_real(value);
  } else if (auto* fb = std::get_if<FabianConfig>(&alg.params)) {
    if (key == "s") fb->s = parse_count(value);
    else if (key == "a") fb->a = parse_real(value);
    else if (key == "alpha") fb->alpha = parse_real(value);
    else if (key == "c") fb->c = parse_real(value);
    else if (key == "gamma") fb->gamma = parse_real(value);
  }
}

// Builds the resampling schedule once the whole section has been read.
void finish_schedule(Section& section) {
  auto* es = std::get_if<EsConfig>(&section.algorithm.params);
  if (es == nullptr) return;
  const std::string kind = section.resample_kind.value_or("none");
  if (kind == "none") {
    if (section.resample_r || section.resample_zeta) {
      throw std::invalid_argument("resample_R/resample_zeta need resample_kind constant or exponential");
    }
    es->schedule = ResamplingSchedule::none();
  } else if (kind == "constant") {
    if (section.resample_zeta) throw std::invalid_argument("resample_zeta needs resample_kind exponential");
    const double k = section.resample_r.value_or(1.0);
    if (k < 1.0 || k != std::floor(k)) {
      throw std::invalid_argument("constant resampling needs an integer resample_R >= 1");
    }
    es->schedule = ResamplingSchedule::constant_count(static_cast<std::size_t>(k));
  } else if (kind == "exponential") {
    es->schedule = ResamplingSchedule::exponential(section.resample_r.value_or(1.0),
                                                   section.resample_zeta.value_or(2.0));
  } else {
    throw std::invalid_argument(
        fmt::format("resample_kind must be none, constant or exponential, got '{}'", kind));
  }
}

}  // namespace

std::string ConfigError::format() const {
  return line == 0 ? message : fmt::format("line {}: {}", line, message);
}

ParsedConfig parse_config(std::string_view text, const ParseOptions& options) {
  ParsedConfig out;
  ExperimentSpec globals;
  std::set<std::string, std::less<>> global_seen;
  std::vector<Section> sections;
  std::set<std::string, std::less<>> labels;

  auto error = [&](std::size_t line, std::string message) {
    out.errors.push_back({line, std::move(message)});
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        error(line_no, "unterminated section header");
        continue;
      }
      std::vector<std::string_view> words;
      std::string_view body = trim(line.substr(1, line.size() - 2));
      while (!body.empty()) {
        const auto space = body.find_first_of(" \t");
        words.push_back(body.substr(0, space));
        body = space == std::string_view::npos ? std::string_view{} : trim(body.substr(space));
      }
      if (words.empty() || words[0] != "algorithm" || words.size() < 2 || words.size() > 3) {
        error(line_no, "section header must be [algorithm <kind> [label]]");
        continue;
      }
      auto params = default_params(words[1]);
      if (!params) {
        error(line_no, fmt::format("unknown algorithm '{}' (expected random_search, es, shamir or fabian)",
                                   words[1]));
        sections.push_back({line_no, {"", RandomSearchConfig{}, std::nullopt, false}, {}, {}, {}, {}});
        sections.back().seen.insert("<invalid>");
        continue;
      }
      const std::string_view label = words.size() == 3 ? words[2] : words[1];
      if (!is_identifier(label)) {
        error(line_no, fmt::format("label '{}' may only contain letters, digits, '_', '-' and '.'", label));
      } else if (!labels.insert(std::string(label)).second) {
        error(line_no, fmt::format("duplicate algorithm label '{}'", label));
      }
      sections.push_back({line_no, {std::string(label), *params, std::nullopt, false}, {}, {}, {}, {}});
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      error(line_no, "expected 'key = value'");
      continue;
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) {
      error(line_no, fmt::format("missing value for '{}'", key));
      continue;
    }

    try {
      if (kGlobalKeys.contains(key)) {
        if (!sections.empty()) {
          throw std::invalid_argument(
              fmt::format("global key '{}' must come before the first [algorithm] section", key));
        }
        if (!global_seen.insert(std::string(key)).second) {
          throw std::invalid_argument(fmt::format("duplicate key '{}'", key));
        }
        if (key == "suite_id") {
          if (!is_identifier(value)) {
            throw std::invalid_argument("suite_id may only contain letters, digits, '_', '-' and '.'");
          }
          globals.suite_id = std::string(value);
        } else if (key == "dim") {
          globals.dimension = parse_count(value);
        } else if (key == "noise_std") {
          globals.noise_std = parse_real(value);
        } else if (key == "budget") {
          globals.budget = parse_count(value);
        } else if (key == "replicates") {
          globals.replicates = parse_count(value);
        } else if (key == "seed") {
          globals.master_seed = parse_count(value);
        } else if (key == "checkpoints_per_decade") {
          globals.checkpoints_per_decade = parse_count(value);
        } else if (key == "g_exponent") {
          globals.regret.g_exponent = parse_real(value);
        } else if (key == "quantile") {
          globals.regret.quantile = parse_real(value);
        } else if (key == "g_constant") {
          globals.regret.constant_window = parse_count(value);
        } else if (key == "window_fraction") {
          globals.window_fraction = parse_real(value);
        }
        continue;
      }
      const auto found = kAlgorithmKeys.find(key);
      if (found == kAlgorithmKeys.end()) throw std::invalid_argument(fmt::format("unknown key '{}'", key));
      if (sections.empty()) {
        throw std::invalid_argument(fmt::format("key '{}' belongs in an [algorithm] section", key));
      }
      Section& section = sections.back();
      if (section.seen.contains("<invalid>")) continue;
      const std::string_view kind = kind_name(section.algorithm.params);
      if (!found->second.empty() && found->second != kind) {
        throw std::invalid_argument(fmt::format("key '{}' does not apply to algorithm {}", key, kind));
      }
      if (!section.seen.insert(std::string(key)).second) {
        throw std::invalid_argument(fmt::format("duplicate key '{}'", key));
      }
      apply_algorithm_key(section, key, value);
    } catch (const std::invalid_argument& e) {
      error(line_no, e.what());
    }
  }

  for (std::string_view required : {"dim", "budget", "replicates"}) {
    if (!global_seen.contains(required)) error(0, fmt::format("missing required key '{}'", required));
  }
  if (!global_seen.contains("seed")) {
    if (options.default_seed) {
      globals.master_seed = *options.default_seed;
    } else {
      error(0, "missing required key 'seed' (or set REGRETLAB_SEED)");
    }
  }
  if (!out.errors.empty()) return out;

  for (Section& section : sections) {
    if (section.seen.contains("<invalid>")) continue;
    try {
      finish_schedule(section);
      ExperimentSpec spec = globals;
      spec.algorithm = section.algorithm;
      spec.validate();
      out.specs.push_back(std::move(spec));
    } catch (const std::invalid_argument& e) {
      error(section.line, fmt::format("[algorithm {}]: {}", section.algorithm.label, e.what()));
    }
  }
  if (sections.empty()) {
    // Globals are still checked so a section-less file is not silently wrong.
    try {
      ExperimentSpec probe = globals;
      probe.algorithm = {"check", RandomSearchConfig{}, std::nullopt, false};
      probe.validate();
    } catch (const std::invalid_argument& e) {
      error(0, e.what());
    }
  }
  if (!out.errors.empty()) out.specs.clear();
  return out;
}

std::string serialize_config(const std::vector<ExperimentSpec>& specs) {
  if (specs.empty()) throw std::invalid_argument("serialize_config: no specs");
  const ExperimentSpec& g = specs.front();
  for (const ExperimentSpec& s : specs) {
    const bool same = s.suite_id == g.suite_id && s.dimension == g.dimension &&
                      s.noise_std == g.noise_std && s.budget == g.budget &&
                      s.replicates == g.replicates && s.master_seed == g.master_seed &&
                      s.checkpoints_per_decade == g.checkpoints_per_decade && s.regret == g.regret &&
                      s.window_fraction == g.window_fraction;
    if (!same) throw std::invalid_argument("serialize_config: specs disagree on global settings");
  }

  std::string out;
  auto line = [&out](std::string_view key, const auto& value) {
    out += fmt::format("{} = {}\n", key, value);
  };
  line("suite_id", g.suite_id);
  line("dim", g.dimension);
  line("noise_std", g.noise_std);
  line("budget", g.budget);
  line("replicates", g.replicates);
  line("seed", g.master_seed);
  line("checkpoints_per_decade", g.checkpoints_per_decade);
  line("g_exponent", g.regret.g_exponent);
  line("quantile", g.regret.quantile);
  if (g.regret.constant_window) line("g_constant", *g.regret.constant_window);
  line("window_fraction", g.window_fraction);

  for (const ExperimentSpec& s : specs) {
    const AlgorithmSpec& alg = s.algorithm;
    out += fmt::format("\n[algorithm {} {}]\n", kind_name(alg.params), alg.label);
    if (const auto* es = std::get_if<EsConfig>(&alg.params)) {
      line("sigma0", es->sigma0);
      line("success_up", es->success_up);
      line("failure_down", es->failure_down);
      switch (es->schedule.kind) {
        case ResamplingSchedule::Kind::none:
          line("resample_kind", "none");
          break;
        case ResamplingSchedule::Kind::constant:
          line("resample_kind", "constant");
          line("resample_R", es->schedule.constant);
          break;
        case ResamplingSchedule::Kind::exponential:
          line("resample_kind", "exponential");
          line("resample_R", es->schedule.base);
          line("resample_zeta", es->schedule.growth);
          break;
      }
      line("fake_offspring", es->fake_offspring ? "true" : "false");
    } else if (const auto* sh = std::get_if<ShamirConfig>(&alg.params)) {
      line("epsilon", sh->epsilon);
      line("lambda_step", sh->lambda_step);
      line("ball_radius", sh->ball_radius);
    } else if (const auto* fb = std::get_if<FabianConfig>(&alg.params)) {
      line("s", fb->s);
      line("a", fb->a);
      line("alpha", fb->alpha);
      line("c", fb->c);
      line("gamma", fb->gamma);
    }
    if (alg.probe_period) line("probe_period", *alg.probe_period);
    if (alg.repeat_g) line("repeat_g", "true");
  }
  return out;
}

std::optional<std::uint64_t> seed_from_environment() {
  const char* raw = std::getenv("REGRETLAB_SEED");
  if (raw == nullptr) return std::nullopt;
  try {
    return parse_count(trim(raw));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace regretlab
