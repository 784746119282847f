#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regretlab/harness.hpp"

namespace regretlab {

// Suite configuration text:
//
//   # comment
//   suite_id = custom
//   dim = 2
//   budget = 1e6
//   replicates = 10
//   seed = 7
//
//   [algorithm es es_resamp]     # kind, then an optional label (defaults to the kind)
//   resample_kind = exponential
//   resample_R = 1
//   resample_zeta = 2
//
// Global keys come before the first section; each section yields one ExperimentSpec.

struct ConfigError {
  std::size_t line = 0;  // 1-based; 0 for errors about the file as a whole
  std::string message;

  std::string format() const;
};

struct ParseOptions {
  // Used when the text has no `seed` key; without it `seed` is required.
  std::optional<std::uint64_t> default_seed;
};

struct ParsedConfig {
  std::vector<ExperimentSpec> specs;
  std::vector<ConfigError> errors;

  bool ok() const { return errors.empty(); }
};

ParsedConfig parse_config(std::string_view text, const ParseOptions& options = {});

/// Text that parses back to `specs`. All specs must share the global settings.
/// Throws std::invalid_argument if they do not, or if `specs` is empty.
std::string serialize_config(const std::vector<ExperimentSpec>& specs);

/// REGRETLAB_SEED from the environment, if set to a valid unsigned integer.
std::optional<std::uint64_t> seed_from_environment();

}  // namespace regretlab
