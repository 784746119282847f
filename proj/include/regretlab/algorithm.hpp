#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "regretlab/evolution_strategy.hpp"
#include "regretlab/fabian.hpp"
#include "regretlab/optimizer.hpp"
#include "regretlab/random_search.hpp"
#include "regretlab/regret_config.hpp"
#include "regretlab/shamir.hpp"
#include "regretlab/wrappers.hpp"

namespace regretlab {

struct RandomSearchConfig {
  friend bool operator==(const RandomSearchConfig&, const RandomSearchConfig&) = default;
};

using AlgorithmParams = std::variant<RandomSearchConfig, EsConfig, ShamirConfig, FabianConfig>;

/// Algorithm family name: random_search, es, shamir or fabian.
std::string_view kind_name(const AlgorithmParams& params);

/// Default parameters for a family name; std::nullopt for unknown names.
std::optional<AlgorithmParams> default_params(std::string_view kind);

/// One algorithm setup of a suite: the label names it in outputs.
struct AlgorithmSpec {
  std::string label;
  AlgorithmParams params;
  std::optional<std::size_t> probe_period;  // probe-recommendation wrapper when set
  bool repeat_g = false;                    // repetition wrapper when set

  void validate() const;

  friend bool operator==(const AlgorithmSpec&, const AlgorithmSpec&) = default;
};

/// Builds the optimizer, applying the repetition wrapper first and the probe wrapper outermost.
/// `regret` supplies g for the repetition wrapper.
std::unique_ptr<Optimizer> make_optimizer(const AlgorithmSpec& spec, std::size_t dimension,
                                          std::uint64_t seed, const RegretConfig& regret);

}  // namespace regretlab
