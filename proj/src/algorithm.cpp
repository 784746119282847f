#include "regretlab/algorithm.hpp"

#include <stdexcept>

namespace regretlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view kind_name(const AlgorithmParams& params) {
  return std::visit(overloaded{
                        [](const RandomSearchConfig&) { return std::string_view("random_search"); },
                        [](const EsConfig&) { return std::string_view("es"); },
                        [](const ShamirConfig&) { return std::string_view("shamir"); },
                        [](const FabianConfig&) { return std::string_view("fabian"); },
                    },
                    params);
}

std::optional<AlgorithmParams> default_params(std::string_view kind) {
  if (kind == "random_search") return RandomSearchConfig{};
  if (kind == "es") return EsConfig{};
  if (kind == "shamir") return ShamirConfig{};
  if (kind == "fabian") return FabianConfig{};
  return std::nullopt;
}

void AlgorithmSpec::validate() const {
  if (label.empty()) throw std::invalid_argument("algorithm label must not be empty");
  std::visit(overloaded{
                 [](const RandomSearchConfig&) {},
                 [](const auto& cfg) { cfg.validate(); },
             },
             params);
  if (probe_period && *probe_period < 2) throw std::invalid_argument("probe_period must be >= 2");
}

std::unique_ptr<Optimizer> make_optimizer(const AlgorithmSpec& spec, std::size_t dimension,
                                          std::uint64_t seed, const RegretConfig& regret) {
  spec.validate();
  std::unique_ptr<Optimizer> opt = std::visit(
      overloaded{
          [&](const RandomSearchConfig&) -> std::unique_ptr<Optimizer> {
            return std::make_unique<RandomSearch>(dimension, seed);
          },
          [&](const EsConfig& cfg) -> std::unique_ptr<Optimizer> {
            return std::make_unique<EvolutionStrategy>(dimension, seed, cfg);
          },
          [&](const ShamirConfig& cfg) -> std::unique_ptr<Optimizer> {
            return std::make_unique<Shamir>(dimension, seed, cfg);
          },
          [&](const FabianConfig& cfg) -> std::unique_ptr<Optimizer> {
            return std::make_unique<Fabian>(dimension, seed, cfg);
          },
      },
      spec.params);
  if (spec.repeat_g) opt = std::make_unique<RepeatWrapper>(std::move(opt), regret);
  if (spec.probe_period) opt = std::make_unique<ProbeWrapper>(std::move(opt), *spec.probe_period);
  return opt;
}

}  // namespace regretlab
