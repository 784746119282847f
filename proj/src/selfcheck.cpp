#include "regretlab/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "regretlab/harness.hpp"

namespace regretlab {

namespace {

bool bit_equal(const RegretSeries& a, const RegretSeries& b) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].n != b.points[i].n) return false;
    if (std::bit_cast<std::uint64_t>(a.points[i].value) != std::bit_cast<std::uint64_t>(b.points[i].value)) {
      return false;
    }
  }
  return true;
}

Vector uniform_point(std::size_t d, RandomStream& stream) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector x(d);
  for (double& v : x) v = unit(stream);
  return x;
}

// Recommendations stick for random stretches and sometimes return to an earlier point, so
// windows contain runs of equal values as well as distinct ones.
RunTrace random_trace(std::size_t n, std::size_t d, RandomStream& stream) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RunTrace trace;
  std::vector<Vector> history{uniform_point(d, stream)};
  Vector rec = history.front();
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit(stream);
    if (u < 0.2) {
      rec = uniform_point(d, stream);
      history.push_back(rec);
    } else if (u < 0.3) {
      rec = history[std::uniform_int_distribution<std::size_t>(0, history.size() - 1)(stream)];
    }
    trace.append(uniform_point(d, stream), unit(stream), rec);
  }
  return trace;
}

CheckResult check_rsr_equivalence(std::uint64_t seed) {
  RandomStream stream(child_seed(seed, 11));
  std::uniform_int_distribution<std::size_t> length(1, 10'000);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  const double exponents[] = {1.0, 2.0};
  const double quantiles[] = {0.5, 0.9, 1.0};
  std::size_t mismatches = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t n = t < 3 ? t + 1 : length(stream);
    const std::size_t d = dim(stream);
    RegretConfig cfg;
    cfg.g_exponent = exponents[t % 2];
    cfg.quantile = quantiles[(t / 2) % 3];
    const ProblemInstance problem = make_sphere_problem(d, 0.3, child_seed(seed, 1000 + t));
    const RunTrace trace = random_trace(n, d, stream);
    if (!bit_equal(rsr_stream(problem, trace, cfg), rsr_oracle(problem, trace, cfg))) ++mismatches;
  }
  return {"rsr_stream equals rsr_oracle bit-exactly on 100 random traces", mismatches == 0,
          fmt::format("{} mismatching traces", mismatches)};
}

// With a constant window c, each base point is repeated 1 + c times, so the window ending at
// the last copy of base point n holds only that point and RSR(e_n) <= ASR_base(n).
CheckResult check_repeat_wrapper(std::uint64_t seed) {
  const char* kinds[] = {"random_search", "es", "shamir", "fabian"};
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    const std::size_t c = 1 + t % 4;
    RegretConfig cfg;
    cfg.constant_window = c;
    const AlgorithmSpec spec{"base", *default_params(kinds[(t / 4) % 4]), std::nullopt, true};
    const std::size_t d = 1 + t % 3;
    const ProblemInstance problem = make_sphere_problem(d, 0.3, child_seed(seed, 2000 + t));
    auto wrapped = make_optimizer(spec, d, child_seed(seed, 3000 + t), cfg);
    const std::size_t base_points = 200;
    const RunTrace trace =
        record_trace(*wrapped, problem, base_points * (1 + c), child_seed(seed, 4000 + t));
    const RegretSeries rsr = rsr_stream(problem, trace, cfg);
    const double f_star = true_value(problem, problem.optimum());
    double base_asr = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= base_points; ++n) {
      const std::size_t first = (n - 1) * (1 + c) + 1;
      base_asr = std::min(base_asr, true_value(problem, trace.evaluation(first).search_point) - f_star);
      const std::size_t e_n = n * (1 + c);
      ++checked;
      if (rsr.value_at(e_n) > base_asr) ++violations;
    }
  }
  return {"repetition wrapper: RSR(e_n) <= base ASR(n) on 100 traces", violations == 0,
          fmt::format("{} violations in {} comparisons", violations, checked)};
}

CheckResult check_fabian_weights() {
  double worst = 0.0;
  for (std::size_t s : {2, 4, 6, 8}) worst = std::max(worst, fabian_weights_residual(fabian_weights(s)));
  const Vector v4 = fabian_weights(4);
  const double err4 = std::max(std::abs(v4[0] + 1.0 / 6.0), std::abs(v4[1] - 4.0 / 3.0));
  return {"Fabian weights: residual <= 1e-10 (s = 2..8), s = 4 gives (-1/6, 4/3)",
          worst <= 1e-10 && err4 <= 1e-12,
          fmt::format("max residual {:.3g}, s=4 error {:.3g}", worst, err4)};
}

CheckResult check_shamir_geometry(std::uint64_t seed) {
  double worst_probe = 0.0;
  double worst_radius = 0.0;
  std::size_t projected = 0;
  for (std::size_t d : {1, 2, 5}) {
    for (int far = 0; far < 2; ++far) {
      // far: the optimum lies outside the ball, so projection is exercised.
      const double scale = far != 0 ? 10.0 : 1.0;
      RandomStream stream(child_seed(seed, 5000 + d * 2 + far));
      Vector optimum = uniform_point(d, stream);
      for (double& v : optimum) v = far != 0 ? 5.0 + v : v;
      const ProblemInstance problem(optimum, 0.3, Vector(d, 0.0), Vector(d, scale));
      const ShamirConfig cfg;
      Shamir shamir(d, child_seed(seed, 6000 + d), cfg);
      NoisyBlackBox box(problem, child_seed(seed, 7000 + d));
      for (std::size_t n = 0; n < 10'000; ++n) {
        const Vector x = shamir.ask(1).front();
        const Vector centre = shamir.center();
        worst_probe = std::max(worst_probe, std::abs(distance(x, centre) - cfg.epsilon));
        worst_radius = std::max(worst_radius, norm(centre) - cfg.ball_radius);
        if (std::abs(norm(centre) - cfg.ball_radius) < 1e-9) ++projected;
        const double y = box.evaluate(x);
        shamir.tell(std::span<const double>(&y, 1));
      }
    }
  }
  return {"Shamir probes sit eps from the centre and centres stay in the ball",
          worst_probe <= 1e-12 && worst_radius <= 1e-12,
          fmt::format("max | ||x - c|| - eps | = {:.3g}, max ||c|| - B = {:.3g}, {} centres on the sphere",
                      worst_probe, worst_radius, projected)};
}

std::vector<ExperimentSpec> accounting_specs(std::uint64_t seed) {
  std::vector<ExperimentSpec> specs = fig1_suite(seed, 20'011);
  EsConfig mes;
  mes.schedule = ResamplingSchedule::exponential(1.0, 2.0);
  mes.fake_offspring = true;
  ExperimentSpec extra = specs.front();
  extra.algorithm = {"mes_r", mes, std::nullopt, false};
  specs.push_back(extra);
  extra.algorithm = {"shamir_probe", ShamirConfig{}, 2, false};
  specs.push_back(extra);
  extra.algorithm = {"es_repeat", EsConfig{}, std::nullopt, true};
  specs.push_back(extra);
  for (ExperimentSpec& s : specs) {
    s.replicates = 2;
    s.dimension = s.algorithm.label == "fabian" ? 3 : 2;
  }
  return specs;
}

}  // namespace

std::vector<CheckResult> run_property_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;
  auto guarded = [&out](const std::string& name, auto&& check) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back({name, false, fmt::format("threw: {}", e.what())});
    }
  };

  guarded("rsr equivalence", [&] { return check_rsr_equivalence(seed); });
  guarded("repetition wrapper", [&] { return check_repeat_wrapper(seed); });
  guarded("Fabian weights", [] { return check_fabian_weights(); });
  guarded("Shamir geometry", [&] { return check_shamir_geometry(seed); });

  guarded("harness runs", [&] {
    // Odd budgets leave a truncated final batch for the batched algorithms.
    std::size_t bad_counts = 0;
    std::size_t non_monotone = 0;
    std::size_t asr_mismatch = 0;
    std::size_t rsr_mismatch = 0;
    std::size_t series = 0;
    for (const ExperimentSpec& spec : accounting_specs(seed)) {
      for (std::size_t r = 0; r < spec.replicates; ++r) {
        const ReplicateResult rep = run_single(spec, r, RunOptions{10'000});
        if (rep.evaluations != spec.budget) ++bad_counts;
        for (const RegretSeries* s : {&rep.asr, &rep.rsr}) {
          ++series;
          try {
            require_non_increasing(*s);
          } catch (const std::logic_error&) {
            ++non_monotone;
          }
        }
        const ProblemInstance problem(rep.optimum, spec.noise_std);
        const RegretSeries asr_full = asr_stream(problem, rep.prefix);
        const RegretSeries rsr_full = rsr_oracle(problem, rep.prefix, spec.regret);
        for (std::size_t i = 0; i < rep.rsr.points.size() && rep.rsr.points[i].n <= rep.prefix.size(); ++i) {
          const std::size_t n = rep.rsr.points[i].n;
          if (rep.asr.points[i].value != asr_full.value_at(n)) ++asr_mismatch;
          if (rep.rsr.points[i].value != rsr_full.value_at(n)) ++rsr_mismatch;
        }
      }
    }
    out.push_back({"evaluation accounting exact for every algorithm", bad_counts == 0,
                   fmt::format("{} runs with a wrong evaluation count", bad_counts)});
    out.push_back({"ASR and RSR never increase on produced series", non_monotone == 0,
                   fmt::format("{} of {} series increase somewhere", non_monotone, series)});
    return CheckResult{"harness checkpoints match direct ASR/RSR on the first 10^4 evaluations",
                       asr_mismatch == 0 && rsr_mismatch == 0,
                       fmt::format("{} ASR and {} RSR mismatches", asr_mismatch, rsr_mismatch)};
  });

  guarded("slope recovery", [] {
    double worst = 0.0;
    const std::vector<std::size_t> checkpoints = log_spaced_checkpoints(1'000'000, 20);
    for (double beta : {0.0, 0.5, 1.0, 1.5}) {
      RegretSeries s{RegretKind::sr, {}};
      for (std::size_t n : checkpoints) s.points.push_back({n, 3.0 * std::pow(static_cast<double>(n), -beta)});
      const SlopeEstimate est = estimate_slope(s, 10'000, 1'000'000);
      worst = std::max(worst, std::abs(est.slope + beta));
    }
    return CheckResult{"slope estimator recovers n^-beta exponents (beta = 0, 0.5, 1, 1.5)", worst <= 1e-9,
                       fmt::format("max error {:.3g}", worst)};
  });
  return out;
}

std::vector<CheckResult> run_noise_free_checks(std::uint64_t seed) {
  struct Target {
    std::string label;
    AlgorithmParams params;
    double threshold;
  };
  const std::vector<Target> targets = {
      {"shamir", ShamirConfig{}, 1e-4},
      {"fabian", FabianConfig{}, 1e-4},
      {"es", EsConfig{}, 1e-8},
  };
  std::vector<CheckResult> out;
  for (const Target& target : targets) {
    ExperimentSpec spec;
    spec.suite_id = "noise_free";
    spec.algorithm = {target.label, target.params, std::nullopt, false};
    spec.noise_std = 0.0;
    spec.budget = 10'000;
    spec.replicates = 10;
    spec.master_seed = seed;
    try {
      // Every replicate must hit the threshold at some n <= budget, and the final SR averaged
      // over replicates must be below it as well.
      double worst_best = 0.0;
      double final_sum = 0.0;
      for (std::size_t r = 0; r < spec.replicates; ++r) {
        const ReplicateResult rep = run_single(spec, r, RunOptions{spec.budget});
        const RegretSeries sr = sr_series(ProblemInstance(rep.optimum, 0.0), rep.prefix);
        double best = std::numeric_limits<double>::infinity();
        for (const RegretPoint& p : sr.points) best = std::min(best, p.value);
        worst_best = std::max(worst_best, best);
        final_sum += rep.sr.points.back().value;
      }
      const double final_mean = final_sum / static_cast<double>(spec.replicates);
      out.push_back({fmt::format("noise-free {}: SR <= {:g} reached within 10^4 evaluations", target.label,
                                 target.threshold),
                     worst_best <= target.threshold && final_mean <= target.threshold,
                     fmt::format("worst best-so-far SR over 10 replicates {:.3g}, mean final SR {:.3g}",
                                 worst_best, final_mean)});
    } catch (const std::exception& e) {
      out.push_back({fmt::format("noise-free {}", target.label), false, fmt::format("threw: {}", e.what())});
    }
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace regretlab
