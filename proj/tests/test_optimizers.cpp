#include <doctest.h>

#include <cmath>
#include <limits>

#include "regretlab/algorithm.hpp"
#include "regretlab/harness.hpp"

using namespace regretlab;

namespace {

void tell_one(Optimizer& opt, double v) { opt.tell(std::span<const double>(&v, 1)); }

}  // namespace

TEST_CASE("random search keeps the best single noisy value with strict improvement") {
  RandomSearch rs(2, 5);
  const Vector initial = rs.recommend();
  const Vector p1 = rs.ask(10).front();
  CHECK(p1 == initial);
  tell_one(rs, 4.0);
  const Vector p2 = rs.ask(10).front();
  tell_one(rs, 1.0);
  const Vector p3 = rs.ask(10).front();
  tell_one(rs, 9.0);
  CHECK(rs.recommend() == p2);
  CHECK(rs.best_value() == 1.0);

  const Vector p4 = rs.ask(10).front();
  tell_one(rs, 1.0);
  CHECK(rs.recommend() == p2);
  CHECK(p4 != p2);
  for (const Vector& p : {p1, p2, p3, p4}) {
    for (double v : p) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
  CHECK_THROWS_AS(rs.tell(std::vector<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("resampling schedules") {
  CHECK(ResamplingSchedule::none().count(17, 100) == 1);
  CHECK(ResamplingSchedule::constant_count(5).count(1, 100) == 5);
  CHECK(ResamplingSchedule::constant_count(5).count(1, 3) == 3);
  const auto exp2 = ResamplingSchedule::exponential(1.0, 2.0);
  CHECK(exp2.count(1, 1'000'000) == 2);
  CHECK(exp2.count(10, 1'000'000) == 1024);
  CHECK(exp2.count(40, 1'000'000) == 1'000'000);
  CHECK(ResamplingSchedule::exponential(0.1, 1.5).count(1, 100) == 1);
  CHECK_THROWS_AS(ResamplingSchedule::exponential(0.0, 2.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ResamplingSchedule::exponential(1.0, 1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ResamplingSchedule::constant_count(0).validate(), std::invalid_argument);
}

TEST_CASE("ES configuration validation") {
  EsConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.mu = 2;
  cfg.lambda = 2;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = EsConfig{};
  cfg.fake_offspring = true;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = EsConfig{};
  cfg.sigma0 = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(std::abs(EsConfig{}.failure_down - std::pow(1.5, -0.25)) <= 1e-15);
}

TEST_CASE("ES selection and one-fifth rule") {
  EvolutionStrategy es(2, 3, EsConfig{});
  const Vector parent = es.parent();
  auto batch = es.ask(100);
  REQUIRE(batch.size() == 2);
  CHECK(batch[1] == parent);
  const Vector offspring = batch[0];

  SUBCASE("strictly better offspring replaces the parent") {
    es.tell(std::vector<double>{0.5, 1.0});
    CHECK(es.parent() == offspring);
    CHECK(es.sigma() == 1.5);
  }
  SUBCASE("tie keeps the parent and shrinks sigma") {
    es.tell(std::vector<double>{1.0, 1.0});
    CHECK(es.parent() == parent);
    CHECK(es.sigma() == EsConfig{}.failure_down);
  }
  SUBCASE("sigma stays positive through long failure streaks") {
    for (int i = 0; i < 20'000; ++i) {
      es.tell(std::vector<double>{2.0, 1.0});
      es.ask(100);
    }
    CHECK(es.sigma() > 0.0);
    CHECK(es.step_size().value() == es.sigma());
  }
  CHECK_THROWS_AS(EvolutionStrategy(0, 1, EsConfig{}), std::invalid_argument);
}

TEST_CASE("ES with resampling averages r copies and re-evaluates the parent") {
  EsConfig cfg;
  cfg.schedule = ResamplingSchedule::exponential(1.0, 2.0);
  EvolutionStrategy es(2, 4, cfg);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Vector parent = es.parent();
    const auto batch = es.ask(1'000'000);
    const std::size_t r = std::size_t{1} << n;
    REQUIRE(batch.size() == 2 * r);
    CHECK(es.current_resamples() == r);
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(batch[i] == batch[0]);
      CHECK(batch[r + i] == parent);
    }
    // Offspring average 1.0 versus parent average 1.25: the offspring wins.
    std::vector<double> values(2 * r, 1.0);
    values[r] = 1.0 + 0.25 * static_cast<double>(r);
    es.tell(values);
    CHECK(es.parent() == batch[0]);
  }
  // The cap keeps a batch inside the remaining budget.
  CHECK(es.ask(21).size() == 20);
}

TEST_CASE("MES+R fake offspring never influence selection") {
  EsConfig plain;
  plain.schedule = ResamplingSchedule::exponential(1.0, 2.0);
  EsConfig fake = plain;
  fake.fake_offspring = true;
  EvolutionStrategy a(2, 77, plain);
  EvolutionStrategy b(2, 77, fake);
  const ProblemInstance problem = make_sphere_problem(2, 0.3, 1);
  RandomStream noise(8);
  std::normal_distribution<double> gauss;
  for (int it = 0; it < 12; ++it) {
    const auto ba = a.ask(1'000'000);
    const auto bb = b.ask(1'000'000);
    const std::size_t r = a.current_resamples();
    REQUIRE(bb.size() == 3 * r);
    std::vector<double> va;
    for (const Vector& x : ba) va.push_back(true_value(problem, x) + 0.3 * gauss(noise));
    std::vector<double> vb = va;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(distance(bb[2 * r + i], b.parent()) > 0.0);
      vb.push_back(-1e9);  // a spectacular fake value must still be ignored
    }
    for (std::size_t i = 0; i < 2 * r; ++i) CHECK(ba[i] == bb[i]);
    a.tell(va);
    b.tell(vb);
    REQUIRE(a.parent() == b.parent());
    REQUIRE(a.sigma() == b.sigma());
  }
  CHECK(b.name() == "mes_r");
}

TEST_CASE("Shamir geometry and update") {
  CHECK(distance(project_onto_ball({3.0, 4.0}, 3.0), Vector{1.8, 2.4}) <= 1e-15);
  CHECK(project_onto_ball({1.2, 1.6}, 3.0) == Vector{1.2, 1.6});

  SUBCASE("one step in d = 1 with v = 2") {
    Shamir sh(1, 9, ShamirConfig{0.3, 0.1, 1000.0});
    CHECK(sh.center() == Vector{0.0});
    const Vector x = sh.ask(1).front();
    const double r = x[0] / 0.3;
    CHECK(std::abs(std::abs(r) - 1.0) <= 1e-15);
    tell_one(sh, 2.0);
    const double g_hat = 2.0 / 0.3 * r;  // 6.6667 r
    CHECK(sh.center()[0] == doctest::Approx(-g_hat / 0.1).epsilon(1e-14));
    CHECK(std::abs(g_hat) == doctest::Approx(6.666666666666667));
  }
  SUBCASE("projection onto the ball") {
    Shamir sh(2, 9, ShamirConfig{});
    sh.ask(1);
    tell_one(sh, 100.0);
    CHECK(norm(sh.center()) == doctest::Approx(3.0).epsilon(1e-14));
  }
}

TEST_CASE("Shamir recommendation averages the second half of the centres") {
  const std::size_t d = 3;
  Shamir sh(d, 21, ShamirConfig{});
  const ProblemInstance problem = make_sphere_problem(d, 0.3, 4);
  NoisyBlackBox box(problem, 5);
  std::vector<Vector> centres;
  for (std::size_t n = 1; n <= 500; ++n) {
    const Vector x = sh.ask(1).front();
    centres.push_back(sh.center());
    CHECK(std::abs(distance(x, sh.center()) - 0.3) <= 1e-12);
    tell_one(sh, box.evaluate(x));
    const std::size_t lo = (n + 1) / 2;
    Vector mean(d, 0.0);
    for (std::size_t k = lo; k <= n; ++k) {
      for (std::size_t i = 0; i < d; ++i) mean[i] += centres[k - 1][i];
    }
    for (double& v : mean) v /= static_cast<double>(n - lo + 1);
    REQUIRE(distance(mean, sh.recommend()) <= 1e-12);
    REQUIRE(norm(sh.center()) <= 3.0 + 1e-12);
  }
}

TEST_CASE("Fabian weights") {
  CHECK(fabian_weights(2) == Vector{0.5});
  const Vector v4 = fabian_weights(4);
  CHECK(std::abs(v4[0] + 1.0 / 6.0) <= 1e-12);
  CHECK(std::abs(v4[1] - 4.0 / 3.0) <= 1e-12);
  CHECK(std::abs(v4[0] + v4[1] / 2.0 - 0.5) <= 1e-12);
  CHECK(std::abs(v4[0] + v4[1] / 8.0) <= 1e-12);
  for (std::size_t s = 2; s <= 32; s += 2) {
    CAPTURE(s);
    CHECK(fabian_weights_residual(fabian_weights(s)) <= 1e-10);
  }
  CHECK_THROWS_AS(fabian_weights(3), std::invalid_argument);
  CHECK_THROWS_AS(fabian_weights(0), std::invalid_argument);
  CHECK_THROWS_AS(fabian_weights(34), std::invalid_argument);
}

TEST_CASE("Fabian configuration") {
  FabianConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.stable_on_sphere());
  cfg.gamma = 0.6;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("0 < gamma < 1/2"), std::invalid_argument);
  cfg = FabianConfig{};
  cfg.s = 3;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("s must be even"), std::invalid_argument);
  cfg = FabianConfig{};
  cfg.alpha = 0.9;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = FabianConfig{};
  cfg.a = 0.001;
  CHECK_FALSE(cfg.stable_on_sphere());
}

TEST_CASE("Fabian probes and exact central differences") {
  SUBCASE("d = 1, s = 2: the estimate is the exact gradient") {
    const ProblemInstance problem({0.25}, 0.0);
    Fabian f(1, 3, FabianConfig{2, 1.0, 1.0, 1.0, 0.01});
    const double x1 = f.recommend()[0];
    const auto batch = f.ask(100);
    REQUIRE(batch.size() == 2);
    std::vector<double> values;
    for (const Vector& x : batch) values.push_back(true_value(problem, x));
    f.tell(values);
    // a_1 = 1 and gradient 2 (x1 - x*): the estimate moves to the mirror image of x1.
    CHECK(f.recommend()[0] == doctest::Approx(2 * 0.25 - x1).epsilon(1e-12));
    values.clear();
    for (const Vector& x : f.ask(100)) values.push_back(true_value(problem, x));
    f.tell(values);
    CHECK(std::abs(f.recommend()[0] - 0.25) <= 1e-12);
  }
  SUBCASE("batch layout") {
    const std::size_t d = 3;
    Fabian f(d, 4, FabianConfig{});
    for (int it = 0; it < 4; ++it) {
      const Vector centre = f.recommend();
      const double cn = f.probe_scale();
      CHECK(cn == doctest::Approx(1.0 / std::pow(it + 1.0, 0.01)));
      const auto batch = f.ask(100);
      REQUIRE(batch.size() == 4 * d);
      std::size_t k = 0;
      for (std::size_t j = 1; j <= 2; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
          for (double sign : {1.0, -1.0}) {
            Vector expected = centre;
            expected[i] += sign * cn / static_cast<double>(j);
            CHECK(batch[k++] == expected);
          }
        }
      }
      CHECK(f.recommend() == centre);
      f.tell(std::vector<double>(batch.size(), 1.0));
    }
    CHECK_THROWS_AS(f.tell(std::vector<double>{1.0}), std::invalid_argument);
  }
}

TEST_CASE("every optimizer consumes exactly the budget") {
  RegretConfig regret;
  regret.constant_window = 3;
  std::vector<AlgorithmSpec> specs;
  for (const char* kind : {"random_search", "es", "shamir", "fabian"}) {
    specs.push_back({kind, *default_params(kind), std::nullopt, false});
    specs.push_back({kind, *default_params(kind), 3, false});
    specs.push_back({kind, *default_params(kind), std::nullopt, true});
  }
  EsConfig resamp;
  resamp.schedule = ResamplingSchedule::exponential(1.0, 2.0);
  specs.push_back({"es_resamp", resamp, std::nullopt, false});
  resamp.fake_offspring = true;
  specs.push_back({"mes_r", resamp, std::nullopt, false});
  EsConfig constant;
  constant.schedule = ResamplingSchedule::constant_count(7);
  specs.push_back({"es_const", constant, 2, true});

  for (const AlgorithmSpec& spec : specs) {
    for (std::size_t budget : {1u, 2u, 7u, 1'237u, 5'000u}) {
      CAPTURE(spec.label);
      CAPTURE(budget);
      const ProblemInstance problem = make_sphere_problem(2, 0.3, 3);
      NoisyBlackBox box(problem, 4);
      auto opt = make_optimizer(spec, 2, 5, regret);
      std::size_t records = 0;
      drive_optimizer(*opt, box, budget, [&](const Vector&, double, const Vector&) { ++records; });
      CHECK(records == budget);
      CHECK(box.evaluations() == budget);
    }
  }
}
