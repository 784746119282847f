#include <doctest.h>

#include <cmath>

#include "regretlab/problem.hpp"
#include "regretlab/random.hpp"
#include "regretlab/trace.hpp"

using namespace regretlab;

template <class Box>
concept ExposesTrueValue = requires(Box& b, Vector x) {
  b.true_value(x);
} || requires(Box& b) { b.problem(); } || requires(Box& b) { b.optimum(); };

static_assert(!ExposesTrueValue<NoisyBlackBox>, "optimizers must only see noisy values");

TEST_CASE("sphere instance lies in the unit box and is reproducible") {
  const ProblemInstance p = make_sphere_problem(2, 0.3, 42);
  CHECK(p.dimension() == 2);
  CHECK(p.noise_std() == 0.3);
  for (double v : p.optimum()) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  const ProblemInstance q = make_sphere_problem(2, 0.3, 42);
  CHECK(p.optimum() == q.optimum());
  CHECK(make_sphere_problem(2, 0.3, 43).optimum() != p.optimum());
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(make_sphere_problem(0, 0.3, 1), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({0.5}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({0.5}, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance({1.5}, 0.0), std::invalid_argument);
  CHECK_NOTHROW(ProblemInstance({5.0}, 0.0, {0.0}, {10.0}));
}

TEST_CASE("true value of the sphere") {
  const ProblemInstance p({0.25, 0.5}, 0.0);
  CHECK(true_value(p, p.optimum()) == 0.0);
  CHECK(true_value(p, Vector{3.25, 4.5}) == doctest::Approx(25.0).epsilon(1e-15));
  const ProblemInstance one({0.25}, 0.0);
  CHECK(true_value(one, Vector{0.75}) == 0.25);
  CHECK_THROWS_AS(true_value(p, Vector{1.0}), std::invalid_argument);
}

TEST_CASE("zero noise makes noisy_eval equal true_value") {
  const ProblemInstance p = make_sphere_problem(3, 0.0, 7);
  RandomStream stream(1);
  RandomStream untouched(1);
  for (int i = 0; i < 50; ++i) {
    const Vector x{0.1 * i, 0.2, -0.3};
    CHECK(noisy_eval(p, x, stream) == true_value(p, x));
  }
  CHECK(stream() == untouched());
}

TEST_CASE("noise moments at 1e5 draws") {
  const ProblemInstance p = make_sphere_problem(2, 1.0, 11);
  RandomStream stream(2024);
  const int n = 100'000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = noisy_eval(p, p.optimum(), stream) - true_value(p, p.optimum());
    sum += w;
    sum_sq += w * w;
  }
  const double mean = sum / n;
  const double variance = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) <= 0.02);
  CHECK(std::abs(variance - 1.0) <= 0.05);
}

TEST_CASE("black box counts evaluations and matches the noise scale") {
  const ProblemInstance p = make_sphere_problem(2, 0.3, 5);
  NoisyBlackBox box(p, 99);
  double sum_sq = 0.0;
  for (int i = 0; i < 100'000; ++i) {
    const double w = box.evaluate(p.optimum());
    sum_sq += w * w;
  }
  CHECK(box.evaluations() == 100'000);
  CHECK(std::sqrt(sum_sq / 100'000) == doctest::Approx(0.3).epsilon(0.02));
}

TEST_CASE("trace append and accessors") {
  RunTrace t;
  CHECK(t.empty());
  const Vector x{0.1, 0.2};
  t.append(x, 1.5, x);
  CHECK(t.size() == 1);
  CHECK(t.evaluation(1).index == 1);
  CHECK(t.recommendation(1) == x);
  t = trace_append(std::move(t), Vector{0.3, 0.4}, 2.0, x);
  CHECK(t.size() == 2);
  CHECK(t.evaluation(2).index == 2);
  CHECK(t.evaluations().size() == t.recommendations().size());
  CHECK(t.evaluation(2).search_point == Vector{0.3, 0.4});
  CHECK_THROWS_AS(t.evaluation(0), std::out_of_range);
  CHECK_THROWS_AS(t.recommendation(3), std::out_of_range);
}

TEST_CASE("search point and recommendation are stored independently") {
  RunTrace t;
  Vector x{0.5};
  t.append(x, 0.0, x);
  x[0] = 0.9;
  CHECK(t.evaluation(1).search_point[0] == 0.5);
  CHECK(t.recommendation(1)[0] == 0.5);
  CHECK(t.evaluation(1).search_point.data() != t.recommendation(1).data());
}

TEST_CASE("seed derivation separates roles, replicates and labels") {
  const auto a = derive_seed(1, hash_label("es"), 0, StreamRole::optimum);
  CHECK(a != derive_seed(1, hash_label("es"), 0, StreamRole::noise));
  CHECK(a != derive_seed(1, hash_label("es"), 1, StreamRole::optimum));
  CHECK(a != derive_seed(1, hash_label("shamir"), 0, StreamRole::optimum));
  CHECK(a != derive_seed(2, hash_label("es"), 0, StreamRole::optimum));
  CHECK(a == derive_seed(1, hash_label("es"), 0, StreamRole::optimum));
  static_assert(hash_label("") == 0xcbf29ce484222325ULL);
  CHECK(child_seed(5, 1) != child_seed(5, 2));
}
