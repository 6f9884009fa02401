#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "stepmp/simulate.hpp"

using namespace stepmp;

TEST_CASE("regime spec validation") {
  RegimeSpec spec{{0.0, 1.0}, 0.5, {{0.9, 0.1}, {0.2, 0.8}}};
  CHECK_NOTHROW(spec.validate());
  spec.transitions[0] = {0.98, 0.2};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.transitions[0] = {1.1, -0.1};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.transitions[0] = {0.9, 0.1};
  spec.variance = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_THROWS_AS(RegimeSpec{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS(simulate_regime({{0.0}, 1.0, {{1.0}}}, 0, 1), std::invalid_argument);
}

TEST_CASE("presets are stochastic and carry the published parameters") {
  for (const auto& name : preset_names()) {
    const Preset p = preset(name);
    if (p.kind == Preset::Kind::regime) CHECK_NOTHROW(p.regime.validate());
  }
  const Preset sim1 = preset("sim1-3state");
  CHECK(sim1.regime.means == std::vector<double>{-0.5, 0.1, 0.5});
  CHECK(sim1.regime.variance == 0.01);
  CHECK(sim1.regime.transitions[0] == std::vector<double>{0.98, 0.02, 0.0});
  CHECK(sim1.regime.transitions[1][2] == 0.015);
  CHECK(sim1.default_length == 250);
  CHECK(preset("ar2").ar.coefficients == std::vector<double>{0.3, 0.3});
  CHECK(preset("normal-mean2").mean == 2.0);
  CHECK(preset("kmeans-2state").regime.transitions[0] == std::vector<double>{0.97, 0.03});
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("regime simulation") {
  const Preset sim1 = preset("sim1-3state");
  const SimulationOutput out = simulate_regime(sim1.regime, 250, 1);
  CHECK(out.values.size() == 250);
  CHECK(out.states.size() == 250);
  CHECK(out.true_means.size() == 250);
  for (std::size_t i = 0; i < 250; ++i) {
    CHECK(out.states[i] >= 1);
    CHECK(out.states[i] <= 3);
    CHECK(out.true_means[i] == sim1.regime.means[out.states[i] - 1]);
  }
  const SimulationOutput again = simulate_regime(sim1.regime, 250, 1);
  CHECK(again.values == out.values);
  CHECK(again.states == out.states);

  RegimeSpec absorbing{{1.0, 2.0, 3.0, 4.0}, 1.0, {}};
  for (int i = 0; i < 4; ++i) {
    absorbing.transitions.push_back(std::vector<double>(4, 0.0));
    absorbing.transitions[i][i] = 1.0;
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = simulate_regime(absorbing, 100, seed).states;
    CHECK(std::all_of(s.begin(), s.end(), [&](int v) { return v == s.front(); }));
  }

  const auto flat = simulate_regime({{0.7}, 1e-30, {{1.0}}}, 50, 3);
  for (double v : flat.values) CHECK(std::abs(v - 0.7) < 1e-12);
}

TEST_CASE("regime chain frequencies and noise variance") {
  const Preset sim1 = preset("sim1-3state");
  const std::size_t T = 50000;
  const SimulationOutput out = simulate_regime(sim1.regime, T, 99);
  std::vector<std::vector<double>> counts(3, std::vector<double>(3, 0.0));
  for (std::size_t t = 0; t + 1 < T; ++t) counts[out.states[t] - 1][out.states[t + 1] - 1] += 1.0;
  for (int i = 0; i < 3; ++i) {
    double row = 0.0;
    for (double c : counts[i]) row += c;
    REQUIRE(row > 0.0);
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(counts[i][j] / row - sim1.regime.transitions[i][j]) < 0.02);
    }
  }
  double mean = 0.0, var = 0.0;
  for (std::size_t t = 0; t < T; ++t) mean += out.values[t] - out.true_means[t];
  mean /= T;
  for (std::size_t t = 0; t < T; ++t) var += std::pow(out.values[t] - out.true_means[t] - mean, 2);
  var /= T - 1;
  CHECK(std::abs(var - 0.01) < 0.001);
}

TEST_CASE("AR simulation") {
  const SimulationOutput ar2 = simulate_ar(preset("ar2").ar, 100, 5);
  CHECK(ar2.values.size() == 100);
  CHECK(ar2.burn_in == 2);
  CHECK(ar2.true_means[0] == 0.0);
  for (std::size_t t = 2; t < 100; ++t) {
    CHECK(ar2.true_means[t] == doctest::Approx(0.3 * ar2.values[t - 1] + 0.3 * ar2.values[t - 2]));
  }
  CHECK(simulate_ar(preset("ar2").ar, 100, 5).values == ar2.values);

  // Zero coefficient is i.i.d. noise with a zero conditional mean.
  const SimulationOutput white = simulate_ar({{0.0}, 1.0}, 20000, 8);
  double m = 0.0, v = 0.0;
  for (double x : white.values) m += x;
  m /= 20000;
  for (double x : white.values) v += (x - m) * (x - m);
  v /= 19999;
  CHECK(std::abs(m) < 0.05);
  CHECK(std::abs(v - 1.0) < 0.05);
  for (double x : white.true_means) CHECK(x == 0.0);

  const std::vector<double> impulse{1.0, 0.0, 0.0, 0.0, 0.0};
  const std::vector<double> coef{0.5};
  const auto [values, means] = ar_recursion(coef, impulse);
  CHECK(values == std::vector<double>{1.0, 0.5, 0.25, 0.125, 0.0625});

  CHECK_THROWS_AS(simulate_ar({{0.3}, 0.0}, 10, 1), std::invalid_argument);
}

TEST_CASE("i.i.d. normal simulation") {
  const auto out = simulate_iid_normal(2.0, 1.0, 500, 4);
  CHECK(out.values.size() == 500);
  for (double m : out.true_means) CHECK(m == 2.0);
  const auto constant = simulate_iid_normal(-1.5, 0.0, 10, 4);
  for (double v : constant.values) CHECK(v == -1.5);
  CHECK_THROWS_AS(simulate_iid_normal(0.0, -1.0, 10, 1), std::invalid_argument);
}

TEST_CASE("kmeans_1d examples") {
  const auto split = kmeans_1d(ScalarSequence{0.0, 0.0, 10.0, 10.0}, 2, 1);
  CHECK(split.centers == std::vector<double>{0.0, 10.0});
  CHECK(split.assignments == std::vector<int>{0, 0, 1, 1});

  const auto single = kmeans_1d(ScalarSequence{1.0, 2.0, 6.0}, 1, 1);
  CHECK(single.centers == std::vector<double>{3.0});

  CHECK_THROWS_AS(kmeans_1d(ScalarSequence{1.0}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(kmeans_1d(ScalarSequence{1.0}, 0, 1), std::invalid_argument);

  const auto flat = kmeans_1d(ScalarSequence{3.0, 3.0, 3.0}, 2, 1);
  CHECK(mse(cluster_mean_path(flat), std::vector<double>(3, 3.0)) == 0.0);
}

TEST_CASE("kmeans_1d reaches a Lloyd fixed point") {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(200);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = noise(rng) + 4.0 * (i % 3);
    const int k = 1 + trial % 5;
    const auto result = kmeans_1d(ScalarSequence(values), k, trial);
    REQUIRE(result.centers.size() == static_cast<std::size_t>(k));
    CHECK(std::is_sorted(result.centers.begin(), result.centers.end()));
    std::vector<double> sums(k, 0.0);
    std::vector<int> counts(k, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int a = result.assignments[i];
      sums[a] += values[i];
      ++counts[a];
      for (int c = 0; c < k; ++c) {
        CHECK(std::abs(values[i] - result.centers[a]) <= std::abs(values[i] - result.centers[c]));
      }
    }
    for (int c = 0; c < k; ++c) {
      REQUIRE(counts[c] > 0);
      CHECK(std::abs(result.centers[c] - sums[c] / counts[c]) <= 1e-12);
    }
    CHECK(kmeans_1d(ScalarSequence(values), k, trial).assignments == result.assignments);
  }
}

TEST_CASE("kmeans_1d finds the two-regime centres") {
  const Preset p = preset("kmeans-2state");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto sim = simulate_preset(p, 500, seed);
    const auto result = kmeans_1d(sim.values, 2, seed);
    CHECK(std::abs(result.centers[0] + 0.2) < 0.05);
    CHECK(std::abs(result.centers[1] - 0.2) < 0.05);
  }
}

TEST_CASE("mse") {
  CHECK(mse(ScalarSequence{1.0, 2.0}, ScalarSequence{1.0, 2.0}) == 0.0);
  CHECK(mse(ScalarSequence{0.0, 0.0}, ScalarSequence{1.0, 1.0}) == 1.0);
  CHECK(mse(ScalarSequence{0.0}, ScalarSequence{3.0}) == 9.0);
  CHECK_THROWS_AS(mse(ScalarSequence{0.0}, ScalarSequence{3.0, 1.0}), std::invalid_argument);
}
