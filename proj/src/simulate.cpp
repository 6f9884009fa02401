#include "stepmp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stepmp {

void RegimeSpec::validate() const {
  const std::size_t k = means.size();
  if (k == 0) throw std::invalid_argument("regime spec needs at least one state");
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("regime variance must be positive");
  }
  if (transitions.size() != k) throw std::invalid_argument("transition matrix must be K x K");
  for (const auto& row : transitions) {
    if (row.size() != k) throw std::invalid_argument("transition matrix must be K x K");
    double total = 0.0;
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("transition entries must lie in [0, 1]");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw std::invalid_argument("transition rows must sum to 1");
    }
  }
}

void ARSpec::validate() const {
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw std::invalid_argument("AR coefficients must be finite");
  }
  if (!(noise_sd > 0.0) || !std::isfinite(noise_sd)) {
    throw std::invalid_argument("AR noise_sd must be positive");
  }
}

namespace {

void require_length(std::size_t T) {
  if (T < 1) throw std::invalid_argument("series length T must be at least 1");
}

}  // namespace

SimulationOutput simulate_regime(const RegimeSpec& spec, std::size_t T, std::uint64_t seed) {
  spec.validate();
  require_length(T);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double sd = std::sqrt(spec.variance);
  const std::size_t k = spec.states();

  std::size_t state = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  std::vector<double> values(T), means(T);
  std::vector<int> states(T);
  for (std::size_t t = 0; t < T; ++t) {
    states[t] = static_cast<int>(state) + 1;
    means[t] = spec.means[state];
    values[t] = means[t] + sd * noise(rng);

    const auto& row = spec.transitions[state];
    const double draw = uniform(rng);
    double cumulative = 0.0;
    std::size_t next = k - 1;
    for (std::size_t s = 0; s < k; ++s) {
      cumulative += row[s];
      if (draw < cumulative) {
        next = s;
        break;
      }
    }
    // Never land on a zero-probability trailing state through rounding.
    while (row[next] == 0.0 && next > 0) --next;
    state = next;
  }
  return {ScalarSequence(std::move(values)), std::move(states), ScalarSequence(std::move(means)),
          seed, 0};
}

std::pair<std::vector<double>, std::vector<double>> ar_recursion(
    std::span<const double> coefficients, std::span<const double> innovations) {
  const std::size_t T = innovations.size();
  std::vector<double> values(T, 0.0), means(T, 0.0);
  for (std::size_t t = 0; t < T; ++t) {
    double conditional = 0.0;
    for (std::size_t p = 0; p < coefficients.size() && p < t; ++p) {
      conditional += coefficients[p] * values[t - 1 - p];
    }
    means[t] = conditional;
    values[t] = conditional + innovations[t];
  }
  return {std::move(values), std::move(means)};
}

SimulationOutput simulate_ar(const ARSpec& spec, std::size_t T, std::uint64_t seed) {
  spec.validate();
  require_length(T);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> innovations(T);
  for (double& e : innovations) e = spec.noise_sd * noise(rng);
  auto [values, means] = ar_recursion(spec.coefficients, innovations);
  return {ScalarSequence(std::move(values)), {}, ScalarSequence(std::move(means)), seed,
          std::min(T, spec.coefficients.size())};
}

SimulationOutput simulate_iid_normal(double mean, double variance, std::size_t T,
                                     std::uint64_t seed) {
  require_length(T);
  if (!(variance >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("normal generator needs finite mean and variance >= 0");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  const double sd = std::sqrt(variance);
  std::vector<double> values(T);
  for (double& v : values) v = mean + sd * noise(rng);
  return {ScalarSequence(std::move(values)), {}, ScalarSequence(std::vector<double>(T, mean)),
          seed, 0};
}

KMeansResult kmeans_1d(const ScalarSequence& values, int k, std::uint64_t seed) {
  const std::size_t n = values.size();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<std::size_t>(k) > n) throw std::invalid_argument("k exceeds number of points");
  const auto x = values.values();
  std::mt19937_64 rng(seed);

  // k-means++ seeding
  std::vector<double> centers;
  centers.push_back(x[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)]);
  std::vector<double> d2(n);
  while (centers.size() < static_cast<std::size_t>(k)) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (double c : centers) best = std::min(best, (x[i] - c) * (x[i] - c));
      d2[i] = best;
      total += best;
    }
    std::size_t pick;
    if (total > 0.0) {
      pick = std::discrete_distribution<std::size_t>(d2.begin(), d2.end())(rng);
    } else {
      pick = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    }
    centers.push_back(x[pick]);
  }

  std::vector<int> assign(n, -1);
  const auto nearest = [&](double v) {
    int best = 0;
    for (int c = 1; c < k; ++c) {
      if (std::abs(v - centers[c]) < std::abs(v - centers[best])) best = c;
    }
    return best;
  };

  int iterations = 0;
  constexpr int kMaxIterations = 10000;
  for (; iterations < kMaxIterations; ++iterations) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const int c = nearest(x[i]);
      if (c != assign[i]) {
        assign[i] = c;
        changed = true;
      }
    }
    if (!changed) break;

    std::vector<double> sums(k, 0.0);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sums[assign[i]] += x[i];
      ++counts[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centers[c] = sums[c] / static_cast<double>(counts[c]);
        continue;
      }
      std::size_t far = 0;
      double far_distance = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(x[i] - centers[assign[i]]);
        if (d > far_distance) {
          far_distance = d;
          far = i;
        }
      }
      centers[c] = x[far];
    }
  }

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return centers[a] < centers[b]; });
  std::vector<int> rank(k);
  KMeansResult out;
  for (int r = 0; r < k; ++r) {
    rank[order[r]] = r;
    out.centers.push_back(centers[order[r]]);
  }
  out.assignments.reserve(n);
  for (int a : assign) out.assignments.push_back(rank[a]);
  out.iterations = iterations;
  return out;
}

std::vector<double> cluster_mean_path(const KMeansResult& result) {
  std::vector<double> path;
  path.reserve(result.assignments.size());
  for (int a : result.assignments) path.push_back(result.centers[a]);
  return path;
}

double mse(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("mse: length mismatch");
  if (a.empty()) throw std::invalid_argument("mse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double mse(const ScalarSequence& a, const ScalarSequence& b) { return mse(a.values(), b.values()); }

Preset preset(const std::string& name) {
  Preset p;
  p.name = name;
  if (name == "sim1-3state") {
    // First row printed as 0.98, 0.2, 0 in the source experiment; 0.02 makes it stochastic.
    p.kind = Preset::Kind::regime;
    p.regime = {{-0.5, 0.1, 0.5},
                0.01,
                {{0.98, 0.02, 0.0}, {0.005, 0.98, 0.015}, {0.02, 0.08, 0.90}}};
    p.default_length = 250;
  } else if (name == "sim2-4state") {
    p.kind = Preset::Kind::regime;
    p.regime = {{-0.4, -0.1, 0.1, 0.4},
                0.01,
                {{0.98, 0.02, 0.0, 0.0},
                 {0.02, 0.95, 0.03, 0.0},
                 {0.0, 0.02, 0.97, 0.01},
                 {0.01, 0.0, 0.02, 0.97}}};
    p.default_length = 600;
  } else if (name == "normal-mean2") {
    p.kind = Preset::Kind::iid_normal;
    p.mean = 2.0;
    p.variance = 1.0;
    p.default_length = 500;
  } else if (name == "normal-std") {
    p.kind = Preset::Kind::iid_normal;
    p.mean = 0.0;
    p.variance = 1.0;
    p.default_length = 500;
  } else if (name == "ar2") {
    p.kind = Preset::Kind::ar;
    p.ar = {{0.3, 0.3}, 1.0};
    p.default_length = 100;
  } else if (name == "kmeans-2state") {
    p.kind = Preset::Kind::regime;
    p.regime = {{0.2, -0.2}, 0.01, {{0.97, 0.03}, {0.03, 0.97}}};
    p.default_length = 500;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return p;
}

std::vector<std::string> preset_names() {
  return {"sim1-3state", "sim2-4state", "normal-mean2", "normal-std", "ar2", "kmeans-2state"};
}

SimulationOutput simulate_preset(const Preset& p, std::size_t T, std::uint64_t seed) {
  switch (p.kind) {
    case Preset::Kind::regime:
      return simulate_regime(p.regime, T, seed);
    case Preset::Kind::ar:
      return simulate_ar(p.ar, T, seed);
    case Preset::Kind::iid_normal:
      return simulate_iid_normal(p.mean, p.variance, T, seed);
  }
  throw std::logic_error("unhandled preset kind");
}

}  // namespace stepmp
