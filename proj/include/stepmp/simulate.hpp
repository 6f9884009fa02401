#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stepmp/core.hpp"

namespace stepmp {

/// Gaussian regimes driven by a Markov chain: Y_t | S_t ~ Normal(means[S_t], variance).
struct RegimeSpec {
  std::vector<double> means;
  double variance = 1.0;
  std::vector<std::vector<double>> transitions;  ///< rows: current state, columns: next state

  /// Rows must be stochastic to within 1e-9, entries in [0, 1], variance > 0.
  void validate() const;
  std::size_t states() const { return means.size(); }
};

struct ARSpec {
  std::vector<double> coefficients;  ///< lag 1, lag 2, ...
  double noise_sd = 1.0;

  void validate() const;
};

struct SimulationOutput {
  ScalarSequence values;
  std::vector<int> states;   ///< 1-based regime labels; empty for non-regime generators
  ScalarSequence true_means; ///< conditional mean path
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;   ///< leading samples computed from the zero initial history
};

SimulationOutput simulate_regime(const RegimeSpec& spec, std::size_t T, std::uint64_t seed);
SimulationOutput simulate_ar(const ARSpec& spec, std::size_t T, std::uint64_t seed);
SimulationOutput simulate_iid_normal(double mean, double variance, std::size_t T,
                                     std::uint64_t seed);

/// y_t = sum_p coefficients[p] * y_{t-1-p} + innovations[t], zero history.
/// Returns {values, conditional means}.
std::pair<std::vector<double>, std::vector<double>> ar_recursion(
    std::span<const double> coefficients, std::span<const double> innovations);

struct KMeansResult {
  std::vector<double> centers;  ///< ascending
  std::vector<int> assignments; ///< index into centers
  int iterations = 0;
};

/// Lloyd's algorithm on the real line with k-means++ seeding. An empty cluster
/// is re-seeded at the point farthest from its current center.
KMeansResult kmeans_1d(const ScalarSequence& values, int k, std::uint64_t seed);

/// Per-point mean path implied by a clustering (center of each point's cluster).
std::vector<double> cluster_mean_path(const KMeansResult& result);

double mse(std::span<const double> a, std::span<const double> b);
double mse(const ScalarSequence& a, const ScalarSequence& b);

/// Named experiment presets.
struct Preset {
  std::string name;
  enum class Kind { regime, ar, iid_normal } kind;
  RegimeSpec regime;
  ARSpec ar;
  double mean = 0.0;
  double variance = 1.0;
  std::size_t default_length = 0;
};

/// sim1-3state, sim2-4state, normal-mean2, normal-std, ar2, kmeans-2state.
/// Throws std::invalid_argument for unknown names.
Preset preset(const std::string& name);
std::vector<std::string> preset_names();
SimulationOutput simulate_preset(const Preset& preset, std::size_t T, std::uint64_t seed);

}  // namespace stepmp
