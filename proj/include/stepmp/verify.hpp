#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stepmp::verify {

struct Options {
  std::uint64_t seed = 1;
  long trials = 50;
  long max_n = 0;          ///< 0 selects the suite default
  double grid_step = 0.02; ///< t and u spacing
  double xi_step = 0.05;
  double xi_max = 2.0;
  long triangle_grid = 200;
  long iterations = 20;    ///< energy suite
};

struct Check {
  std::string name;
  double observed = 0.0;   ///< worst value seen (violation, or count for counted checks)
  double tolerance = 0.0;
  bool passed = false;
};

struct Result {
  std::string suite;
  Options options;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
};

/// Known suites: theorem1, theorem2, lemma1, lemma2, remark, energy.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite.
Result run_suite(const std::string& suite, const Options& options);

/// Sweeps over uniformly random inputs. Each returns the worst observed gap.
/// Grid maximum of |<f, G(t, 0, u)>| minus the closed-form window maximum.
Result theorem2_sweep(const Options& options);
/// Same with xi on [-xi_max, xi_max] for nonnegative sequences.
Result theorem1_sweep(const Options& options);
/// Grid restricted to 0 < t <= 1 must peak at max_j |a_j|, attained at (1, 0, n0).
Result lemma1_sweep(const Options& options);
Result lemma2_sweep(const Options& options);
Result remark_sweep(const Options& options);
Result energy_sweep(const Options& options);

}  // namespace stepmp::verify
