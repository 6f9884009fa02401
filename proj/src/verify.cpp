#include "stepmp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "stepmp/dictionary.hpp"
#include "stepmp/maximizer.hpp"
#include "stepmp/pursuit.hpp"

namespace stepmp::verify {
namespace {

using Clock = std::chrono::steady_clock;

ScalarSequence random_sequence(std::mt19937_64& rng, long n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (double& v : values) v = dist(rng);
  return ScalarSequence(std::move(values));
}

long random_length(std::mt19937_64& rng, long max_n) {
  return std::uniform_int_distribution<long>(1, max_n)(rng);
}

long grid_count(double extent, double step) { return static_cast<long>(std::floor(extent / step + 1e-9)); }

std::vector<double> symmetric_grid(double half_width, double step) {
  const long half = grid_count(half_width, step);
  std::vector<double> out;
  for (long i = -half; i <= half; ++i) out.push_back(static_cast<double>(i) * step);
  return out;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Check upper_bound_check(std::string name, double worst, double tolerance) {
  return {std::move(name), worst, tolerance, worst <= tolerance};
}

// Grid maximum of |<f, G(t, xi, u)>| over t in (0, t_max], u in [0, u_max],
// evaluated through one WindowTransform per xi.
double modulated_grid_max(const StepFunction& f, const std::vector<double>& xis, double t_max,
                          double u_max, double step) {
  const long t_count = grid_count(t_max, step);
  const long u_count = grid_count(u_max, step);
  double best = 0.0;
  for (double xi : xis) {
    const WindowTransform transform(f, xi);
    for (long i = 1; i <= t_count; ++i) {
      const double t = static_cast<double>(i) * step;
      for (long k = 0; k <= u_count; ++k) {
        best = std::max(best, std::abs(transform.inner_product(t, static_cast<double>(k) * step)));
      }
    }
  }
  return best;
}

}  // namespace

bool Result::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> suite_names() {
  return {"theorem1", "theorem2", "lemma1", "lemma2", "remark", "energy"};
}

Result run_suite(const std::string& suite, const Options& options) {
  static const std::map<std::string, std::function<Result(const Options&)>> suites = {
      {"theorem1", theorem1_sweep}, {"theorem2", theorem2_sweep}, {"lemma1", lemma1_sweep},
      {"lemma2", lemma2_sweep},     {"remark", remark_sweep},     {"energy", energy_sweep},
  };
  const auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown verification suite: " + suite);
  const auto start = Clock::now();
  Result result = it->second(options);
  result.suite = suite;
  result.options = options;
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

Result theorem2_sweep(const Options& options) {
  const long max_n = options.max_n > 0 ? options.max_n : 12;
  std::mt19937_64 rng(options.seed);
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_attained = 0.0;
  for (long trial = 0; trial < options.trials; ++trial) {
    const long n = random_length(rng, max_n);
    const StepFunction f = make_step_function(random_sequence(rng, n, -1.0, 1.0));
    const ScoredAtom best = best_window(f.coefficients);

    const double extent = static_cast<double>(n + 1);
    const long t_count = grid_count(extent, options.grid_step);
    const long u_count = grid_count(extent, options.grid_step);
    double grid_max = 0.0;
    for (long i = 1; i <= t_count; ++i) {
      const double t = static_cast<double>(i) * options.grid_step;
      for (long k = 0; k <= u_count; ++k) {
        const WaveformAtom atom{t, 0.0, static_cast<double>(k) * options.grid_step};
        grid_max = std::max(grid_max, std::abs(inner_product(f, atom)));
      }
    }
    worst_excess = std::max(worst_excess, grid_max - best.value);
    worst_attained = std::max(
        worst_attained, relative_gap(std::abs(inner_product(f, best.atom.waveform())), best.value));
  }
  return {"theorem2",
          options,
          {upper_bound_check("grid max - window max", worst_excess, 1e-6),
           upper_bound_check("closed form attained at window atom (relative)", worst_attained, 1e-12)}};
}

Result theorem1_sweep(const Options& options) {
  const long max_n = options.max_n > 0 ? options.max_n : 10;
  std::mt19937_64 rng(options.seed);
  const std::vector<double> xis = symmetric_grid(options.xi_max, options.xi_step);
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (long trial = 0; trial < options.trials; ++trial) {
    const long n = random_length(rng, max_n);
    const StepFunction f = make_step_function(random_sequence(rng, n, 0.0, 1.0));
    const double closed_form = best_window_single_signed(f.coefficients).value;
    const double extent = static_cast<double>(n + 1);
    worst_excess = std::max(
        worst_excess, modulated_grid_max(f, xis, extent, extent, options.grid_step) - closed_form);
  }
  return {"theorem1", options, {upper_bound_check("grid max - window max", worst_excess, 1e-6)}};
}

Result lemma1_sweep(const Options& options) {
  const long max_n = options.max_n > 0 ? options.max_n : 12;
  std::mt19937_64 rng(options.seed);
  const std::vector<double> xis = symmetric_grid(options.xi_max, options.xi_step);
  double worst_gap = 0.0;
  double worst_attained = 0.0;
  double worst_h = -std::numeric_limits<double>::infinity();
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (long trial = 0; trial < options.trials; ++trial) {
    const long n = random_length(rng, max_n);
    const StepFunction f = make_step_function(random_sequence(rng, n, -1.0, 1.0));
    long peak = 1;
    for (long j = 1; j <= n; ++j) {
      if (std::abs(f.cell(j)) > std::abs(f.cell(peak))) peak = j;
    }
    const double largest = std::abs(f.cell(peak));
    const double grid_max =
        modulated_grid_max(f, xis, 1.0, static_cast<double>(n + 1), options.grid_step);
    worst_gap = std::max(worst_gap, std::abs(grid_max - largest));
    const WaveformAtom at_peak{1.0, 0.0, static_cast<double>(peak)};
    worst_attained =
        std::max(worst_attained, relative_gap(std::abs(inner_product(f, at_peak)), largest));

    // Two-cell model function on its (xi, s, t) region.
    const double a_prev = unit(rng);
    const double a_n = unit(rng);
    const double bound = std::max(std::abs(a_prev), std::abs(a_n));
    for (double xi : xis) {
      for (long i = 1; i <= 20; ++i) {
        const double t = static_cast<double>(i) / 20.0;
        for (long k = 0; k <= i; ++k) {
          const double s = t * static_cast<double>(k) / static_cast<double>(i);
          worst_h = std::max(worst_h, h_value(xi, s, t, a_prev, a_n) - bound);
        }
      }
    }
  }
  return {"lemma1",
          options,
          {upper_bound_check("|grid max - max|a_j||", worst_gap, 1e-6),
           upper_bound_check("peak attained at (1, 0, n0) (relative)", worst_attained, 1e-12),
           upper_bound_check("h - max(|a_prev|, |a_n|)", worst_h, 1e-9)}};
}

Result lemma2_sweep(const Options& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const long g = std::max<long>(options.triangle_grid, 2);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 4; ++k) {
    for (long trial = 0; trial < options.trials; ++trial) {
      const double a_prev = unit(rng);
      const double middle = static_cast<double>(k) * unit(rng);
      const double a_next = unit(rng);
      const double vertex = psi_k_vertex_max(k, a_prev, middle, a_next);
      double grid_max = 0.0;
      for (long i = 0; i < g; ++i) {
        const double height = static_cast<double>(i) / static_cast<double>(g - 1);
        const double t = static_cast<double>(k) + height;
        for (long m = 0; m < g; ++m) {
          const double s = height * static_cast<double>(m) / static_cast<double>(g - 1);
          grid_max = std::max(grid_max, psi_k(s, t, k, a_prev, middle, a_next));
        }
      }
      worst = std::max(worst, grid_max - vertex);
    }
  }
  return {"lemma2", options, {upper_bound_check("triangle grid max - vertex max", worst, 1e-9)}};
}

Result remark_sweep(const Options& options) {
  const StepFunction alternating = make_step_function(ScalarSequence{-1.0, 1.0});
  const double at_zero = std::abs(inner_product(alternating, {2.0, 0.0, 1.5}));
  const double modulated = std::abs(inner_product(alternating, {2.0, 0.25, 1.5}));
  const double closed = alternating_full_cover_modulus(1.0, 2.0, 0.25);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (long trial = 0; trial < options.trials; ++trial) {
    const double a = 4.0 * unit(rng) - 2.0;
    const double t = 0.01 + 3.99 * unit(rng);
    const double reach = 0.5 * (t + 1.0);
    const double delta = reach * (2.0 * unit(rng) - 1.0);
    const double xi = 4.0 * unit(rng) - 2.0;
    const StepFunction f = make_step_function(ScalarSequence{-a, a});
    const double direct = std::abs(inner_product(f, {t, xi, 1.0 + delta}));
    worst = std::max(worst, std::abs(alternating_modulus(a, t, delta, xi) - direct));
  }
  return {"remark",
          options,
          {upper_bound_check("|<f,G>| at xi = 0, full coverage", at_zero, 1e-12),
           {"|<f,G>| at xi = 0.25, t = 2 (must exceed)", modulated, 0.1, modulated > 0.1},
           upper_bound_check("xi = 0.25 vs full-coverage closed form", std::abs(modulated - closed),
                             1e-10),
           upper_bound_check("alternating modulus vs inner product", worst, 1e-10)}};
}

Result energy_sweep(const Options& options) {
  const long n = options.max_n > 0 ? options.max_n : 256;
  std::mt19937_64 rng(options.seed);
  PursuitConfig config;
  config.max_iterations = options.iterations;
  double worst_identity = 0.0;
  double worst_increase = -std::numeric_limits<double>::infinity();
  for (long trial = 0; trial < options.trials; ++trial) {
    const ScalarSequence seq = random_sequence(rng, n, -1.0, 1.0);
    const double total = std::pow(l2_norm(seq.values()), 2);
    const GreedyExpansion expansion = run_pursuit(seq, config);
    double explained = 0.0;
    for (std::size_t m = 0; m < expansion.terms.size(); ++m) {
      explained += expansion.terms[m].coefficient * expansion.terms[m].coefficient;
      const double left = std::pow(expansion.norm_history[m + 1], 2);
      worst_identity = std::max(worst_identity, std::abs(total - explained - left) / total);
      worst_increase =
          std::max(worst_increase, expansion.norm_history[m + 1] - expansion.norm_history[m]);
    }
  }
  return {"energy",
          options,
          {upper_bound_check("energy identity (relative)", worst_identity, 1e-9),
           upper_bound_check("residual norm increase", worst_increase, 0.0)}};
}

}  // namespace stepmp::verify
