#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stepmp/core.hpp"
#include "stepmp/maximizer.hpp"

namespace stepmp {

struct ExpansionTerm {
  WindowAtom atom;
  double coefficient = 0.0;  ///< signed_sum / sqrt(L)
  long iteration = 0;
  double level = 0.0;        ///< signed_sum / L, the constant removed from each covered cell

  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

struct PursuitConfig {
  long max_iterations = 10;
  double residual_epsilon = 0.0;     ///< stop once the residual norm drops below
  double coefficient_epsilon = 0.0;  ///< stop when the selected |coefficient| is below
  std::optional<double> pre_shift;

  /// Throws std::invalid_argument on max_iterations < 1 or negative epsilons.
  void validate() const;

  friend bool operator==(const PursuitConfig&, const PursuitConfig&) = default;
};

struct GreedyExpansion {
  std::vector<ExpansionTerm> terms;
  ScalarSequence residual;
  /// Residual L2 norm before the first term and after each term (terms + 1 entries).
  std::vector<double> norm_history;
  ShiftRecord shift;

  std::size_t size() const { return residual.size(); }
};

/// One greedy step on `residual`: picks best_window and subtracts the window
/// average from the covered cells.
std::pair<ExpansionTerm, ScalarSequence> pursuit_step(const ScalarSequence& residual);

/// Iterates pursuit_step until max_iterations, the residual threshold, or the
/// coefficient threshold stops it. A selected coefficient of exactly zero
/// always stops the loop without recording a term.
GreedyExpansion run_pursuit(const ScalarSequence& seq, const PursuitConfig& config);

/// Sum of the recorded steps on cells 1..N, with the pre-shift removed, so that
/// reconstruct(e) + residual == original cellwise.
ScalarSequence reconstruct(const GreedyExpansion& expansion);

struct LedgerRow {
  long iteration;
  double coefficient_squared;
  double residual_norm_squared;  ///< after this term
  double energy_drop;            ///< norm^2 before minus norm^2 after
};

std::vector<LedgerRow> energy_ledger(const GreedyExpansion& expansion);

/// Boundaries b (between cells b and b + 1) where the reconstruction jumps by
/// more than `threshold`, ascending.
std::vector<long> breakpoints(const GreedyExpansion& expansion, double threshold = 0.0);

}  // namespace stepmp
