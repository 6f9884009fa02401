#include "stepmp/pursuit.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace stepmp {

void PursuitConfig::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(residual_epsilon >= 0.0) || !(coefficient_epsilon >= 0.0)) {
    throw std::invalid_argument("stopping thresholds must be nonnegative");
  }
  if (pre_shift && !std::isfinite(*pre_shift)) throw std::invalid_argument("shift must be finite");
}

std::pair<ExpansionTerm, ScalarSequence> pursuit_step(const ScalarSequence& residual) {
  const ScoredAtom best = best_window(residual);
  const double length = static_cast<double>(best.atom.length);
  const double average = best.signed_sum / length;

  std::vector<double> next = residual.vector();
  for (long j = best.atom.start; j <= best.atom.end(); ++j) {
    next[static_cast<std::size_t>(j - 1)] -= average;
  }
  ExpansionTerm term{best.atom, best.signed_sum / std::sqrt(length), 0, average};
  return {term, ScalarSequence(std::move(next))};
}

GreedyExpansion run_pursuit(const ScalarSequence& seq, const PursuitConfig& config) {
  config.validate();
  ShiftRecord shift{};
  ScalarSequence residual = seq;
  if (config.pre_shift) std::tie(residual, shift) = shift_mean(seq, *config.pre_shift);

  GreedyExpansion out{{}, residual, {l2_norm(residual.values())}, shift};
  while (static_cast<long>(out.terms.size()) < config.max_iterations) {
    if (out.norm_history.back() < config.residual_epsilon) break;
    auto [term, next] = pursuit_step(out.residual);
    const double magnitude = std::abs(term.coefficient);
    if (magnitude == 0.0 || magnitude < config.coefficient_epsilon) break;
    term.iteration = static_cast<long>(out.terms.size());
    out.terms.push_back(term);
    out.residual = std::move(next);
    out.norm_history.push_back(l2_norm(out.residual.values()));
  }
  return out;
}

ScalarSequence reconstruct(const GreedyExpansion& expansion) {
  std::vector<double> cells(expansion.size(), 0.0);
  for (const auto& term : expansion.terms) {
    const double step = term.level;
    for (long j = term.atom.start; j <= term.atom.end(); ++j) {
      cells[static_cast<std::size_t>(j - 1)] += step;
    }
  }
  for (double& v : cells) v -= expansion.shift.shift;
  return ScalarSequence(std::move(cells));
}

std::vector<LedgerRow> energy_ledger(const GreedyExpansion& expansion) {
  std::vector<LedgerRow> rows;
  rows.reserve(expansion.terms.size());
  for (std::size_t m = 0; m < expansion.terms.size(); ++m) {
    const double before = expansion.norm_history[m];
    const double after = expansion.norm_history[m + 1];
    const double c = expansion.terms[m].coefficient;
    rows.push_back({static_cast<long>(m), c * c, after * after, before * before - after * after});
  }
  return rows;
}

std::vector<long> breakpoints(const GreedyExpansion& expansion, double threshold) {
  const ScalarSequence recon = reconstruct(expansion);
  std::vector<long> out;
  for (std::size_t i = 1; i < recon.size(); ++i) {
    if (std::abs(recon[i] - recon[i - 1]) > threshold) out.push_back(static_cast<long>(i));
  }
  return out;
}

}  // namespace stepmp
