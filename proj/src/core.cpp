#include "stepmp/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stepmp {

ScalarSequence::ScalarSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty input");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("non-finite value at index " + std::to_string(i));
    }
  }
}

ScalarSequence::ScalarSequence(std::initializer_list<double> values)
    : ScalarSequence(std::vector<double>(values)) {}

double StepFunction::cell(long j) const {
  if (j < first_cell() || j > last_cell()) return 0.0;
  return coefficients[static_cast<std::size_t>(j - origin)];
}

StepFunction make_step_function(const ScalarSequence& seq) { return StepFunction{seq, 1}; }

double l2_norm(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v * v;
  return std::sqrt(sum);
}

double l2_norm(const StepFunction& f) { return l2_norm(f.coefficients.values()); }

double evaluate(const StepFunction& f, double x) {
  const double left = static_cast<double>(f.first_cell()) - 0.5;
  const double right = static_cast<double>(f.last_cell()) + 0.5;
  if (!(x >= left && x <= right)) return 0.0;
  if (x == right) return f.cell(f.last_cell());
  return f.cell(static_cast<long>(std::floor(x + 0.5)));
}

std::pair<ScalarSequence, ShiftRecord> shift_mean(const ScalarSequence& seq, double c) {
  if (!std::isfinite(c)) throw std::invalid_argument("shift must be finite");
  std::vector<double> out(seq.begin(), seq.end());
  for (double& v : out) v += c;
  return {ScalarSequence(std::move(out)), ShiftRecord{c}};
}

ScalarSequence remove_shift(const ScalarSequence& seq, const ShiftRecord& record) {
  std::vector<double> out(seq.begin(), seq.end());
  for (double& v : out) v -= record.shift;
  return ScalarSequence(std::move(out));
}

}  // namespace stepmp
