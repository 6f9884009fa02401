#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace stepmp {

/// Ordered, finite, non-empty run of real samples a_1..a_N.
class ScalarSequence {
 public:
  /// Throws std::invalid_argument("empty input") or on a non-finite value.
  explicit ScalarSequence(std::vector<double> values);
  ScalarSequence(std::initializer_list<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  const std::vector<double>& vector() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const ScalarSequence&, const ScalarSequence&) = default;

 private:
  std::vector<double> values_;
};

/// f(x) = sum_j a_j rect(x - j) over unit cells [j - 1/2, j + 1/2].
struct StepFunction {
  ScalarSequence coefficients;
  long origin = 1;

  std::size_t size() const { return coefficients.size(); }
  long first_cell() const { return origin; }
  long last_cell() const { return origin + static_cast<long>(size()) - 1; }
  /// Coefficient of cell j, zero outside the support.
  double cell(long j) const;
};

struct ShiftRecord {
  double shift = 0.0;
};

StepFunction make_step_function(const ScalarSequence& seq);

double l2_norm(const StepFunction& f);
double l2_norm(std::span<const double> values);

/// Cells are half-open [j - 1/2, j + 1/2) except the last, which is closed.
double evaluate(const StepFunction& f, double x);

std::pair<ScalarSequence, ShiftRecord> shift_mean(const ScalarSequence& seq, double c);
ScalarSequence remove_shift(const ScalarSequence& seq, const ShiftRecord& record);

}  // namespace stepmp
