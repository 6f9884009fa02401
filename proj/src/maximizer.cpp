#include "stepmp/maximizer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stepmp {

WaveformAtom WindowAtom::waveform() const {
  const double t = static_cast<double>(length);
  return WaveformAtom{t, 0.0, static_cast<double>(start) + 0.5 * (t - 1.0)};
}

ScoredAtom best_window(const ScalarSequence& seq) {
  const std::size_t n = seq.size();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + seq[i];

  ScoredAtom best{{1, 1}, -1.0, 0.0};
  // Lengths outer, starts inner: a strict '>' keeps the first (shortest,
  // leftmost) window among equal values.
  for (std::size_t len = 1; len <= n; ++len) {
    const double root = std::sqrt(static_cast<double>(len));
    const double* lo = prefix.data();
    const double* hi = prefix.data() + len;
    const std::size_t count = n - len + 1;
    double local_value = -1.0;
    std::size_t local_start = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const double v = std::abs(hi[i] - lo[i]) / root;
      if (v > local_value) {
        local_value = v;
        local_start = i;
      }
    }
    if (local_value > best.value) {
      best.value = local_value;
      best.atom = {static_cast<long>(local_start) + 1, static_cast<long>(len)};
      best.signed_sum = hi[local_start] - lo[local_start];
    }
  }
  return best;
}

ScoredAtom best_window_single_signed(const ScalarSequence& seq) {
  bool any_positive = false;
  bool any_negative = false;
  for (double v : seq) {
    any_positive |= v > 0.0;
    any_negative |= v < 0.0;
  }
  if (any_positive && any_negative) {
    throw std::invalid_argument("single-signed precondition violated: mixed-sign input");
  }
  return best_window(seq);
}

ScoredAtom brute_force_best(const ScalarSequence& seq) {
  const long n = static_cast<long>(seq.size());
  ScoredAtom best{{1, 1}, -1.0, 0.0};
  for (long len = 1; len <= n; ++len) {
    for (long start = 1; start + len - 1 <= n; ++start) {
      double sum = 0.0;
      for (long j = start; j < start + len; ++j) sum += seq[static_cast<std::size_t>(j - 1)];
      const double value = std::abs(sum) / std::sqrt(static_cast<double>(len));
      if (value > best.value) best = {{start, len}, value, sum};
    }
  }
  return best;
}

double three_term_max(const ScalarSequence& seq) {
  const long n = static_cast<long>(seq.size());
  const auto at = [&](long j) {
    return (j >= 1 && j <= n) ? seq[static_cast<std::size_t>(j - 1)] : 0.0;
  };
  const auto run = [&](long from, long to) {
    double s = 0.0;
    for (long j = from; j <= to; ++j) s += at(j);
    return s;
  };
  double best = 0.0;
  for (long k = 0; k <= n - 1; ++k) {
    const double wide = std::sqrt(static_cast<double>(k + 1));
    for (long m = 1; m <= n - k; ++m) {
      best = std::max(best, std::abs(run(m, m + k)) / wide);
      if (k > 0) best = std::max(best, std::abs(run(m, m + k - 1)) / std::sqrt(static_cast<double>(k)));
      best = std::max(best, std::abs(run(m - 1, m + k - 1)) / wide);
    }
  }
  return best;
}

}  // namespace stepmp
