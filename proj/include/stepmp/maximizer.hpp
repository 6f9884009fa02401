#pragma once

#include <cstddef>

#include "stepmp/core.hpp"
#include "stepmp/dictionary.hpp"

namespace stepmp {

/// Cell-aligned wavelet atom covering cells start .. start + length - 1.
struct WindowAtom {
  long start = 1;
  long length = 1;

  long end() const { return start + length - 1; }
  /// Equivalent (t, xi, u) = (L, 0, start + (L - 1) / 2).
  WaveformAtom waveform() const;

  friend bool operator==(const WindowAtom&, const WindowAtom&) = default;
};

struct ScoredAtom {
  WindowAtom atom;
  double value = 0.0;       ///< |signed_sum| / sqrt(length)
  double signed_sum = 0.0;  ///< sum of the covered values
};

/// Window maximizing |sum| / sqrt(L) over every consecutive run of `seq`.
/// Ties go to the smallest length, then the smallest start. O(N^2) window
/// evaluations off a single prefix-sum table.
ScoredAtom best_window(const ScalarSequence& seq);

/// Entry point for sequences that are entirely >= 0 or entirely <= 0; for those
/// the modulated dictionary offers nothing over the wavelet one.
/// Throws std::invalid_argument on mixed signs.
ScoredAtom best_window_single_signed(const ScalarSequence& seq);

/// Reference search: every window summed directly, no prefix table.
ScoredAtom brute_force_best(const ScalarSequence& seq);

/// Maximum over 0 <= k <= N-1, 1 <= n <= N-k of the three candidates
///   |a_n + .. + a_{n+k}| / sqrt(k+1),
///   |a_n + .. + a_{n+k-1}| / sqrt(k),
///   |a_{n-1} + .. + a_{n+k-1}| / sqrt(k+1),
/// with a_0 = 0 and the empty k = 0 middle candidate skipped.
double three_term_max(const ScalarSequence& seq);

}  // namespace stepmp
