#pragma once

// Inner products of step functions against the rectangular-window waveform
// dictionary G(t, xi, u)(x) = t^{-1/2} rect((x - u) / t) exp(2 pi i xi x).

#include <complex>
#include <optional>
#include <vector>

#include "stepmp/core.hpp"

namespace stepmp {

using ComplexValue = std::complex<double>;

struct WaveformAtom {
  double t = 1.0;   ///< scale, > 0
  double xi = 0.0;  ///< modulation, cycles per unit
  double u = 0.0;   ///< translation (window centre)

  /// Throws std::invalid_argument unless t > 0 and all fields finite.
  void validate() const;
  double lo() const { return u - 0.5 * t; }
  double hi() const { return u + 0.5 * t; }
};

struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

/// How the support of cell j and the atom window meet.
enum class OverlapCase {
  disjoint,
  cell_inside_window,   // D_j within D_{u,t}
  window_inside_cell,   // D_{u,t} within D_j
  window_left,          // window covers the left edge of the cell
  window_right,         // window covers the right edge of the cell
};

/// [j - 1/2, j + 1/2] intersected with [u - t/2, u + t/2]; nullopt when disjoint.
std::optional<Interval> overlap_interval(long j, const WaveformAtom& atom);
OverlapCase classify_overlap(long j, const WaveformAtom& atom);

/// Integral of exp(2 pi i xi x) over [lo, hi], evaluated as
/// exp(2 pi i xi m) * sin(pi xi L) / (pi xi) with m the midpoint and L the
/// length. The sinc form has no cancellation as xi -> 0, so the only special
/// case is xi == 0 (either sign), which returns L exactly.
ComplexValue modulated_integral(double lo, double hi, double xi);

/// Integral of rect(x - j) rect((x - u)/t) exp(2 pi i xi x) dx.
ComplexValue phi(long j, const WaveformAtom& atom);

/// <f, G_atom>; only cells touching the window are visited.
ComplexValue inner_product(const StepFunction& f, const WaveformAtom& atom);

/// Two-cell model case for a window of scale t <= 1 straddling the boundary
/// between cells n-1 and n, with s the part of the window inside cell n-1.
/// Requires 0 <= s <= t <= 1 and t > 0, else throws "outside model-case region".
double h_value(double xi, double s, double t, double a_prev, double a_n);

/// |a_prev * s + middle_sum + a_next * (t - s - k)| / sqrt(t) on the triangle
/// k <= t <= k + 1, 0 <= s <= t - k (t > 0).
double psi_k(double s, double t, int k, double a_prev, double middle_sum, double a_next);

/// Same, reading a_{n-1}, a_n + ... + a_{n+k-1} and a_{n+k} from `seq`
/// (1-based n). Indices outside [1, N] contribute zero.
double psi_k(double s, double t, long n, int k, const ScalarSequence& seq);

/// Values of psi_k at the triangle vertices (0, k), (0, k + 1), (1, k + 1).
/// Vertex (0, k) is skipped when k == 0.
double psi_k_vertex_max(int k, double a_prev, double middle_sum, double a_next);

/// |<f, G>| for the alternating pair f = {-a, a} on cells 1, 2 with
/// u = 1 + delta. Evaluated per cell from the overlap case tables, except in
/// the full-coverage band where both cells lie inside the window and the
/// closed form 2|a| sin^2(pi xi) / (sqrt(t) |pi xi|) applies.
/// Throws when |delta| > (t + 1) / 2.
double alternating_modulus(double a, double t, double delta, double xi);

/// 2|a| sin^2(pi xi) / (sqrt(t) |pi xi|); zero at xi == 0.
double alternating_full_cover_modulus(double a, double t, double xi);

/// Precomputed antiderivative of f(x) exp(2 pi i xi x) for one modulation xi.
/// Evaluates <f, G(t, xi, u)> in O(1) per atom; used by dense grid sweeps.
class WindowTransform {
 public:
  WindowTransform(const StepFunction& f, double xi);

  ComplexValue inner_product(double t, double u) const;
  double xi() const { return xi_; }

 private:
  ComplexValue antiderivative(double x) const;

  const StepFunction* f_;
  double xi_;
  double left_;
  double right_;
  std::vector<ComplexValue> cumulative_;  // integral up to the left edge of each cell
};

}  // namespace stepmp
