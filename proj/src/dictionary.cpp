#include "stepmp/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stepmp {
namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

ComplexValue unit_phase(double cycles) {
  const double angle = 2.0 * kPi * cycles;
  return {std::cos(angle), std::sin(angle)};
}

long cell_of(const StepFunction& f, double x) {
  const long j = static_cast<long>(std::floor(x + 0.5));
  return std::clamp(j, f.first_cell(), f.last_cell());
}

}  // namespace

void WaveformAtom::validate() const {
  if (!std::isfinite(t) || !std::isfinite(xi) || !std::isfinite(u)) {
    throw std::invalid_argument("atom parameters must be finite");
  }
  if (!(t > 0.0)) throw std::invalid_argument("atom scale t must be positive");
}

std::optional<Interval> overlap_interval(long j, const WaveformAtom& atom) {
  const double cell_lo = static_cast<double>(j) - 0.5;
  const double cell_hi = static_cast<double>(j) + 0.5;
  const double lo = std::max(cell_lo, atom.lo());
  const double hi = std::min(cell_hi, atom.hi());
  if (hi < lo) return std::nullopt;
  return Interval{lo, hi};
}

OverlapCase classify_overlap(long j, const WaveformAtom& atom) {
  const double cell_lo = static_cast<double>(j) - 0.5;
  const double cell_hi = static_cast<double>(j) + 0.5;
  if (atom.hi() < cell_lo || atom.lo() > cell_hi) return OverlapCase::disjoint;
  if (atom.lo() <= cell_lo && atom.hi() >= cell_hi) return OverlapCase::cell_inside_window;
  if (atom.lo() >= cell_lo && atom.hi() <= cell_hi) return OverlapCase::window_inside_cell;
  if (atom.lo() < cell_lo) return OverlapCase::window_left;
  return OverlapCase::window_right;
}

ComplexValue modulated_integral(double lo, double hi, double xi) {
  const double length = hi - lo;
  if (length <= 0.0) return {0.0, 0.0};
  if (xi == 0.0) return {length, 0.0};
  return unit_phase(xi * 0.5 * (lo + hi)) * (length * sinc(kPi * xi * length));
}

ComplexValue phi(long j, const WaveformAtom& atom) {
  const auto overlap = overlap_interval(j, atom);
  if (!overlap) return {0.0, 0.0};
  return modulated_integral(overlap->lo, overlap->hi, atom.xi);
}

ComplexValue inner_product(const StepFunction& f, const WaveformAtom& atom) {
  atom.validate();
  const long first = std::max(f.first_cell(), static_cast<long>(std::floor(atom.lo() + 0.5)));
  const long last = std::min(f.last_cell(), static_cast<long>(std::ceil(atom.hi() - 0.5)));
  ComplexValue sum{0.0, 0.0};
  for (long j = first; j <= last; ++j) {
    sum += f.cell(j) * phi(j, atom);
  }
  return sum / std::sqrt(atom.t);
}

// Region checks allow a few ulps so grid points computed as fractions stay inside.
double h_value(double xi, double s, double t, double a_prev, double a_n) {
  const double slack = 1e-12;
  if (!(t > 0.0 && t <= 1.0 + slack && s >= 0.0 && s <= t + slack)) {
    throw std::invalid_argument("outside model-case region");
  }
  if (xi == 0.0) return std::abs(a_prev * s + a_n * (t - s)) / std::sqrt(t);
  // sin(pi xi s) / (pi xi) == s * sinc(pi xi s)
  const double left = s * sinc(kPi * xi * s);
  const double right = (t - s) * sinc(kPi * xi * (t - s));
  const ComplexValue phase{std::cos(kPi * t * xi), std::sin(kPi * t * xi)};
  return std::abs(a_prev * left + a_n * phase * right) / std::sqrt(t);
}

double psi_k(double s, double t, int k, double a_prev, double middle_sum, double a_next) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const double lower = static_cast<double>(k);
  const double slack = 1e-12 * (lower + 1.0);
  if (!(t > 0.0 && t >= lower - slack && t <= lower + 1.0 + slack && s >= -slack &&
        s <= t - lower + slack)) {
    throw std::invalid_argument("outside triangle region");
  }
  return std::abs(a_prev * s + middle_sum + a_next * (t - s - lower)) / std::sqrt(t);
}

double psi_k(double s, double t, long n, int k, const ScalarSequence& seq) {
  const auto at = [&](long j) {
    return (j >= 1 && j <= static_cast<long>(seq.size())) ? seq[static_cast<std::size_t>(j - 1)]
                                                          : 0.0;
  };
  double middle = 0.0;
  for (long j = n; j < n + k; ++j) middle += at(j);
  return psi_k(s, t, k, at(n - 1), middle, at(n + k));
}

double psi_k_vertex_max(int k, double a_prev, double middle_sum, double a_next) {
  const double kk = static_cast<double>(k);
  double best = std::max(psi_k(0.0, kk + 1.0, k, a_prev, middle_sum, a_next),
                         psi_k(1.0, kk + 1.0, k, a_prev, middle_sum, a_next));
  if (k > 0) best = std::max(best, psi_k(0.0, kk, k, a_prev, middle_sum, a_next));
  return best;
}

namespace {

// Overlap integral for cell j written as the explicit case table in terms of
// the window centre u, independent of overlap_interval's min/max route.
ComplexValue phi_by_case(long j, double t, double u, double xi) {
  const double jd = static_cast<double>(j);
  const double outer = 0.5 * (t + 1.0);
  const double inner = 0.5 * std::abs(t - 1.0);
  if (u < jd - outer || u > jd + outer) return {0.0, 0.0};
  if (u <= jd - inner) return modulated_integral(jd - 0.5, u + 0.5 * t, xi);
  if (u >= jd + inner) return modulated_integral(u - 0.5 * t, jd + 0.5, xi);
  if (t >= 1.0) return modulated_integral(jd - 0.5, jd + 0.5, xi);
  return modulated_integral(u - 0.5 * t, u + 0.5 * t, xi);
}

}  // namespace

double alternating_full_cover_modulus(double a, double t, double xi) {
  if (xi == 0.0) return 0.0;
  const double s = std::sin(kPi * xi);
  return 2.0 * std::abs(a) / std::sqrt(t) * s * s / std::abs(kPi * xi);
}

double alternating_modulus(double a, double t, double delta, double xi) {
  if (!(t > 0.0)) throw std::invalid_argument("atom scale t must be positive");
  if (std::abs(delta) > 0.5 * (t + 1.0)) {
    throw std::invalid_argument("delta outside all branch ranges");
  }
  if (delta >= 0.5 * (3.0 - t) && delta <= 0.5 * (t - 1.0)) {
    return alternating_full_cover_modulus(a, t, xi);
  }
  const double u = 1.0 + delta;
  const ComplexValue sum = -phi_by_case(1, t, u, xi) + phi_by_case(2, t, u, xi);
  return std::abs(a) * std::abs(sum) / std::sqrt(t);
}

WindowTransform::WindowTransform(const StepFunction& f, double xi)
    : f_(&f),
      xi_(xi),
      left_(static_cast<double>(f.first_cell()) - 0.5),
      right_(static_cast<double>(f.last_cell()) + 0.5) {
  cumulative_.reserve(f.size() + 1);
  ComplexValue running{0.0, 0.0};
  for (long j = f.first_cell(); j <= f.last_cell(); ++j) {
    cumulative_.push_back(running);
    const double jd = static_cast<double>(j);
    running += f.cell(j) * modulated_integral(jd - 0.5, jd + 0.5, xi);
  }
  cumulative_.push_back(running);
}

ComplexValue WindowTransform::antiderivative(double x) const {
  const long j = cell_of(*f_, x);
  const double cell_lo = static_cast<double>(j) - 0.5;
  return cumulative_[static_cast<std::size_t>(j - f_->first_cell())] +
         f_->cell(j) * modulated_integral(cell_lo, x, xi_);
}

ComplexValue WindowTransform::inner_product(double t, double u) const {
  const double lo = std::max(u - 0.5 * t, left_);
  const double hi = std::min(u + 0.5 * t, right_);
  if (hi <= lo) return {0.0, 0.0};
  return (antiderivative(hi) - antiderivative(lo)) / std::sqrt(t);
}

}  // namespace stepmp
