#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "subosc/piecewise.hpp"

namespace subosc {

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

// sin(pi x) / (pi x); a short even series near the removable singularity.
double sinc(double x);

/// Sinc-power envelope e(t) = sinc^m(alpha t / (m delta)).
///
/// `time_scale` (alpha) is 1 for the unit-bandwidth construction; general
/// bands rescale the time axis. The spectrum is supported in
/// [-alpha pi / delta, alpha pi / delta].
class Envelope {
 public:
  Envelope(int power, double dilation, double time_scale = 1.0);

  int power() const { return power_; }
  double dilation() const { return dilation_; }
  double time_scale() const { return time_scale_; }
  double half_band() const;

  double operator()(double t) const;

  friend bool operator==(const Envelope&, const Envelope&) = default;

 private:
  int power_;
  double dilation_;
  double time_scale_;
};

/// Exact Fourier transform E(omega) of an Envelope: a dilated cardinal
/// B-spline of order m with m + 1 uniform knots spanning the support.
struct BSplineSpectrum {
  int power = 1;
  double dilation = 1.0;
  double time_scale = 1.0;
  UniformPiecewise<double> spline;

  // Rounding in the far tails can leave values of order -1e-27; E is a
  // convolution of nonnegative rectangles, so those are clamped to zero.
  double operator()(double omega) const { return std::max(0.0, spline(omega)); }
  std::vector<double> knots() const { return spline.knots(); }
};

// Pieces of the unit cardinal B-spline M_m (knots 0..m, unit integral), built
// by repeated integrate-and-difference of the previous order.
std::vector<std::vector<double>> cardinal_bspline_pieces(int order);

BSplineSpectrum envelope_spectrum(const Envelope& env);

// k-th derivative in omega; only 0 <= k <= m - 1 is classically defined.
UniformPiecewise<double> spectrum_derivative(const BSplineSpectrum& spec, int order);

}  // namespace subosc
