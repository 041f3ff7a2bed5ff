#include "subosc/envelope.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "subosc/errors.hpp"

namespace subosc {

double sin_pi(double x) {
  // Reduce to r in [-1, 1]; x - 2 round(x / 2) is exact in binary floating point.
  const double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r > 0.5) return std::sin(std::numbers::pi * (1.0 - r));
  if (r < -0.5) return -std::sin(std::numbers::pi * (1.0 + r));
  return std::sin(std::numbers::pi * r);
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double y2 = (std::numbers::pi * x) * (std::numbers::pi * x);
    return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
  }
  return sin_pi(x) / (std::numbers::pi * x);
}

Envelope::Envelope(int power, double dilation, double time_scale)
    : power_(power), dilation_(dilation), time_scale_(time_scale) {
  if (power_ < 1) throw DomainError("envelope power must be >= 1");
  if (!(dilation_ > 0.0) || !std::isfinite(dilation_)) {
    throw DomainError("envelope dilation must be positive");
  }
  if (!(time_scale_ > 0.0) || !std::isfinite(time_scale_)) {
    throw DomainError("envelope time scale must be positive");
  }
}

double Envelope::half_band() const { return time_scale_ * std::numbers::pi / dilation_; }

double Envelope::operator()(double t) const {
  const double x = time_scale_ * t / (static_cast<double>(power_) * dilation_);
  return std::pow(sinc(x), power_);
}

std::vector<std::vector<double>> cardinal_bspline_pieces(int order) {
  if (order < 1) throw DomainError("cardinal B-spline order must be >= 1");
  std::vector<std::vector<double>> pieces{{1.0}};
  for (int k = 1; k < order; ++k) {
    // M_{k+1}(x) = integral of M_k over [x - 1, x]; piece j is
    // Q_j(s) - Q_{j-1}(s) with Q the running antiderivative.
    const std::size_t old_count = pieces.size();
    const std::size_t degree = pieces.front().size();  // new degree
    std::vector<std::vector<double>> next(old_count + 1, std::vector<double>(degree + 1, 0.0));
    for (std::size_t j = 0; j <= old_count; ++j) {
      auto& q = next[j];
      if (j >= 1) {
        double area = 0.0;
        const auto& prev = pieces[j - 1];
        for (std::size_t l = 0; l < prev.size(); ++l) area += prev[l] / static_cast<double>(l + 1);
        q[0] = area;
      }
      for (std::size_t l = 1; l <= degree; ++l) {
        const double here = j < old_count ? pieces[j][l - 1] : 0.0;
        const double before = j >= 1 ? pieces[j - 1][l - 1] : 0.0;
        q[l] = (here - before) / static_cast<double>(l);
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

BSplineSpectrum envelope_spectrum(const Envelope& env) {
  const int m = env.power();
  const double md = static_cast<double>(m) * env.dilation();
  const double alpha = env.time_scale();
  const double width = 2.0 * std::numbers::pi * alpha / md;
  const double height = md / alpha;

  auto pieces = cardinal_bspline_pieces(m);
  for (auto& p : pieces) {
    for (auto& c : p) c *= height;
  }
  BSplineSpectrum spec;
  spec.power = m;
  spec.dilation = env.dilation();
  spec.time_scale = alpha;
  spec.spline = UniformPiecewise<double>(-env.half_band(), width, std::move(pieces));
  return spec;
}

UniformPiecewise<double> spectrum_derivative(const BSplineSpectrum& spec, int order) {
  if (order < 0) throw DomainError("spectrum_derivative: order must be non-negative");
  if (order >= spec.power) {
    throw DomainError("spectrum_derivative: order must be below the envelope power");
  }
  return spec.spline.derivative(static_cast<std::size_t>(order));
}

}  // namespace subosc
