#include "subosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "subosc/errors.hpp"

namespace subosc {
namespace {

// Uniform grid over [lower, upper], endpoints included, with at least
// `density` samples per period of omega_max.
struct Grid {
  double lower;
  double upper;
  double step;
  std::size_t intervals;

  double at(std::size_t i) const {
    return i == intervals ? upper : lower + step * static_cast<double>(i);
  }
};

Grid make_grid(const Interval& iv, double omega_max, double density) {
  if (!(density >= kMinGridDensity)) {
    std::ostringstream msg;
    msg << "grid density " << density << " is below " << kMinGridDensity
        << " samples per period";
    throw DomainError(msg.str());
  }
  const double period = 2.0 * std::numbers::pi / omega_max;
  const double target_step = period / density;
  const auto n = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(iv.length() / target_step)));
  return {iv.lower, iv.upper, iv.length() / static_cast<double>(n), n};
}

double max_abs_real(const BandpassFunction& f, const Grid& g) {
  double peak = 0.0;
  for (std::size_t i = 0; i <= g.intervals; ++i) {
    peak = std::max(peak, std::abs(f(g.at(i)).real()));
  }
  return peak;
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::superoscillatory:
      return "superoscillatory";
    case Classification::suboscillatory:
      return "suboscillatory";
    case Classification::neither:
      return "neither";
  }
  return "neither";
}

ErrorMeasurement measure_error(const BandpassFunction& f, const AnalyticTarget& target,
                               const Interval& interval, double grid_density) {
  if (!(interval.length() > 0.0)) throw DomainError("measure_error: empty interval");
  const Grid g = make_grid(interval, f.max_frequency(), grid_density);
  ErrorMeasurement out;
  out.spacing = g.step;
  out.samples = g.intervals + 1;
  for (std::size_t i = 0; i <= g.intervals; ++i) {
    const double t = g.at(i);
    const double err = std::abs(f(t) - target(t));
    if (err > out.sup_error || i == 0) {
      out.sup_error = err;
      out.argmax = t;
    }
  }
  return out;
}

double measure_dynamic_range(const BandpassFunction& f, const Interval& interval,
                             const Interval& window, double grid_density) {
  if (!(window.lower <= interval.lower && window.upper >= interval.upper)) {
    throw DomainError("measure_dynamic_range: survey window must contain the interval");
  }
  if (!(interval.length() > 0.0)) throw DomainError("measure_dynamic_range: empty interval");
  const double w = f.max_frequency();
  const double inside = max_abs_real(f, make_grid(interval, w, grid_density));
  if (inside == 0.0) {
    throw DomainError("measure_dynamic_range: function vanishes on the interval");
  }
  const double outside =
      std::max(inside, max_abs_real(f, make_grid(window, w, grid_density)));
  return std::log10(outside / inside);
}

Classification classify(double omega1, double omega2, double local_frequency) {
  if (!(omega2 > omega1)) throw DomainError("classify: need omega2 > omega1");
  const double wl = std::abs(local_frequency);
  const double product = omega1 * omega2;
  if (product < 0.0 && wl > std::max(std::abs(omega1), omega2)) {
    return Classification::superoscillatory;
  }
  if (product > 0.0 && wl < std::min(std::abs(omega1), std::abs(omega2))) {
    return Classification::suboscillatory;
  }
  return Classification::neither;
}

double periods_check(const Interval& interval, double omega_min) {
  if (!(omega_min > 0.0)) throw DomainError("periods_check: omega_min must be positive");
  return interval.length() * omega_min / (2.0 * std::numbers::pi);
}

VerificationReport verify(const BandpassFunction& f, const AnalyticTarget& target,
                          const Interval& window, double grid_density) {
  const SynthesisPlan& plan = f.plan();
  VerificationReport report;
  const ErrorMeasurement err = measure_error(f, target, plan.interval, grid_density);
  report.sup_error = err.sup_error;
  report.grid_density = grid_density;
  report.grid_spacing = err.spacing;
  report.window = window;
  const double w_min = plan.min_frequency();
  report.periods_of_min_frequency = w_min > 0.0 ? periods_check(plan.interval, w_min) : 0.0;
  report.dynamic_range_orders = measure_dynamic_range(f, plan.interval, window, grid_density);
  report.classification =
      classify(plan.band_lower(), plan.band_upper(), target.local_frequency());
  return report;
}

}  // namespace subosc
