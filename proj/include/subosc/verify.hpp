#pragma once

#include <cstddef>
#include <string>

#include "subosc/synthesis.hpp"
#include "subosc/targets.hpp"

namespace subosc {

enum class Classification { superoscillatory, suboscillatory, neither };

std::string to_string(Classification c);

// Minimum samples per period of the highest frequency for any sup-norm grid.
inline constexpr double kMinGridDensity = 50.0;

struct ErrorMeasurement {
  double sup_error = 0.0;
  double spacing = 0.0;  // grid step; bounds the gap to the true sup
  std::size_t samples = 0;
  double argmax = 0.0;
};

ErrorMeasurement measure_error(const BandpassFunction& f, const AnalyticTarget& target,
                               const Interval& interval, double grid_density = kMinGridDensity);

// log10(max |Re f| over window / max |Re f| over interval).
double measure_dynamic_range(const BandpassFunction& f, const Interval& interval,
                             const Interval& window, double grid_density = kMinGridDensity);

Classification classify(double omega1, double omega2, double local_frequency);

// Interval length in periods of omega_min.
double periods_check(const Interval& interval, double omega_min);

struct VerificationReport {
  double sup_error = 0.0;
  double periods_of_min_frequency = 0.0;
  double dynamic_range_orders = 0.0;
  Classification classification = Classification::neither;
  double grid_density = kMinGridDensity;
  double grid_spacing = 0.0;
  Interval window;
};

VerificationReport verify(const BandpassFunction& f, const AnalyticTarget& target,
                          const Interval& window, double grid_density = kMinGridDensity);

}  // namespace subosc
