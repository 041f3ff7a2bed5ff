#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subosc/serialize.hpp"
#include "subosc/synthesis.hpp"
#include "subosc/targets.hpp"

namespace subosc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInfeasible = 2,
  kNumericFailure = 3,
  kIoFailure = 4,
};

/// Everything one CLI invocation needs. Times are in unit-time, frequencies
/// in rad/unit-time.
struct JobConfig {
  std::string command = "synth";  // plan | synth | verify | spectrum | sweep
  std::optional<std::string> preset;
  AnalyticTarget target;
  Interval interval{-1.0, 1.0};
  double omega = 6.283185307179586;
  double delta = 4.0;
  std::optional<std::size_t> order;
  std::optional<double> epsilon;
  SplitMode mode = SplitMode::one_sided;
  bool superoscillation = false;
  std::optional<std::pair<double, double>> band;
  double flatness_margin = 0.1;
  double grid_density = 50.0;
  std::optional<double> window;  // half-width of the survey window about the interval centre
  std::size_t spectrum_points = 2001;
  std::size_t n_max = 200;
  bool force = false;
  std::string out;  // empty or "-" writes to stdout
  std::string format = "csv";  // csv | json | svg

  std::vector<std::size_t> sweep_orders;
  std::vector<double> sweep_deltas;
  std::vector<double> sweep_omegas;
  std::vector<double> sweep_half_widths;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

Json to_json(const JobConfig& config);
JobConfig job_from_json(const Json& j);

// Named parameter sets; "fig1" is a = 1, N = 19, Omega = 2 pi, delta = 4, s = 1.
JobConfig apply_preset(JobConfig config, const std::string& name);

SynthesisPlan build_plan(const JobConfig& config);

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

}  // namespace subosc::cli
