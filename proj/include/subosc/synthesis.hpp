#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subosc/envelope.hpp"
#include "subosc/polynomial.hpp"
#include "subosc/targets.hpp"

namespace subosc {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double length() const { return upper - lower; }
  double center() const { return 0.5 * (lower + upper); }
  double half_width() const { return 0.5 * (upper - lower); }
  // Largest |t| on the interval; the envelope is centred at t = 0.
  double max_abs() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// How s(t) is split between the +Omega and -Omega carriers.
enum class SplitMode {
  one_sided,            // s_+ = s, s_- = 0
  two_sided_half,       // s_+ = s_- = s / 2
  two_sided_conjugate,  // s_+ = s / 2, p_- = conj(p_+); real output for real s
};

std::string to_string(SplitMode mode);
SplitMode split_mode_from_string(const std::string& name);

struct PlanOptions {
  SplitMode mode = SplitMode::one_sided;
  double flatness_margin = 0.1;  // "a << (N+1) delta" read as a <= margin (N+1) delta
  double taylor_share = 0.5;     // fraction of epsilon given to the Taylor remainder
  OrderSearch search{};
  int max_doublings = 20;
  bool superoscillation = false;  // permit a band that contains omega = 0
  double time_scale = 1.0;
  std::size_t flatness_samples = 2048;
};

/// Complete parameter set for one synthesis, with certified error terms.
struct SynthesisPlan {
  double carrier = 0.0;  // Omega
  std::size_t order = 0;  // N
  double dilation = 1.0;  // delta
  double time_scale = 1.0;  // alpha
  Interval interval;
  double epsilon1 = 0.0;  // certified Taylor remainder bound (sum over parts)
  double epsilon2 = 0.0;  // certified envelope flatness bound (sum over parts)
  std::optional<double> requested_epsilon;
  SplitMode mode = SplitMode::one_sided;
  bool superoscillation = false;
  double flatness_margin = 0.1;
  bool feasible = false;
  std::vector<std::string> diagnostics;

  double half_band() const;  // alpha pi / delta
  double band_lower() const { return carrier - half_band(); }
  double band_upper() const { return carrier + half_band(); }
  // Smallest |omega| in the occupied band(s); 0 when a band contains dc.
  double min_frequency() const;
  double max_frequency() const;

  friend bool operator==(const SynthesisPlan&, const SynthesisPlan&) = default;
};

// Certificate for max |p(t)| |1 - e(t)| over the interval, from
// |1 - sinc^m(x)| <= m (pi x)^2 / 6.
double flatness_bound(const ComplexPolynomial& poly, const Envelope& env,
                      const Interval& interval, std::size_t samples = 2048);

// Evaluates an explicit (Omega, N, delta) configuration: certified error
// terms plus the duration / flatness feasibility conditions.
SynthesisPlan make_plan(const AnalyticTarget& target, const Interval& interval,
                        double carrier, std::size_t order, double dilation,
                        const PlanOptions& options = {},
                        std::optional<double> requested_epsilon = std::nullopt);

// Chooses N from the Taylor budget, then doubles delta until the flatness
// budget and the feasibility conditions hold. Returns the best plan found;
// `feasible` is false if the dilation cap was reached first.
SynthesisPlan plan_synthesis(const AnalyticTarget& target, const Interval& interval,
                             double epsilon, double carrier, double dilation,
                             const PlanOptions& options = {});

struct BandMapping {
  double carrier = 0.0;
  double dilation = 1.0;
  double time_scale = 1.0;
};

// Maps [omega1, omega2] onto carrier +- time_scale * pi / dilation.
BandMapping band_mapping(double omega1, double omega2, double dilation,
                         bool superoscillation = false);

// Planning against an arbitrary band: the band fixes Omega and alpha / delta,
// so flatness is reached by raising N instead of delta.
SynthesisPlan plan_for_band(const AnalyticTarget& target, const Interval& interval,
                            double epsilon, double omega1, double omega2, double dilation,
                            PlanOptions options = {});

/// One carrier branch p(t) e(t) exp(i carrier t).
struct CarrierPart {
  ComplexPolynomial poly;
  Envelope envelope;
  double carrier = 0.0;

  Complex operator()(double t) const;
  // p(t) e(t): the bandlimited factor.
  Complex baseband(double t) const;
};

class BandpassFunction {
 public:
  BandpassFunction(std::optional<CarrierPart> plus, std::optional<CarrierPart> minus,
                   SynthesisPlan plan);

  const std::optional<CarrierPart>& plus_part() const { return plus_; }
  const std::optional<CarrierPart>& minus_part() const { return minus_; }
  const SynthesisPlan& plan() const { return plan_; }
  std::vector<const CarrierPart*> parts() const;

  Complex operator()(double t) const;

  double max_frequency() const;

 private:
  std::optional<CarrierPart> plus_;
  std::optional<CarrierPart> minus_;
  SynthesisPlan plan_;
};

BandpassFunction assemble(const SynthesisPlan& plan, const AnalyticTarget& target,
                          bool allow_infeasible = false);

// One-sided assembly from an explicit polynomial and envelope.
BandpassFunction assemble(const SynthesisPlan& plan, ComplexPolynomial poly, Envelope env,
                          bool allow_infeasible = false);

}  // namespace subosc
