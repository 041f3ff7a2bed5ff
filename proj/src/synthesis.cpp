#include "subosc/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "subosc/errors.hpp"

namespace subosc {
namespace {

constexpr Complex kI{0.0, 1.0};

struct PartSpec {
  AnalyticTarget target;
  Complex rate;  // g = s_part(t) exp(-rate t)
  double carrier;
};

std::vector<PartSpec> split_target(const AnalyticTarget& target, double carrier,
                                   SplitMode mode) {
  switch (mode) {
    case SplitMode::one_sided:
      return {{target, kI * carrier, carrier}};
    case SplitMode::two_sided_conjugate:
      if (!target.is_real_valued()) {
        throw DomainError("conjugate split requires a real-valued target");
      }
      [[fallthrough]];
    case SplitMode::two_sided_half: {
      const AnalyticTarget half = target.scaled(0.5);
      return {{half, kI * carrier, carrier}, {half, -kI * carrier, -carrier}};
    }
  }
  throw DomainError("unknown split mode");
}

void check_band(double carrier, double half_band, bool superoscillation) {
  if (!std::isfinite(carrier)) throw DomainError("carrier must be finite");
  if (!superoscillation && !(std::abs(carrier) > half_band)) {
    std::ostringstream msg;
    msg << "not bandpass: band [" << carrier - half_band << ", " << carrier + half_band
        << "] contains omega = 0";
    throw DomainError(msg.str());
  }
}

}  // namespace

double Interval::max_abs() const { return std::max(std::abs(lower), std::abs(upper)); }

std::string to_string(SplitMode mode) {
  switch (mode) {
    case SplitMode::one_sided:
      return "one-sided";
    case SplitMode::two_sided_half:
      return "two-sided-half";
    case SplitMode::two_sided_conjugate:
      return "two-sided-conj";
  }
  return "unknown";
}

SplitMode split_mode_from_string(const std::string& name) {
  if (name == "one-sided") return SplitMode::one_sided;
  if (name == "two-sided-half") return SplitMode::two_sided_half;
  if (name == "two-sided-conj") return SplitMode::two_sided_conjugate;
  throw DomainError("unknown split mode '" + name + "'");
}

double SynthesisPlan::half_band() const { return time_scale * std::numbers::pi / dilation; }

double SynthesisPlan::min_frequency() const {
  return std::max(0.0, std::abs(carrier) - half_band());
}

double SynthesisPlan::max_frequency() const { return std::abs(carrier) + half_band(); }

double flatness_bound(const ComplexPolynomial& poly, const Envelope& env,
                      const Interval& interval, std::size_t samples) {
  if (interval.length() <= 0.0) return 0.0;
  samples = std::max<std::size_t>(samples, 2);
  double peak = 0.0;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = interval.lower + interval.length() * static_cast<double>(i) /
                                          static_cast<double>(samples);
    peak = std::max(peak, std::abs(poly(t)));
  }
  const double x = env.time_scale() * interval.max_abs() / env.dilation();
  const double deficit =
      std::numbers::pi * std::numbers::pi * x * x / (6.0 * static_cast<double>(env.power()));
  return peak * deficit;
}

SynthesisPlan make_plan(const AnalyticTarget& target, const Interval& interval,
                        double carrier, std::size_t order, double dilation,
                        const PlanOptions& options, std::optional<double> requested_epsilon) {
  if (!(interval.upper > interval.lower)) throw DomainError("interval must satisfy a < b");
  if (!(dilation >= 1.0) || !std::isfinite(dilation)) {
    throw DomainError("dilation must satisfy delta >= 1");
  }

  SynthesisPlan plan;
  plan.carrier = carrier;
  plan.order = order;
  plan.dilation = dilation;
  plan.time_scale = options.time_scale;
  plan.interval = interval;
  plan.requested_epsilon = requested_epsilon;
  plan.mode = options.mode;
  plan.superoscillation = options.superoscillation;
  plan.flatness_margin = options.flatness_margin;
  check_band(carrier, plan.half_band(), options.superoscillation);

  const AnalyticTarget centred = target.expanded_about(interval.center());
  const Envelope env(static_cast<int>(order) + 1, dilation, options.time_scale);
  for (const PartSpec& part : split_target(centred, carrier, options.mode)) {
    plan.epsilon1 += optimized_remainder_bound(part.target, part.rate, order,
                                               interval.half_width(), options.search)
                         .bound_value;
    const ComplexPolynomial poly =
        taylor_product(part.target, part.rate, static_cast<long>(order));
    plan.epsilon2 += flatness_bound(poly, env, interval, options.flatness_samples);
  }

  plan.feasible = true;
  auto fail = [&plan](std::string why) {
    plan.feasible = false;
    plan.diagnostics.push_back(std::move(why));
  };
  std::ostringstream msg;
  if (!options.superoscillation) {
    const double needed = std::numbers::pi / plan.min_frequency();
    if (!(needed <= interval.half_width())) {
      msg << "interval half-width " << interval.half_width()
          << " is shorter than half a period of omega_min (" << needed << ")";
      fail(msg.str());
      msg.str("");
    }
  }
  const double reach = options.time_scale * interval.max_abs();
  const double limit = options.flatness_margin * static_cast<double>(order + 1) * dilation;
  if (!(reach <= limit)) {
    msg << "envelope not flat: time extent " << reach << " exceeds " << limit;
    fail(msg.str());
    msg.str("");
  }
  if (requested_epsilon && !(plan.epsilon1 + plan.epsilon2 < *requested_epsilon)) {
    msg << "certified error " << plan.epsilon1 + plan.epsilon2 << " is not below "
        << *requested_epsilon;
    fail(msg.str());
  }
  return plan;
}

namespace {

std::size_t order_for_budget(const AnalyticTarget& target, const Interval& interval,
                             double carrier, double budget, const PlanOptions& options) {
  const AnalyticTarget centred = target.expanded_about(interval.center());
  const auto parts = split_target(centred, carrier, options.mode);
  const double share = budget / static_cast<double>(parts.size());
  std::size_t order = 0;
  for (const PartSpec& part : parts) {
    const RemainderBound b =
        select_order(part.target, part.rate, interval.half_width(), share, options.search);
    order = std::max(order, b.order);
  }
  return order;
}

bool budgets_met(const SynthesisPlan& plan, double eps1, double eps2) {
  return plan.feasible && plan.epsilon1 < eps1 && plan.epsilon2 < eps2;
}

}  // namespace

SynthesisPlan plan_synthesis(const AnalyticTarget& target, const Interval& interval,
                             double epsilon, double carrier, double dilation,
                             const PlanOptions& options) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (!(dilation >= 1.0)) throw DomainError("dilation must satisfy delta >= 1");
  check_band(carrier, options.time_scale * std::numbers::pi / dilation,
             options.superoscillation);
  const double eps1 = options.taylor_share * epsilon;
  const double eps2 = epsilon - eps1;
  const std::size_t order = order_for_budget(target, interval, carrier, eps1, options);

  SynthesisPlan plan;
  double delta = dilation;
  for (int d = 0; d <= options.max_doublings; ++d, delta *= 2.0) {
    plan = make_plan(target, interval, carrier, order, delta, options, epsilon);
    if (budgets_met(plan, eps1, eps2)) return plan;
  }
  plan.feasible = false;
  std::ostringstream msg;
  msg << "dilation cap reached after " << options.max_doublings << " doublings";
  plan.diagnostics.push_back(msg.str());
  return plan;
}

BandMapping band_mapping(double omega1, double omega2, double dilation,
                         bool superoscillation) {
  if (!(omega2 > omega1)) throw DomainError("band_mapping: need omega2 > omega1");
  if (!(dilation > 0.0)) throw DomainError("band_mapping: dilation must be positive");
  if (!superoscillation && !(omega1 * omega2 > 0.0)) {
    throw DomainError("band_mapping: band contains omega = 0 (not bandpass)");
  }
  BandMapping out;
  out.carrier = 0.5 * (omega1 + omega2);
  out.dilation = dilation;
  out.time_scale = (omega2 - omega1) * dilation / (2.0 * std::numbers::pi);
  return out;
}

SynthesisPlan plan_for_band(const AnalyticTarget& target, const Interval& interval,
                            double epsilon, double omega1, double omega2, double dilation,
                            PlanOptions options) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  const BandMapping map = band_mapping(omega1, omega2, dilation, options.superoscillation);
  options.time_scale = map.time_scale;
  const double eps1 = options.taylor_share * epsilon;
  const double eps2 = epsilon - eps1;
  std::size_t order = order_for_budget(target, interval, map.carrier, eps1, options);

  SynthesisPlan plan;
  for (; order <= options.search.max_order; ++order) {
    plan = make_plan(target, interval, map.carrier, order, map.dilation, options, epsilon);
    if (budgets_met(plan, eps1, eps2)) return plan;
    // Only the envelope-flatness conditions improve with N.
    const bool duration_ok =
        options.superoscillation ||
        std::numbers::pi / plan.min_frequency() <= interval.half_width();
    if (!duration_ok) return plan;
  }
  plan.feasible = false;
  plan.diagnostics.push_back("order cap reached while flattening the envelope");
  return plan;
}

Complex CarrierPart::baseband(double t) const { return poly(t) * envelope(t); }

Complex CarrierPart::operator()(double t) const {
  return baseband(t) * std::polar(1.0, carrier * t);
}

BandpassFunction::BandpassFunction(std::optional<CarrierPart> plus,
                                   std::optional<CarrierPart> minus, SynthesisPlan plan)
    : plus_(std::move(plus)), minus_(std::move(minus)), plan_(std::move(plan)) {
  if (!plus_ && !minus_) throw DomainError("bandpass function needs at least one part");
}

std::vector<const CarrierPart*> BandpassFunction::parts() const {
  std::vector<const CarrierPart*> out;
  if (plus_) out.push_back(&*plus_);
  if (minus_) out.push_back(&*minus_);
  return out;
}

Complex BandpassFunction::operator()(double t) const {
  Complex sum{};
  if (plus_) sum += (*plus_)(t);
  if (minus_) sum += (*minus_)(t);
  return sum;
}

double BandpassFunction::max_frequency() const {
  double w = 0.0;
  for (const CarrierPart* p : parts()) {
    w = std::max(w, std::abs(p->carrier) + p->envelope.half_band());
  }
  return w;
}

BandpassFunction assemble(const SynthesisPlan& plan, const AnalyticTarget& target,
                          bool allow_infeasible) {
  if (!plan.feasible && !allow_infeasible) {
    throw PlanError("assemble: plan is infeasible and no override was given");
  }
  const AnalyticTarget centred = target.expanded_about(plan.interval.center());
  const Envelope env(static_cast<int>(plan.order) + 1, plan.dilation, plan.time_scale);
  const auto specs = split_target(centred, plan.carrier, plan.mode);
  const long n = static_cast<long>(plan.order);

  CarrierPart plus{taylor_product(specs[0].target, specs[0].rate, n), env, specs[0].carrier};
  std::optional<CarrierPart> minus;
  if (plan.mode == SplitMode::two_sided_half) {
    minus = CarrierPart{taylor_product(specs[1].target, specs[1].rate, n), env,
                        specs[1].carrier};
  } else if (plan.mode == SplitMode::two_sided_conjugate) {
    minus = CarrierPart{plus.poly.conjugate(), env, -plan.carrier};
  }
  return BandpassFunction(std::move(plus), std::move(minus), plan);
}

BandpassFunction assemble(const SynthesisPlan& plan, ComplexPolynomial poly, Envelope env,
                          bool allow_infeasible) {
  if (!plan.feasible && !allow_infeasible) {
    throw PlanError("assemble: plan is infeasible and no override was given");
  }
  return BandpassFunction(CarrierPart{std::move(poly), env, plan.carrier}, std::nullopt, plan);
}

}  // namespace subosc
