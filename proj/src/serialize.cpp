#include "subosc/serialize.hpp"

#include <charconv>
#include <cmath>

#include "subosc/errors.hpp"

namespace subosc {
namespace {

Json interval_json(const Interval& iv) { return Json::array({iv.lower, iv.upper}); }

Interval interval_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("interval must be [a, b]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw DomainError("complex scalar must be a number or [re, im]");
}

Json to_json(const AnalyticTarget& target) {
  Json j;
  j["kind"] = target.kind_name();
  std::visit(
      [&j](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, target::Constant>) {
          j["value"] = complex_to_json(k.value);
        } else if constexpr (std::is_same_v<K, target::ComplexExponential>) {
          j["rate"] = complex_to_json(k.rate);
        } else if constexpr (std::is_same_v<K, target::Sinusoid>) {
          j["frequency"] = k.frequency;
        } else if constexpr (std::is_same_v<K, target::Polynomial>) {
          Json c = Json::array();
          for (Complex z : k.coefficients) c.push_back(complex_to_json(z));
          j["coefficients"] = std::move(c);
        } else {
          j["width"] = k.width;
        }
      },
      target.kind());
  j["expansion_point"] = target.expansion_point();
  if (target.gain() != Complex{1.0, 0.0}) j["gain"] = complex_to_json(target.gain());
  return j;
}

AnalyticTarget target_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw DomainError("target needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  const double t0 = j.value("expansion_point", 0.0);
  const Complex gain = j.contains("gain") ? complex_from_json(j["gain"]) : Complex{1.0, 0.0};
  try {
    if (kind == "constant") {
      const Complex v = j.contains("value") ? complex_from_json(j["value"]) : Complex{1.0, 0.0};
      return AnalyticTarget(target::Constant{v}, t0, gain);
    }
    if (kind == "complex_exponential") {
      return AnalyticTarget(target::ComplexExponential{complex_from_json(j.at("rate"))}, t0, gain);
    }
    if (kind == "sinusoid") {
      return AnalyticTarget(target::Sinusoid{j.at("frequency").get<double>()}, t0, gain);
    }
    if (kind == "polynomial") {
      std::vector<Complex> c;
      for (const auto& z : j.at("coefficients")) c.push_back(complex_from_json(z));
      return AnalyticTarget(target::Polynomial{std::move(c)}, t0, gain);
    }
    if (kind == "gaussian") {
      return AnalyticTarget(target::Gaussian{j.at("width").get<double>()}, t0, gain);
    }
  } catch (const Json::exception& e) {
    throw DomainError("target '" + kind + "': " + e.what());
  }
  throw DomainError("unknown target kind '" + kind + "'");
}

Json to_json(const SynthesisPlan& plan) {
  Json j;
  j["omega"] = plan.carrier;
  j["order"] = plan.order;
  j["dilation"] = plan.dilation;
  j["interval"] = interval_json(plan.interval);
  j["eps1"] = plan.epsilon1;
  j["eps2"] = plan.epsilon2;
  j["feasible"] = plan.feasible;
  j["diagnostics"] = plan.diagnostics;
  j["time_scale"] = plan.time_scale;
  j["mode"] = to_string(plan.mode);
  j["superoscillation"] = plan.superoscillation;
  j["flatness_margin"] = plan.flatness_margin;
  j["epsilon"] = plan.requested_epsilon ? Json(*plan.requested_epsilon) : Json(nullptr);
  j["band"] = Json::array({plan.band_lower(), plan.band_upper()});
  return j;
}

SynthesisPlan plan_from_json(const Json& j) {
  SynthesisPlan plan;
  plan.carrier = j.at("omega").get<double>();
  plan.order = j.at("order").get<std::size_t>();
  plan.dilation = j.at("dilation").get<double>();
  plan.interval = interval_from(j.at("interval"));
  plan.epsilon1 = j.at("eps1").get<double>();
  plan.epsilon2 = j.at("eps2").get<double>();
  plan.feasible = j.at("feasible").get<bool>();
  plan.diagnostics = j.value("diagnostics", std::vector<std::string>{});
  plan.time_scale = j.value("time_scale", 1.0);
  plan.mode = split_mode_from_string(j.value("mode", std::string("one-sided")));
  plan.superoscillation = j.value("superoscillation", false);
  plan.flatness_margin = j.value("flatness_margin", 0.1);
  if (j.contains("epsilon") && !j["epsilon"].is_null()) {
    plan.requested_epsilon = j["epsilon"].get<double>();
  }
  return plan;
}

Json to_json(const BSplineSpectrum& spec) {
  Json j;
  j["power"] = spec.power;
  j["dilation"] = spec.dilation;
  j["time_scale"] = spec.time_scale;
  j["knots"] = spec.knots();
  Json pieces = Json::array();
  for (std::size_t p = 0; p < spec.spline.piece_count(); ++p) {
    pieces.push_back(spec.spline.local_coefficients(p));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

Json spectrum_sidecar(const CompositeSpectrum& spectrum) {
  Json parts = Json::array();
  for (const auto& part : spectrum.parts) {
    Json p;
    p["band_shift"] = part.band_shift;
    p["support"] = Json::array({part.lower(), part.upper()});
    p["knots"] = part.pieces.knots();
    Json disc = Json::array();
    for (const auto& d : part.discontinuities) {
      disc.push_back({{"omega", d.omega}, {"jump", d.jump}});
    }
    p["discontinuities"] = std::move(disc);
    Json pieces = Json::array();
    for (std::size_t k = 0; k < part.pieces.piece_count(); ++k) {
      Json coeffs = Json::array();
      for (Complex c : part.pieces.local_coefficients(k)) coeffs.push_back(complex_to_json(c));
      pieces.push_back(std::move(coeffs));
    }
    p["pieces"] = std::move(pieces);
    parts.push_back(std::move(p));
  }
  return Json{{"parts", std::move(parts)}};
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["sup_error"] = report.sup_error;
  j["periods"] = report.periods_of_min_frequency;
  j["dynamic_range_orders"] = report.dynamic_range_orders;
  j["classification"] = to_string(report.classification);
  j["grid"] = {{"density", report.grid_density}, {"spacing", report.grid_spacing}};
  j["window"] = interval_json(report.window);
  return j;
}

}  // namespace subosc
