#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "subosc/envelope.hpp"
#include "subosc/spectral.hpp"
#include "subosc/synthesis.hpp"
#include "subosc/targets.hpp"
#include "subosc/verify.hpp"

namespace subosc {

using Json = nlohmann::ordered_json;

// Complex scalars are written as [re, im]; plain numbers are accepted on input.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const AnalyticTarget& target);
AnalyticTarget target_from_json(const Json& j);

// {omega, order, dilation, interval:[a,b], eps1, eps2, feasible, diagnostics, ...}
Json to_json(const SynthesisPlan& plan);
SynthesisPlan plan_from_json(const Json& j);

// {power, dilation, time_scale, knots:[...], pieces:[[c0..cd]...]}, coefficients in
// u = omega - left knot.
Json to_json(const BSplineSpectrum& spec);

// Knots and discontinuities of every carrier part.
Json spectrum_sidecar(const CompositeSpectrum& spectrum);

// {sup_error, periods, dynamic_range_orders, classification, grid:{density, spacing}, window}
Json to_json(const VerificationReport& report);

// Shortest round-trippable decimal form, locale independent.
std::string format_number(double x);

}  // namespace subosc
