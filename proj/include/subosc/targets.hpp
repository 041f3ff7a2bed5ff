#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subosc/polynomial.hpp"

namespace subosc {

namespace target {
struct Constant {
  Complex value{1.0, 0.0};
  friend bool operator==(const Constant&, const Constant&) = default;
};
// exp(rate * t)
struct ComplexExponential {
  Complex rate;
  friend bool operator==(const ComplexExponential&, const ComplexExponential&) = default;
};
// sin(frequency * t)
struct Sinusoid {
  double frequency = 0.0;
  friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
};
// sum_k coefficients[k] t^k, expanded about t = 0
struct Polynomial {
  std::vector<Complex> coefficients;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};
// exp(-(t / width)^2)
struct Gaussian {
  double width = 1.0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};
using Kind = std::variant<Constant, ComplexExponential, Sinusoid, Polynomial, Gaussian>;
}  // namespace target

/// An entire function s(t) described by a closed-form family.
///
/// Provides Taylor coefficients about `expansion_point` to any order and a
/// closed-form growth bound M(R) >= max |s(z)| on the circle |z - t0| = R.
/// `gain` multiplies the whole function; the two-sided split uses it for s/2.
class AnalyticTarget {
 public:
  AnalyticTarget() = default;
  explicit AnalyticTarget(target::Kind kind, double expansion_point = 0.0,
                          Complex gain = {1.0, 0.0});

  static AnalyticTarget constant(Complex value) { return AnalyticTarget(target::Constant{value}); }

  const target::Kind& kind() const { return kind_; }
  std::string kind_name() const;
  double expansion_point() const { return expansion_point_; }
  Complex gain() const { return gain_; }

  AnalyticTarget expanded_about(double t0) const;
  AnalyticTarget scaled(Complex factor) const;

  Complex operator()(double t) const;
  Complex operator()(Complex z) const;

  // Coefficients a_0..a_order of s about the expansion point.
  std::vector<Complex> taylor_coefficients(std::size_t order) const;
  Complex taylor_coefficient(std::size_t n) const;

  // Upper bound for |s(z)| on |z - t0| = radius.
  double growth_bound(double radius) const;

  // Degree when s is a polynomial, nullopt otherwise.
  std::optional<std::size_t> polynomial_degree() const;

  bool is_real_valued() const;

  // Declared oscillation rate on the real axis (0 for non-oscillatory kinds).
  double local_frequency() const;

  friend bool operator==(const AnalyticTarget&, const AnalyticTarget&) = default;

 private:
  target::Kind kind_ = target::Constant{};
  double expansion_point_ = 0.0;
  Complex gain_{1.0, 0.0};
};

/// Certified bound on |g(t) - p_N(t)| for |t - t0| <= half_width, where
/// g(t) = s(t) exp(-carrier_rate t) and p_N its degree-N Taylor polynomial.
///
/// `radius` is measured in the rate-scaled variable z = lambda (t - t0),
/// lambda = |carrier_rate| (or 1 when the rate is zero), so that for s = 1
/// and carrier_rate = i Omega the bound reads
/// (Omega a / r)^(N+1) e^r / (1 - Omega a / r).
struct RemainderBound {
  std::size_t order = 0;
  double radius = 0.0;
  double bound_value = 0.0;
};

// Degree-N Taylor polynomial of s(t) exp(-carrier_rate t) about the target's
// expansion point (Cauchy product of the two series).
ComplexPolynomial taylor_product(const AnalyticTarget& target, Complex carrier_rate,
                                 long order);

double effective_rate(Complex carrier_rate);

RemainderBound remainder_bound(const AnalyticTarget& target, Complex carrier_rate,
                               long order, double half_width, double radius);

struct OrderSearch {
  std::size_t max_order = 200;
  std::size_t radius_grid_points = 64;
  double ratio_floor = 1.05;
  double ratio_ceiling = 20.0;
};

// Smallest N whose radius-optimized remainder bound is below epsilon1.
RemainderBound select_order(const AnalyticTarget& target, Complex carrier_rate,
                            double half_width, double epsilon1,
                            const OrderSearch& search = {});

// Bound minimized over the geometric radius grid, for a fixed order.
RemainderBound optimized_remainder_bound(const AnalyticTarget& target,
                                         Complex carrier_rate, std::size_t order,
                                         double half_width,
                                         const OrderSearch& search = {});

}  // namespace subosc
