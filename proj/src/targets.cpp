#include "subosc/targets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "subosc/errors.hpp"

namespace subosc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

// log of sum_k |b_k| R^k without overflow.
double log_abs_poly(std::span<const Complex> b, double radius) {
  double best = kNegInf;
  std::vector<double> logs;
  logs.reserve(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    const double mag = std::abs(b[k]);
    if (mag == 0.0) continue;
    const double lk = std::log(mag) + (k == 0 ? 0.0 : static_cast<double>(k) * std::log(radius));
    logs.push_back(lk);
    best = std::max(best, lk);
  }
  if (best == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double lk : logs) sum += std::exp(lk - best);
  return best + std::log(sum);
}

}  // namespace

AnalyticTarget::AnalyticTarget(target::Kind kind, double expansion_point, Complex gain)
    : kind_(std::move(kind)), expansion_point_(expansion_point), gain_(gain) {
  if (const auto* g = std::get_if<target::Gaussian>(&kind_); g && !(g->width > 0.0)) {
    throw DomainError("gaussian width must be positive");
  }
  if (const auto* p = std::get_if<target::Polynomial>(&kind_); p && p->coefficients.empty()) {
    throw DomainError("polynomial target needs at least one coefficient");
  }
}

std::string AnalyticTarget::kind_name() const {
  return std::visit(Overloaded{
                        [](const target::Constant&) { return "constant"; },
                        [](const target::ComplexExponential&) { return "complex_exponential"; },
                        [](const target::Sinusoid&) { return "sinusoid"; },
                        [](const target::Polynomial&) { return "polynomial"; },
                        [](const target::Gaussian&) { return "gaussian"; },
                    },
                    kind_);
}

AnalyticTarget AnalyticTarget::expanded_about(double t0) const {
  return AnalyticTarget(kind_, t0, gain_);
}

AnalyticTarget AnalyticTarget::scaled(Complex factor) const {
  return AnalyticTarget(kind_, expansion_point_, gain_ * factor);
}

Complex AnalyticTarget::operator()(Complex z) const {
  const Complex v = std::visit(
      Overloaded{
          [](const target::Constant& c) { return c.value; },
          [&](const target::ComplexExponential& e) { return std::exp(e.rate * z); },
          [&](const target::Sinusoid& s) { return std::sin(s.frequency * z); },
          [&](const target::Polynomial& p) {
            return horner(std::span<const Complex>(p.coefficients), z);
          },
          [&](const target::Gaussian& g) {
            const Complex u = z / g.width;
            return std::exp(-u * u);
          },
      },
      kind_);
  return gain_ * v;
}

Complex AnalyticTarget::operator()(double t) const {
  const Complex v = std::visit(
      Overloaded{
          [](const target::Constant& c) { return c.value; },
          [&](const target::ComplexExponential& e) { return std::exp(e.rate * t); },
          [&](const target::Sinusoid& s) { return Complex{std::sin(s.frequency * t), 0.0}; },
          [&](const target::Polynomial& p) {
            return horner(std::span<const Complex>(p.coefficients), t);
          },
          [&](const target::Gaussian& g) {
            const double u = t / g.width;
            return Complex{std::exp(-u * u), 0.0};
          },
      },
      kind_);
  return gain_ * v;
}

std::vector<Complex> AnalyticTarget::taylor_coefficients(std::size_t order) const {
  const double t0 = expansion_point_;
  std::vector<Complex> a(order + 1, Complex{});
  std::visit(
      Overloaded{
          [&](const target::Constant& c) { a[0] = c.value; },
          [&](const target::ComplexExponential& e) {
            a[0] = std::exp(e.rate * t0);
            for (std::size_t n = 1; n <= order; ++n) {
              a[n] = a[n - 1] * e.rate / static_cast<double>(n);
            }
          },
          [&](const target::Sinusoid& s) {
            // d^n/dt^n sin(w t) = w^n sin(w t + n pi / 2)
            const double x = s.frequency * t0;
            const double cycle[4] = {std::sin(x), std::cos(x), -std::sin(x), -std::cos(x)};
            double scale = 1.0;
            for (std::size_t n = 0; n <= order; ++n) {
              if (n > 0) scale *= s.frequency / static_cast<double>(n);
              a[n] = scale * cycle[n % 4];
            }
          },
          [&](const target::Polynomial& p) {
            const auto shifted = ComplexPolynomial(p.coefficients, 0.0).recentered(t0);
            const auto c = shifted.coefficients();
            for (std::size_t n = 0; n <= order && n < c.size(); ++n) a[n] = c[n];
          },
          [&](const target::Gaussian& g) {
            // exp(h(u)) with h(u) = -(2 t0 u + u^2) / w^2; n a_n = sum_k k h_k a_{n-k}.
            const double inv_w2 = 1.0 / (g.width * g.width);
            const double h1 = -2.0 * t0 * inv_w2;
            const double h2 = -inv_w2;
            a[0] = std::exp(-t0 * t0 * inv_w2);
            for (std::size_t n = 1; n <= order; ++n) {
              Complex acc = h1 * a[n - 1];
              if (n >= 2) acc += 2.0 * h2 * a[n - 2];
              a[n] = acc / static_cast<double>(n);
            }
          },
      },
      kind_);
  for (auto& c : a) c *= gain_;
  return a;
}

Complex AnalyticTarget::taylor_coefficient(std::size_t n) const {
  return taylor_coefficients(n)[n];
}

namespace {

double log_growth(const AnalyticTarget& s, double radius) {
  const double t0 = s.expansion_point();
  const double log_gain = std::abs(s.gain()) == 0.0 ? kNegInf : std::log(std::abs(s.gain()));
  const double log_m = std::visit(
      Overloaded{
          [](const target::Constant& c) {
            return std::abs(c.value) == 0.0 ? kNegInf : std::log(std::abs(c.value));
          },
          [&](const target::ComplexExponential& e) {
            return (e.rate * t0).real() + std::abs(e.rate) * radius;
          },
          [&](const target::Sinusoid& w) { return log_cosh(w.frequency * radius); },
          [&](const target::Polynomial& p) {
            const auto shifted = ComplexPolynomial(p.coefficients, 0.0).recentered(t0);
            return log_abs_poly(shifted.coefficients(), radius);
          },
          [&](const target::Gaussian& g) { return radius * radius / (g.width * g.width); },
      },
      s.kind());
  return log_gain + log_m;
}

}  // namespace

double AnalyticTarget::growth_bound(double radius) const {
  return std::exp(log_growth(*this, radius));
}

std::optional<std::size_t> AnalyticTarget::polynomial_degree() const {
  return std::visit(
      Overloaded{
          [](const target::Constant&) -> std::optional<std::size_t> { return 0; },
          [](const target::ComplexExponential& e) -> std::optional<std::size_t> {
            if (e.rate == Complex{}) return 0;
            return std::nullopt;
          },
          [](const target::Sinusoid& s) -> std::optional<std::size_t> {
            if (s.frequency == 0.0) return 0;
            return std::nullopt;
          },
          [](const target::Polynomial& p) -> std::optional<std::size_t> {
            return p.coefficients.size() - 1;
          },
          [](const target::Gaussian&) -> std::optional<std::size_t> { return std::nullopt; },
      },
      kind_);
}

bool AnalyticTarget::is_real_valued() const {
  if (gain_.imag() != 0.0) return false;
  return std::visit(
      Overloaded{
          [](const target::Constant& c) { return c.value.imag() == 0.0; },
          [](const target::ComplexExponential& e) { return e.rate.imag() == 0.0; },
          [](const target::Sinusoid&) { return true; },
          [](const target::Polynomial& p) {
            return std::all_of(p.coefficients.begin(), p.coefficients.end(),
                               [](Complex c) { return c.imag() == 0.0; });
          },
          [](const target::Gaussian&) { return true; },
      },
      kind_);
}

double AnalyticTarget::local_frequency() const {
  return std::visit(
      Overloaded{
          [](const target::Constant&) { return 0.0; },
          [](const target::ComplexExponential& e) { return std::abs(e.rate.imag()); },
          [](const target::Sinusoid& s) { return std::abs(s.frequency); },
          [](const target::Polynomial&) { return 0.0; },
          [](const target::Gaussian&) { return 0.0; },
      },
      kind_);
}

ComplexPolynomial taylor_product(const AnalyticTarget& target, Complex carrier_rate,
                                 long order) {
  if (order < 0) throw DomainError("taylor_product: order must be non-negative");
  const auto n_max = static_cast<std::size_t>(order);
  const double t0 = target.expansion_point();
  const std::vector<Complex> a = target.taylor_coefficients(n_max);

  std::vector<Complex> d(n_max + 1);
  d[0] = std::exp(-carrier_rate * t0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    d[n] = d[n - 1] * (-carrier_rate) / static_cast<double>(n);
  }

  std::vector<Complex> c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Complex acc{};
    for (std::size_t k = 0; k <= n; ++k) acc += a[k] * d[n - k];
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
      std::ostringstream msg;
      msg << "taylor_product: coefficient " << n << " is not finite";
      throw SynthesisError(msg.str());
    }
    c[n] = acc;
  }
  return ComplexPolynomial(std::move(c), t0);
}

double effective_rate(Complex carrier_rate) {
  const double rate = std::abs(carrier_rate);
  return rate > 0.0 ? rate : 1.0;
}

RemainderBound remainder_bound(const AnalyticTarget& target, Complex carrier_rate,
                               long order, double half_width, double radius) {
  if (order < 0) throw DomainError("remainder_bound: order must be non-negative");
  if (!(half_width >= 0.0)) throw DomainError("remainder_bound: half width must be >= 0");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("remainder_bound: radius must be positive and finite");
  }
  const auto n = static_cast<std::size_t>(order);
  RemainderBound out{n, radius, 0.0};
  if (half_width == 0.0) return out;

  const double lambda = effective_rate(carrier_rate);
  const double ratio = lambda * half_width / radius;
  if (!(ratio < 1.0)) {
    std::ostringstream msg;
    msg << "remainder_bound: inadmissible radius " << radius << " (must exceed "
        << lambda * half_width << ")";
    throw DomainError(msg.str());
  }
  if (carrier_rate == Complex{}) {
    if (auto deg = target.polynomial_degree(); deg && *deg <= n) return out;
  }

  const double t_radius = radius / lambda;
  const double t0 = target.expansion_point();
  const double log_m = log_growth(target, t_radius) - (carrier_rate * t0).real() +
                       std::abs(carrier_rate) * t_radius;
  if (log_m == kNegInf) return out;
  if (!std::isfinite(log_m) || log_m > std::log(std::numeric_limits<double>::max())) {
    throw DomainError("remainder_bound: growth bound is not finite");
  }

  const double log_bound =
      static_cast<double>(n + 1) * std::log(ratio) + log_m - std::log1p(-ratio);
  out.bound_value = std::exp(log_bound);
  return out;
}

RemainderBound optimized_remainder_bound(const AnalyticTarget& target,
                                         Complex carrier_rate, std::size_t order,
                                         double half_width, const OrderSearch& search) {
  const long n = static_cast<long>(order);
  if (half_width == 0.0) return remainder_bound(target, carrier_rate, n, 0.0, 1.0);
  const double base = effective_rate(carrier_rate) * half_width;
  const std::size_t points = std::max<std::size_t>(search.radius_grid_points, 2);
  const double span = search.ratio_ceiling / search.ratio_floor;
  RemainderBound best{order, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < points; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
    const double r = base * search.ratio_floor * std::pow(span, frac);
    try {
      const RemainderBound b = remainder_bound(target, carrier_rate, n, half_width, r);
      if (b.bound_value < best.bound_value) best = b;
    } catch (const DomainError&) {
      // Growth bound overflows at this radius; smaller radii remain usable.
    }
  }
  return best;
}

RemainderBound select_order(const AnalyticTarget& target, Complex carrier_rate,
                            double half_width, double epsilon1, const OrderSearch& search) {
  if (!(epsilon1 > 0.0)) throw DomainError("select_order: epsilon1 must be positive");
  RemainderBound best{0, 0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t n = 0; n <= search.max_order; ++n) {
    const RemainderBound b =
        optimized_remainder_bound(target, carrier_rate, n, half_width, search);
    if (b.bound_value < epsilon1) return b;
    if (b.bound_value < best.bound_value) best = b;
  }
  std::ostringstream msg;
  msg << "select_order: no order <= " << search.max_order << " reaches " << epsilon1
      << "; best bound " << best.bound_value << " at N=" << best.order;
  throw CapacityError(msg.str());
}

}  // namespace subosc
