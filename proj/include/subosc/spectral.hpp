#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subosc/envelope.hpp"
#include "subosc/piecewise.hpp"
#include "subosc/polynomial.hpp"
#include "subosc/synthesis.hpp"

namespace subosc {

struct Discontinuity {
  double omega = 0.0;
  double jump = 0.0;  // |F(omega+) - F(omega-)|
};

/// Exact spectrum of p(t) e(t) exp(i band_shift t) on the envelope knots.
struct PiecewiseSpectrum {
  double band_shift = 0.0;
  UniformPiecewise<Complex> pieces;
  std::vector<Discontinuity> discontinuities;

  Complex operator()(double omega) const { return pieces(omega); }
  double lower() const { return pieces.lower(); }
  double upper() const { return pieces.upper(); }
};

/// Sum of the per-carrier spectra of a BandpassFunction.
struct CompositeSpectrum {
  std::vector<PiecewiseSpectrum> parts;

  Complex operator()(double omega) const;
};

using Band = std::pair<double, double>;

// Relative threshold (of the in-band peak) above which a knot jump is recorded.
inline constexpr double kJumpThreshold = 1e-9;

// F(omega) = sum_n b_n i^n E^(n)(omega - carrier), b_n the monomial
// coefficients of p about t = 0. Requires deg p <= m - 1.
PiecewiseSpectrum analytic_spectrum(const ComplexPolynomial& poly, const Envelope& env,
                                    double carrier);
CompositeSpectrum analytic_spectrum(const BandpassFunction& f);

// Largest |F| over the support, sampled densely on every piece and at knots.
double in_band_peak(const PiecewiseSpectrum& spectrum);

// Exact (1 / 2 pi) integral of |F|^2, i.e. the time-domain energy by Parseval.
double spectral_energy(const PiecewiseSpectrum& spectrum);
double spectral_energy(const CompositeSpectrum& spectrum);

struct TransformResult {
  std::vector<Complex> values;
  double step = 0.0;
  std::size_t samples = 0;
  // max |F_h - F_{h/2}| / max |F_h| when the halving check ran.
  std::optional<double> halving_discrepancy;
};

// Composite midpoint estimate of the integral of f(t) exp(-i omega t) over
// [-T, T] at every omega. Truncation error is O(1/T) because p e decays only
// like 1/|t| when deg p = m - 1.
TransformResult numerical_transform(const BandpassFunction& f, std::span<const double> omegas,
                                    double half_window, double samples_per_unit,
                                    bool check_halving = false);

struct SupportReport {
  bool inside = true;
  std::vector<Band> offending;  // knot intervals with nonzero pieces outside the claim
  std::string summary;
};

// Exact coefficient-level check that every piece outside the claimed bands
// is identically zero.
SupportReport band_support_check(const PiecewiseSpectrum& spectrum,
                                 std::span<const Band> claimed);
SupportReport band_support_check(const CompositeSpectrum& spectrum,
                                 std::span<const Band> claimed);

}  // namespace subosc
