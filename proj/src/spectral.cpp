#include "subosc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "subosc/errors.hpp"

namespace subosc {
namespace {

constexpr Complex kI{0.0, 1.0};

bool contained(double lo, double hi, std::span<const Band> claimed) {
  for (const auto& [a, b] : claimed) {
    const double tol_a = 1e-12 * std::max(1.0, std::abs(a));
    const double tol_b = 1e-12 * std::max(1.0, std::abs(b));
    if (lo >= a - tol_a && hi <= b + tol_b) return true;
  }
  return false;
}

void check_pieces(const PiecewiseSpectrum& spectrum, std::span<const Band> claimed,
                  SupportReport& report) {
  const auto& pw = spectrum.pieces;
  for (std::size_t j = 0; j < pw.piece_count(); ++j) {
    const auto& piece = pw.piece(j);
    const bool zero =
        std::all_of(piece.begin(), piece.end(), [](Complex c) { return c == Complex{}; });
    if (zero) continue;
    if (!contained(pw.knot(j), pw.knot(j + 1), claimed)) {
      report.inside = false;
      report.offending.emplace_back(pw.knot(j), pw.knot(j + 1));
    }
  }
}

}  // namespace

Complex CompositeSpectrum::operator()(double omega) const {
  Complex sum{};
  for (const auto& p : parts) sum += p(omega);
  return sum;
}

PiecewiseSpectrum analytic_spectrum(const ComplexPolynomial& poly, const Envelope& env,
                                    double carrier) {
  const std::size_t m = static_cast<std::size_t>(env.power());
  if (poly.degree() + 1 > m) {
    std::ostringstream msg;
    msg << "analytic_spectrum: polynomial degree " << poly.degree()
        << " needs an envelope power of at least " << poly.degree() + 1 << " (have " << m
        << ")";
    throw DomainError(msg.str());
  }
  const BSplineSpectrum base = envelope_spectrum(env);
  const double width = base.spline.width();
  const ComplexPolynomial mono = poly.recentered(0.0);
  const auto b = mono.coefficients();

  // weights[n] = b_n i^n / width^n
  std::vector<Complex> weights(b.size());
  Complex i_pow{1.0, 0.0};
  double inv_w_pow = 1.0;
  for (std::size_t n = 0; n < b.size(); ++n) {
    weights[n] = b[n] * i_pow * inv_w_pow;
    i_pow *= kI;
    inv_w_pow /= width;
  }

  std::vector<std::vector<Complex>> pieces;
  pieces.reserve(base.spline.piece_count());
  for (const auto& e : base.spline.pieces()) {
    std::vector<Complex> f(e.size(), Complex{});
    for (std::size_t k = 0; k < e.size(); ++k) {
      // (k+n)! / k! e[k+n], accumulated over n
      double falling = 1.0;
      for (std::size_t n = 0; n < weights.size() && k + n < e.size(); ++n) {
        if (n > 0) falling *= static_cast<double>(k + n);
        f[k] += weights[n] * (falling * e[k + n]);
      }
    }
    pieces.push_back(std::move(f));
  }

  PiecewiseSpectrum out;
  out.band_shift = carrier;
  out.pieces = UniformPiecewise<Complex>(base.spline.origin(), width, std::move(pieces), carrier);

  const double threshold = kJumpThreshold * in_band_peak(out);
  for (std::size_t k = 0; k < out.pieces.knot_count(); ++k) {
    const double jump = std::abs(out.pieces.right_limit(k) - out.pieces.left_limit(k));
    if (jump > threshold) out.discontinuities.push_back({out.pieces.knot(k), jump});
  }
  return out;
}

CompositeSpectrum analytic_spectrum(const BandpassFunction& f) {
  CompositeSpectrum out;
  for (const CarrierPart* p : f.parts()) {
    out.parts.push_back(analytic_spectrum(p->poly, p->envelope, p->carrier));
  }
  return out;
}

double in_band_peak(const PiecewiseSpectrum& spectrum) {
  constexpr int kSamples = 32;
  double peak = 0.0;
  const auto& pw = spectrum.pieces;
  for (std::size_t j = 0; j < pw.piece_count(); ++j) {
    for (int i = 0; i <= kSamples; ++i) {
      peak = std::max(peak, std::abs(pw.eval_piece(j, static_cast<double>(i) / kSamples)));
    }
  }
  return peak;
}

double spectral_energy(const PiecewiseSpectrum& spectrum) {
  const auto& pw = spectrum.pieces;
  double total = 0.0;
  for (const auto& a : pw.pieces()) {
    // integral over s in [0,1] of |sum_k a_k s^k|^2
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      for (std::size_t l = 0; l < a.size(); ++l) {
        acc += (a[k] * std::conj(a[l])).real() / static_cast<double>(k + l + 1);
      }
    }
    total += acc;
  }
  return total * pw.width() / (2.0 * std::numbers::pi);
}

double spectral_energy(const CompositeSpectrum& spectrum) {
  double total = 0.0;
  for (const auto& p : spectrum.parts) total += spectral_energy(p);
  return total;
}

namespace {

std::vector<Complex> midpoint_transform(const BandpassFunction& f,
                                        std::span<const double> omegas, double half_window,
                                        std::size_t count) {
  const double h = 2.0 * half_window / static_cast<double>(count);
  std::vector<double> times(count);
  std::vector<Complex> samples(count);
  for (std::size_t j = 0; j < count; ++j) {
    times[j] = -half_window + (static_cast<double>(j) + 0.5) * h;
    samples[j] = f(times[j]);
    if (!std::isfinite(samples[j].real()) || !std::isfinite(samples[j].imag())) {
      std::ostringstream msg;
      msg << "numerical_transform: non-finite sample at t = " << times[j];
      throw NumericError(msg.str());
    }
  }

  std::vector<Complex> values(omegas.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Complex acc{};
      for (std::size_t j = 0; j < count; ++j) {
        acc += samples[j] * std::polar(1.0, -omegas[i] * times[j]);
      }
      values[i] = acc * h;
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, omegas.size() ? omegas.size() : 1);
  if (threads <= 1) {
    work(0, omegas.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (omegas.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < omegas.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(omegas.size(), begin + chunk));
    }
  }
  return values;
}

}  // namespace

TransformResult numerical_transform(const BandpassFunction& f, std::span<const double> omegas,
                                    double half_window, double samples_per_unit,
                                    bool check_halving) {
  if (!(half_window > 0.0)) throw DomainError("numerical_transform: window must be positive");
  const double nyquist_rate = f.max_frequency() / std::numbers::pi;
  if (!(samples_per_unit >= 4.0 * nyquist_rate)) {
    std::ostringstream msg;
    msg << "numerical_transform: undersampled (" << samples_per_unit
        << " samples per unit time, need >= " << 4.0 * nyquist_rate << ")";
    throw DomainError(msg.str());
  }
  const auto count =
      static_cast<std::size_t>(std::ceil(2.0 * half_window * samples_per_unit));
  TransformResult out;
  out.samples = count;
  out.step = 2.0 * half_window / static_cast<double>(count);
  out.values = midpoint_transform(f, omegas, half_window, count);
  if (check_halving) {
    const auto fine = midpoint_transform(f, omegas, half_window, 2 * count);
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      diff = std::max(diff, std::abs(fine[i] - out.values[i]));
      scale = std::max(scale, std::abs(out.values[i]));
    }
    out.halving_discrepancy = scale > 0.0 ? diff / scale : diff;
  }
  return out;
}

namespace {

void summarize(SupportReport& report) {
  std::ostringstream text;
  if (report.inside) {
    text << "support inside claimed band(s)";
  } else {
    text << "nonzero pieces outside claimed band(s):";
    for (const auto& [a, b] : report.offending) text << " [" << a << ", " << b << "]";
  }
  report.summary = text.str();
}

}  // namespace

SupportReport band_support_check(const PiecewiseSpectrum& spectrum,
                                 std::span<const Band> claimed) {
  SupportReport report;
  check_pieces(spectrum, claimed, report);
  summarize(report);
  return report;
}

SupportReport band_support_check(const CompositeSpectrum& spectrum,
                                 std::span<const Band> claimed) {
  SupportReport report;
  for (const auto& part : spectrum.parts) check_pieces(part, claimed, report);
  summarize(report);
  return report;
}

}  // namespace subosc
