#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "subosc/envelope.hpp"
#include "subosc/errors.hpp"

using namespace subosc;
using std::numbers::pi;

namespace {

// (1 / 2 pi) * integral of E(omega) exp(i omega t), composite Gauss-Legendre
// over every knot interval, subdivided so each panel spans at most one radian
// of phase.
std::complex<double> inverse_transform(const BSplineSpectrum& spec, double t) {
  std::vector<double> x, w;
  oracle::gauss_legendre(16, x, w);
  const auto knots = spec.knots();
  std::complex<double> acc{};
  for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
    const double a = knots[j], b = knots[j + 1];
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) * std::abs(t))) + 1;
    const double h = (b - a) / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = a + h * static_cast<double>(p);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double omega = lo + 0.5 * h * (x[i] + 1.0);
        // Evaluate the piece directly so the panel never straddles a knot.
        const double s = (omega - a) / (b - a);
        acc += 0.5 * h * w[i] * spec.spline.eval_piece(j, s) * std::polar(1.0, omega * t);
      }
    }
  }
  return acc / (2.0 * pi);
}

}  // namespace

TEST_CASE("envelope values") {
  const Envelope env(20, 4.0);
  CHECK(env(0.0) == 1.0);
  CHECK(env(80.0) == 0.0);
  const double x = 1.0 / 80.0;
  const double log_domain = std::exp(20.0 * std::log(std::sin(pi * x) / (pi * x)));
  CHECK(std::abs(env(1.0) - log_domain) <= 1e-12 * log_domain);
}

TEST_CASE("sinc near its removable singularity") {
  CHECK(sinc(0.0) == 1.0);
  for (double x : {1e-5, -3e-5, 9.9e-5, 1.01e-4}) {
    const double y = pi * x;
    CHECK(std::abs(sinc(x) - std::sin(y) / y) <= 2e-16);
  }
  for (int k = -5; k <= 5; ++k) {
    if (k != 0) CHECK(sin_pi(static_cast<double>(k)) == 0.0);
  }
}

TEST_CASE("envelope invariants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2000.0, 2000.0);
  for (int m : {1, 2, 7, 20}) {
    for (double delta : {1.0, 4.0}) {
      const Envelope env(m, delta);
      for (int i = 0; i < 500; ++i) {
        const double t = u(rng);
        const double e = env(t);
        CHECK(std::abs(e) <= 1.0);
        CHECK(env(-t) == e);
        if (std::abs(t) > 1.0) {
          const double decay = std::pow(m * delta / (pi * std::abs(t)), m);
          CHECK(std::abs(e) <= decay * (1.0 + 1e-12));
        }
      }
    }
  }
  CHECK_THROWS_AS(Envelope(0, 1.0), DomainError);
  CHECK_THROWS_AS(Envelope(3, 0.0), DomainError);
  CHECK_THROWS_AS(Envelope(3, 1.0, -1.0), DomainError);
}

TEST_CASE("single sinc has a rectangular spectrum") {
  const auto spec = envelope_spectrum(Envelope(1, 4.0));
  REQUIRE(spec.spline.piece_count() == 1);
  CHECK(spec.spline.piece(0).size() == 1);
  CHECK(spec.spline.piece(0)[0] == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(spec.spline.lower() == doctest::Approx(-pi / 4.0).epsilon(1e-15));
  CHECK(spec.spline.upper() == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(spec(0.0) == doctest::Approx(4.0));
  CHECK(spec(1.0) == 0.0);
}

TEST_CASE("squared sinc has a triangular spectrum") {
  const auto spec = envelope_spectrum(Envelope(2, 1.0));
  REQUIRE(spec.spline.piece_count() == 2);
  const auto knots = spec.knots();
  CHECK(knots[0] == doctest::Approx(-pi));
  CHECK(std::abs(knots[1]) < 1e-15);
  CHECK(knots[2] == doctest::Approx(pi));
  for (const auto& piece : spec.spline.pieces()) CHECK(piece.size() == 2);
  // rect(height 2 on [-pi/2, pi/2]) * itself / (2 pi): peak 4 pi / (2 pi) = 2.
  CHECK(spec(0.0) == doctest::Approx(2.0).epsilon(1e-14));
  for (double omega : {-2.5, -1.0, 0.3, 2.0}) {
    CHECK(spec(omega) == doctest::Approx(2.0 * (1.0 - std::abs(omega) / pi)).epsilon(1e-14));
  }

  const auto slope = spectrum_derivative(spec, 1);
  CHECK(slope.piece(0).size() == 1);
  CHECK(slope(-1.0) == doctest::Approx(2.0 / pi));
  CHECK(slope(1.0) == doctest::Approx(-2.0 / pi));
}

TEST_CASE("order-20 spectrum matches direct numerical self-convolution") {
  const auto spec = envelope_spectrum(Envelope(20, 4.0));
  const double half = pi / 80.0;
  const auto fine = oracle::self_convolve_rect(20, half, 80.0, 1638);
  const auto coarse = oracle::self_convolve_rect(20, half, 80.0, 819);
  const std::size_t centre = (fine.values.size() - 1) / 2;
  const double reference = (4.0 * fine.values[centre] - coarse.values[centre / 2]) / 3.0;
  CHECK(std::abs(spec(0.0) - reference) <= 1e-6 * reference);
}

TEST_CASE("derivatives of the spectrum") {
  const auto spec = envelope_spectrum(Envelope(20, 4.0));

  SUBCASE("order zero is the identity") {
    const auto d0 = spectrum_derivative(spec, 0);
    CHECK(d0.pieces() == spec.spline.pieces());
    CHECK(d0.knots() == spec.knots());
  }

  SUBCASE("first derivative against a Richardson central difference") {
    const auto d1 = spectrum_derivative(spec, 1);
    std::mt19937_64 rng(11);
    const double inner = 0.9 * spec.spline.upper();
    std::uniform_real_distribution<double> u(-inner, inner);
    const double h = 1e-3 * spec.spline.width();
    for (int i = 0; i < 100; ++i) {
      const double omega = u(rng);
      auto central = [&](double step) { return (spec(omega + step) - spec(omega - step)) / (2.0 * step); };
      const double fd = (4.0 * central(h) - central(2.0 * h)) / 3.0;
      INFO("omega " << omega);
      CHECK(std::abs(d1(omega) - fd) <= 1e-6 * std::abs(fd));
    }
  }

  SUBCASE("orders at or above the power are rejected") {
    CHECK_THROWS_AS(spectrum_derivative(spec, 20), DomainError);
    CHECK_THROWS_AS(spectrum_derivative(spec, -1), DomainError);
    CHECK_NOTHROW(spectrum_derivative(spec, 19));
    CHECK(spectrum_derivative(spec, 19).piece(3).size() == 1);
  }
}

TEST_CASE("transform pair with the envelope") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-200.0, 200.0);
  for (int m : {2, 5, 20}) {
    const Envelope env(m, 1.0 + (m % 3));
    const auto spec = envelope_spectrum(env);
    for (int i = 0; i < 20; ++i) {
      const double t = u(rng);
      const auto back = inverse_transform(spec, t);
      INFO("m " << m << " t " << t);
      CHECK(std::abs(back.real() - env(t)) <= 1e-8);
      CHECK(std::abs(back.imag()) <= 1e-8);
    }
  }
}

TEST_CASE("spectrum integrates to 2 pi") {
  for (int m : {1, 2, 3, 8, 20, 40}) {
    for (double delta : {1.0, 4.0, 13.5}) {
      const auto spec = envelope_spectrum(Envelope(m, delta));
      CHECK(std::abs(spec.spline.integral() - 2.0 * pi) <= 1e-10 * 2.0 * pi);
    }
  }
}

TEST_CASE("smoothness at the knots") {
  for (int m : {3, 6, 20}) {
    const auto spec = envelope_spectrum(Envelope(m, 4.0));
    for (int k = 0; k <= m - 1; ++k) {
      const auto d = spectrum_derivative(spec, k);
      double scale = 0.0;
      for (std::size_t j = 0; j < d.knot_count(); ++j) {
        scale = std::max({scale, std::abs(d.left_limit(j)), std::abs(d.right_limit(j))});
      }
      for (std::size_t j = 1; j + 1 < d.knot_count(); ++j) {
        const double jump = std::abs(d.right_limit(j) - d.left_limit(j));
        INFO("m " << m << " derivative " << k << " knot " << j);
        if (k <= m - 2) {
          CHECK(jump <= 1e-9 * scale);
        } else {
          CHECK(jump > 1e-6 * scale);
        }
      }
    }
  }
}

TEST_CASE("spectrum is even and nonnegative") {
  for (int m : {1, 2, 5, 20}) {
    const auto spec = envelope_spectrum(Envelope(m, 4.0));
    const double peak = spec(0.0);
    const double edge = 1.05 * spec.spline.upper();
    for (int i = 0; i < 10000; ++i) {
      const double omega = -edge + 2.0 * edge * i / 9999.0;
      CHECK(spec(omega) >= 0.0);
      CHECK(std::abs(spec(omega) - spec(-omega)) <= 1e-13 * peak);
    }
  }
}

TEST_CASE("support and knot layout follow the dilation and time scale") {
  const Envelope env(5, 2.0, 0.5);
  const auto spec = envelope_spectrum(env);
  CHECK(env.half_band() == doctest::Approx(0.5 * pi / 2.0));
  CHECK(spec.spline.lower() == doctest::Approx(-env.half_band()));
  CHECK(spec.spline.upper() == doctest::Approx(env.half_band()));
  CHECK(spec.spline.width() == doctest::Approx(2.0 * pi * 0.5 / 10.0));
  CHECK(std::abs(spec.spline.integral() - 2.0 * pi) < 1e-12);
}
