#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "subosc/errors.hpp"
#include "subosc/polynomial.hpp"

using subosc::Complex;
using subosc::ComplexPolynomial;

TEST_CASE("default polynomial is the constant one") {
  const ComplexPolynomial p;
  CHECK(p.degree() == 0);
  for (double t : {-1e6, -3.5, 0.0, 2.0, 1e9}) CHECK(p(t) == Complex{1.0, 0.0});
}

TEST_CASE("empty coefficient list is rejected") {
  CHECK_THROWS_AS(ComplexPolynomial(std::vector<Complex>{}), subosc::DomainError);
}

TEST_CASE("value at the expansion point is exactly c0") {
  const ComplexPolynomial p({{0.3, -1.7}, {2.0, 1.0}, {-4.0, 0.5}}, 2.25);
  CHECK(p(2.25) == Complex{0.3, -1.7});
}

TEST_CASE("horner agrees with naive power sums") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> c(1 + trial % 9);
    for (auto& x : c) x = {u(rng), u(rng)};
    const double t0 = u(rng);
    const ComplexPolynomial p(c, t0);
    const double t = 2.0 * u(rng);
    Complex naive{};
    for (std::size_t n = 0; n < c.size(); ++n) naive += c[n] * std::pow(t - t0, static_cast<double>(n));
    CHECK(std::abs(p(t) - naive) <= 1e-13 * (1.0 + std::abs(naive)));
  }
}

TEST_CASE("derivative, conjugate and recentering") {
  const ComplexPolynomial p({{1.0, 2.0}, {3.0, -1.0}, {0.0, 0.5}, {-2.0, 0.0}}, 0.0);
  const auto d = p.derivative();
  CHECK(d.degree() == 2);
  CHECK(d.coefficient(0) == Complex{3.0, -1.0});
  CHECK(d.coefficient(1) == Complex{0.0, 1.0});
  CHECK(d.coefficient(2) == Complex{-6.0, 0.0});
  CHECK(ComplexPolynomial().derivative().is_zero());

  const auto c = p.conjugate();
  for (double t : {-1.3, 0.2, 4.0}) CHECK(std::abs(c(t) - std::conj(p(t))) < 1e-14);

  const auto q = p.recentered(1.5);
  CHECK(q.expansion_point() == 1.5);
  for (double t : {-2.0, 0.0, 0.7, 3.1}) CHECK(std::abs(q(t) - p(t)) < 1e-12 * (1.0 + std::abs(p(t))));
  CHECK(std::abs(q.coefficient(0) - p(1.5)) < 1e-13);
}

TEST_CASE("complex argument evaluation") {
  const ComplexPolynomial p({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});  // t + t^2
  const Complex z{0.0, 1.0};
  CHECK(std::abs(p(z) - (z + z * z)) < 1e-15);
}
