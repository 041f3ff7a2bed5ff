#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace subosc {

using Complex = std::complex<double>;

/// Polynomial p(t) = sum_n c_n (t - t0)^n with complex coefficients.
///
/// Evaluation uses Horner's scheme in the shifted variable (t - t0), so the
/// value at the expansion point is exactly c_0.
class ComplexPolynomial {
 public:
  ComplexPolynomial();  // the constant 1
  explicit ComplexPolynomial(std::vector<Complex> coefficients,
                             double expansion_point = 0.0);

  std::size_t degree() const { return coefficients_.size() - 1; }
  double expansion_point() const { return expansion_point_; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  Complex coefficient(std::size_t n) const {
    return n < coefficients_.size() ? coefficients_[n] : Complex{};
  }

  Complex operator()(double t) const;
  Complex operator()(Complex z) const;

  ComplexPolynomial derivative() const;
  ComplexPolynomial conjugate() const;

  // Same polynomial re-expanded about a new centre (Taylor shift by repeated
  // synthetic division).
  ComplexPolynomial recentered(double new_expansion_point) const;

  bool is_zero() const;

  friend bool operator==(const ComplexPolynomial&,
                         const ComplexPolynomial&) = default;

 private:
  std::vector<Complex> coefficients_;
  double expansion_point_ = 0.0;
};

// Nested evaluation of sum_k coeffs[k] x^k.
template <typename Coeff, typename X>
auto horner(std::span<const Coeff> coeffs, X x) {
  using R = decltype(Coeff{} * x);
  R acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace subosc
