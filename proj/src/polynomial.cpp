#include "subosc/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "subosc/errors.hpp"

namespace subosc {

ComplexPolynomial::ComplexPolynomial() : coefficients_{Complex{1.0, 0.0}} {}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coefficients,
                                     double expansion_point)
    : coefficients_(std::move(coefficients)), expansion_point_(expansion_point) {
  if (coefficients_.empty()) {
    throw DomainError("polynomial needs at least one coefficient");
  }
}

Complex ComplexPolynomial::operator()(double t) const {
  return horner(std::span<const Complex>(coefficients_), t - expansion_point_);
}

Complex ComplexPolynomial::operator()(Complex z) const {
  return horner(std::span<const Complex>(coefficients_), z - expansion_point_);
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coefficients_.size() == 1) return ComplexPolynomial({Complex{}}, expansion_point_);
  std::vector<Complex> d(coefficients_.size() - 1);
  for (std::size_t n = 1; n < coefficients_.size(); ++n) {
    d[n - 1] = coefficients_[n] * static_cast<double>(n);
  }
  return ComplexPolynomial(std::move(d), expansion_point_);
}

ComplexPolynomial ComplexPolynomial::conjugate() const {
  std::vector<Complex> c(coefficients_.size());
  std::transform(coefficients_.begin(), coefficients_.end(), c.begin(),
                 [](Complex z) { return std::conj(z); });
  return ComplexPolynomial(std::move(c), expansion_point_);
}

ComplexPolynomial ComplexPolynomial::recentered(double new_expansion_point) const {
  // p(t) = q(u + h) with u = t - new_center, h = new_center - old_center.
  const double h = new_expansion_point - expansion_point_;
  std::vector<Complex> c = coefficients_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = n - 1; j-- > k;) c[j] += h * c[j + 1];
  }
  return ComplexPolynomial(std::move(c), new_expansion_point);
}

bool ComplexPolynomial::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](Complex z) { return z == Complex{}; });
}

}  // namespace subosc
