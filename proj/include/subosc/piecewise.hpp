#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subosc/polynomial.hpp"

namespace subosc {

/// Piecewise polynomial on uniformly spaced knots, zero outside them.
///
/// Piece j lives on [knot(j), knot(j+1)] and is stored in the normalized
/// local variable s = (omega - knot(j)) / width in [0, 1]. Knots are
/// origin + j * width + shift; translating only touches `shift`, so a shift
/// moves every knot by exactly that amount.
template <typename T>
class UniformPiecewise {
 public:
  using Piece = std::vector<T>;

  UniformPiecewise() = default;
  UniformPiecewise(double origin, double width, std::vector<Piece> pieces, double shift = 0.0)
      : origin_(origin), width_(width), shift_(shift), pieces_(std::move(pieces)) {
    if (!(width_ > 0.0)) throw std::invalid_argument("UniformPiecewise: width must be positive");
  }

  std::size_t piece_count() const { return pieces_.size(); }
  std::size_t knot_count() const { return pieces_.size() + 1; }
  double width() const { return width_; }
  double origin() const { return origin_; }
  double shift() const { return shift_; }
  double knot(std::size_t k) const { return origin_ + static_cast<double>(k) * width_ + shift_; }
  double lower() const { return knot(0); }
  double upper() const { return knot(pieces_.size()); }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& piece(std::size_t j) const { return pieces_[j]; }

  std::vector<double> knots() const {
    std::vector<double> k(knot_count());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = knot(i);
    return k;
  }

  T operator()(double omega) const {
    if (pieces_.empty()) return T{};
    const double x = (omega - knot(0)) / width_;
    const auto count = static_cast<double>(pieces_.size());
    if (!(x >= 0.0) || x > count) return T{};
    std::size_t j = static_cast<std::size_t>(std::floor(x));
    if (j >= pieces_.size()) j = pieces_.size() - 1;
    return eval_piece(j, x - static_cast<double>(j));
  }

  T eval_piece(std::size_t j, double s) const {
    return horner(std::span<const T>(pieces_[j]), s);
  }

  // Limit at knot k from the left (piece k-1 at s = 1), zero before the support.
  T left_limit(std::size_t k) const { return k == 0 ? T{} : eval_piece(k - 1, 1.0); }
  // Limit at knot k from the right (piece k at s = 0), zero after the support.
  T right_limit(std::size_t k) const {
    return k >= pieces_.size() ? T{} : pieces_[k].front();
  }

  // d^order/domega^order, piece by piece.
  UniformPiecewise derivative(std::size_t order = 1) const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    const double scale = std::pow(width_, -static_cast<double>(order));
    for (const Piece& p : pieces_) {
      Piece d(p.size() > order ? p.size() - order : 1, T{});
      for (std::size_t k = order; k < p.size(); ++k) {
        double falling = 1.0;
        for (std::size_t i = 0; i < order; ++i) falling *= static_cast<double>(k - i);
        d[k - order] = p[k] * (falling * scale);
      }
      out.push_back(std::move(d));
    }
    return UniformPiecewise(origin_, width_, std::move(out), shift_);
  }

  UniformPiecewise shifted(double by) const {
    return UniformPiecewise(origin_, width_, pieces_, shift_ + by);
  }

  // Exact integral over the whole support.
  T integral() const {
    T total{};
    for (const Piece& p : pieces_) {
      T acc{};
      for (std::size_t k = 0; k < p.size(); ++k) acc += p[k] / static_cast<double>(k + 1);
      total += acc;
    }
    return total * width_;
  }

  // Coefficients of piece j in u = omega - knot(j).
  Piece local_coefficients(std::size_t j) const {
    Piece u = pieces_[j];
    double scale = 1.0;
    for (auto& c : u) {
      c = c * scale;
      scale /= width_;
    }
    return u;
  }

 private:
  double origin_ = 0.0;
  double width_ = 1.0;
  double shift_ = 0.0;
  std::vector<Piece> pieces_;
};

}  // namespace subosc
