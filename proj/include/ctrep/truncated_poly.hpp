#pragma once

// R[z]/(z^t) over an arbitrary coefficient ring R, plus the relabeling
// isomorphism (K[z_1..z_m]/(z_i^2))[z]/(z^2) ~= K[z_1..z_{m+1}]/(z_i^2)
// that lets iterated adjunctions stay inside SquareFreePoly.

#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/ring.hpp"

namespace ctrep {

template <RingElement R>
class TruncatedPoly {
 public:
  /// Slot i holds the coefficient of z^i; the truncation order is the slot count.
  explicit TruncatedPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("truncation order must be at least 1");
  }

  static TruncatedPoly constant(const R& r, int order) {
    if (order < 1) throw Error("truncation order must be at least 1");
    std::vector<R> c(static_cast<std::size_t>(order), zero_like(r));
    c[0] = r;
    return TruncatedPoly(std::move(c));
  }

  /// r * z^k (zero when k >= order).
  static TruncatedPoly monomial(const R& r, int k, int order) {
    TruncatedPoly p = constant(zero_like(r), order);
    if (k < order) p.coeffs_[static_cast<std::size_t>(k)] = r;
    return p;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }

  friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
    a.check_same(b);
    std::vector<R> c;
    c.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return TruncatedPoly(std::move(c));
  }
  friend TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) {
    a.check_same(b);
    std::vector<R> c;
    c.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return TruncatedPoly(std::move(c));
  }
  friend TruncatedPoly operator-(const TruncatedPoly& a) {
    std::vector<R> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(-x);
    return TruncatedPoly(std::move(c));
  }

  /// Cauchy product with every term of degree >= order dropped. Coefficients
  /// need not commute; the left factor's coefficient stays on the left.
  friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    a.check_same(b);
    const std::size_t t = a.coeffs_.size();
    std::vector<R> c(t, zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i < t; ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < t; ++j) {
        if (is_zero(b.coeffs_[j])) continue;
        c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return TruncatedPoly(std::move(c));
  }

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend TruncatedPoly zero_like(const TruncatedPoly& x) { return constant(zero_like(x.coeffs_[0]), x.order()); }
  friend TruncatedPoly one_like(const TruncatedPoly& x) { return constant(one_like(x.coeffs_[0]), x.order()); }
  friend TruncatedPoly embed_scalar(const TruncatedPoly& x, const Rational& c) {
    return constant(embed_scalar(x.coeffs_[0], c), x.order());
  }
  friend TruncatedPoly scale(const TruncatedPoly& x, const Rational& c) {
    std::vector<R> out;
    out.reserve(x.coeffs_.size());
    for (const auto& r : x.coeffs_) out.push_back(scale(r, c));
    return TruncatedPoly(std::move(out));
  }
  friend bool is_zero(const TruncatedPoly& x) {
    for (const auto& r : x.coeffs_) {
      if (!is_zero(r)) return false;
    }
    return true;
  }
  /// Scalar: only degree 0 present, and that coefficient is itself scalar.
  friend bool is_scalar(const TruncatedPoly& x) {
    for (std::size_t i = 1; i < x.coeffs_.size(); ++i) {
      if (!is_zero(x.coeffs_[i])) return false;
    }
    return is_scalar(x.coeffs_[0]);
  }
  friend Rational scalar_value(const TruncatedPoly& x) {
    if (!is_scalar(x)) throw Error("element is not a scalar");
    return scalar_value(x.coeffs_[0]);
  }

 private:
  void check_same(const TruncatedPoly& b) const {
    if (coeffs_.size() != b.coeffs_.size()) throw Error("truncation order mismatch");
  }

  std::vector<R> coeffs_;
};

/// r0 + r1*z in (K[z_1..z_m]/(z_i^2))[z]/(z^2)  |->  r0 + r1*z_{m+1}.
inline SquareFreePoly adjoin_flatten(const TruncatedPoly<SquareFreePoly>& p) {
  if (p.order() != 2) throw Error("flattening requires truncation order 2");
  const int m = p[0].generators();
  if (p[1].generators() != m) throw Error("variable count mismatch");
  const Mask top = Mask{1} << m;
  std::vector<SquareFreePoly::Term> terms = p[0].terms();
  for (const auto& [mask, c] : p[1].terms()) terms.emplace_back(mask | top, c);
  return SquareFreePoly::from_terms(m + 1, std::move(terms));
}

/// Inverse of adjoin_flatten: splits off the last variable as z.
inline TruncatedPoly<SquareFreePoly> adjoin_unflatten(const SquareFreePoly& x) {
  const int m = x.generators() - 1;
  if (m < 1) throw Error("unflattening requires at least two variables");
  const Mask top = Mask{1} << m;
  std::vector<SquareFreePoly::Term> low;
  std::vector<SquareFreePoly::Term> high;
  for (const auto& [mask, c] : x.terms()) {
    if (mask & top) {
      high.emplace_back(mask & ~top, c);
    } else {
      low.emplace_back(mask, c);
    }
  }
  return TruncatedPoly<SquareFreePoly>(
      {SquareFreePoly::from_terms(m, std::move(low)), SquareFreePoly::from_terms(m, std::move(high))});
}

}  // namespace ctrep
