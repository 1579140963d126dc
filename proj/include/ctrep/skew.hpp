#pragma once

// Truncated skew polynomial rings R[w, sigma]/(w^t), where w r = sigma(r) w,
// and their embeddings into matrices over R[z]/(z^t).

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/polynomial.hpp"
#include "ctrep/random.hpp"
#include "ctrep/representations.hpp"
#include "ctrep/truncated_poly.hpp"

namespace ctrep {

/// A named ring endomorphism with a declared order d (sigma^d = id).
template <RingElement R>
class Endomorphism {
 public:
  Endomorphism(std::string name, std::function<R(const R&)> apply, int declared_order)
      : name_(std::move(name)), apply_(std::move(apply)), order_(declared_order) {
    if (declared_order < 1) throw Error("endomorphism order must be positive");
  }

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }

  R operator()(const R& r) const { return apply_(r); }

  /// sigma^k(r), reduced modulo the declared order.
  R power(const R& r, int k) const {
    R x = r;
    for (int i = 0; i < k % order_; ++i) x = apply_(x);
    return x;
  }

  /// Throws unless sigma fixes 1, is additive and multiplicative, and has the
  /// declared order on every sample (and every pair of samples).
  void validate(std::span<const R> samples) const {
    auto fail = [&](const std::string& what) { return Error("endomorphism '" + name_ + "' " + what); };
    if (samples.empty()) return;
    if (!(apply_(one_like(samples[0])) == one_like(samples[0]))) throw fail("does not fix 1");
    for (const R& s : samples) {
      R x = s;
      for (int i = 0; i < order_; ++i) x = apply_(x);
      if (!(x == s)) throw fail("does not have the declared order " + std::to_string(order_));
    }
    for (const R& a : samples) {
      const R sa = apply_(a);
      for (const R& b : samples) {
        const R sb = apply_(b);
        if (!(apply_(a + b) == sa + sb)) throw fail("is not additive");
        if (!(apply_(a * b) == sa * sb)) throw fail("is not multiplicative");
      }
    }
  }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.name_ == b.name_ && a.order_ == b.order_;
  }

 private:
  std::string name_;
  std::function<R(const R&)> apply_;
  int order_;
};

template <RingElement R>
using EndomorphismPtr = std::shared_ptr<const Endomorphism<R>>;

inline constexpr const char* kGradingInvolutionName = "grading";

/// The grading involution of E^(m), validated on the full monomial basis for
/// m <= 6 (complete, by linearity) and on random samples beyond.
inline EndomorphismPtr<GrassmannElement> grading_involution_descriptor(int m) {
  static std::mutex mutex;
  static std::map<int, EndomorphismPtr<GrassmannElement>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  auto sigma = std::make_shared<const Endomorphism<GrassmannElement>>(
      kGradingInvolutionName, [](const GrassmannElement& g) { return grading_involution(g); }, 2);
  std::vector<GrassmannElement> samples;
  if (m <= 6) {
    for (Mask mask : basis_enumerate(m)) samples.push_back(GrassmannElement::monomial(m, mask));
  } else {
    Rng rng(0x5eed);
    for (int i = 0; i < 8; ++i) samples.push_back(random_grassmann(m, 3, rng));
  }
  sigma->validate(samples);
  cache.emplace(m, sigma);
  return sigma;
}

/// a -> b -> c -> a on Q[a, b, c] (order 3).
inline EndomorphismPtr<CappedPolynomial> cyclic_permutation_descriptor(int degree_cap) {
  auto sigma = std::make_shared<const Endomorphism<CappedPolynomial>>(
      "cyclic", [](const CappedPolynomial& p) { return p.permute_variables({1, 2, 0}); }, 3);
  std::vector<CappedPolynomial> samples;
  for (int i = 0; i < 3; ++i) samples.push_back(CappedPolynomial::variable(3, degree_cap, i));
  samples.push_back(samples[0] * samples[1] + scale(samples[2], Rational(-2)) + one_like(samples[0]));
  sigma->validate(samples);
  return sigma;
}

/// r_0 + r_1 w + ... + r_{t-1} w^{t-1} modulo (w^t).
template <RingElement R>
class SkewPoly {
 public:
  SkewPoly(std::vector<R> coeffs, EndomorphismPtr<R> sigma) : coeffs_(std::move(coeffs)), sigma_(std::move(sigma)) {
    if (coeffs_.empty()) throw Error("truncation order must be at least 1");
    if (!sigma_) throw Error("skew polynomial needs an endomorphism");
  }

  static SkewPoly constant(const R& r, int order, EndomorphismPtr<R> sigma) {
    if (order < 1) throw Error("truncation order must be at least 1");
    std::vector<R> c(static_cast<std::size_t>(order), zero_like(r));
    c[0] = r;
    return SkewPoly(std::move(c), std::move(sigma));
  }

  /// r * w^k (zero when k >= order).
  static SkewPoly monomial(const R& r, int k, int order, EndomorphismPtr<R> sigma) {
    SkewPoly p = constant(zero_like(r), order, std::move(sigma));
    if (k < order) p.coeffs_[static_cast<std::size_t>(k)] = r;
    return p;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }
  const Endomorphism<R>& sigma() const noexcept { return *sigma_; }
  const EndomorphismPtr<R>& sigma_ptr() const noexcept { return sigma_; }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    a.check_same(b);
    std::vector<R> c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return SkewPoly(std::move(c), a.sigma_);
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    a.check_same(b);
    std::vector<R> c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return SkewPoly(std::move(c), a.sigma_);
  }

  /// c_k = sum_{i+j=k} a_i sigma^i(b_j), k < t.
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    a.check_same(b);
    const std::size_t t = a.coeffs_.size();
    std::vector<R> c(t, zero_like(a.coeffs_[0]));
    for (std::size_t j = 0; j < t; ++j) {
      if (is_zero(b.coeffs_[j])) continue;
      R twisted = b.coeffs_[j];  // sigma^i(b_j), advanced with i
      for (std::size_t i = 0; i + j < t; ++i) {
        if (i > 0) twisted = (*a.sigma_)(twisted);
        if (is_zero(a.coeffs_[i])) continue;
        c[i + j] = c[i + j] + a.coeffs_[i] * twisted;
      }
    }
    return SkewPoly(std::move(c), a.sigma_);
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.coeffs_ == b.coeffs_ && *a.sigma_ == *b.sigma_;
  }

 private:
  void check_same(const SkewPoly& b) const {
    if (coeffs_.size() != b.coeffs_.size() || !(*sigma_ == *b.sigma_)) throw Error("skew descriptor mismatch");
  }

  std::vector<R> coeffs_;
  EndomorphismPtr<R> sigma_;
};

/// r + s w  |->  [[r, s z], [sigma(s) z, sigma(r)]] over R[z]/(z^2).
template <RingElement R>
Matrix<TruncatedPoly<R>> mu_embed(const SkewPoly<R>& f) {
  if (f.order() != 2) throw Error("mu_embed requires truncation order 2");
  if (f.sigma().order() > 2) throw Error("involution required");
  using P = TruncatedPoly<R>;
  const auto& sigma = f.sigma();
  const R& r = f[0];
  const R& s = f[1];
  return Matrix<P>::from_rows({{P::constant(r, 2), P::monomial(s, 1, 2)},
                               {P::monomial(sigma(s), 1, 2), P::constant(sigma(r), 2)}});
}

/// t x t matrix over R[z]/(z^t) whose (i, j) entry (1-based) is
/// sigma^{i-1}(r_k) z^k with k = (j - i) mod t.
template <RingElement R>
Matrix<TruncatedPoly<R>> mu_embed_general(const SkewPoly<R>& f) {
  const int t = f.order();
  const auto& sigma = f.sigma();
  if (t % sigma.order() != 0) throw Error("endomorphism order must divide the truncation order");
  using P = TruncatedPoly<R>;
  Matrix<P> a(static_cast<std::size_t>(t), P::constant(zero_like(f[0]), t));
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      const int k = ((j - i) % t + t) % t;
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = P::monomial(sigma.power(f[k], i - 1), k, t);
    }
  }
  return a;
}

/// eps* = eps-bar_2 o mu for a base representation `base` of R: each entry
/// r + s z of mu(f) becomes eps(r) + eps(s) z, and the 2x2 block matrix is
/// flattened to 2t x 2t over Omega[z]/(z^2).
template <class Apply, RingElement R>
auto induced_image(Apply&& base, const SkewPoly<R>& f) {
  using Omega = typename std::invoke_result_t<Apply&, const R&>::value_type;
  using P = TruncatedPoly<Omega>;
  const Matrix<TruncatedPoly<R>> m = mu_embed(f);
  auto lift_entry = [&](const TruncatedPoly<R>& p) {
    const Matrix<Omega> lo = base(p[0]);
    const Matrix<Omega> hi = base(p[1]);
    Matrix<P> out(lo.size(), P::constant(lo.entry_zero(), 2));
    for (std::size_t i = 0; i < lo.size(); ++i) {
      for (std::size_t j = 0; j < lo.size(); ++j) out(i, j) = P({lo(i, j), hi(i, j)});
    }
    return out;
  };
  return flatten(map_entries(m, lift_entry));
}

/// Induced CT-representation of R[w, sigma]/(w^2) for R = E^(m); the base
/// representation must pass the exhaustive CT check.
template <RingElement Omega>
Matrix<TruncatedPoly<Omega>> epsilon_star(const GrassmannRepresentation<Omega>& base,
                                          const SkewPoly<GrassmannElement>& f) {
  if (f.order() != 2) throw Error("epsilon_star requires truncation order 2");
  if (f[0].generators() != base.generators()) throw Error("generator count mismatch");
  if (!is_ct(base, 0, 0).ct) throw Error("non-CT base representation");
  return induced_image([&base](const GrassmannElement& g) { return base(g); }, f);
}

/// E^(m)[w, sigma]/(w^2) -> E^(m+1): g + h w  |->  g + h v_{m+1}.
inline GrassmannElement grassmann_skew_iso(const SkewPoly<GrassmannElement>& f) {
  if (f.order() != 2) throw Error("grassmann_skew_iso requires truncation order 2");
  if (f.sigma().name() != kGradingInvolutionName || f.sigma().order() != 2) {
    throw Error("grassmann_skew_iso requires the grading involution");
  }
  const int m = f[0].generators();
  if (m + 1 > kMaxGenerators) throw Error("generator count out of range");
  return f[0].widen(m + 1) + f[1].widen(m + 1) * GrassmannElement::generator(m + 1, m + 1);
}

/// Inverse of grassmann_skew_iso.
inline SkewPoly<GrassmannElement> grassmann_skew_iso_inverse(const GrassmannElement& x) {
  const int m = x.generators() - 1;
  if (m < 1) throw Error("inverse isomorphism needs at least two generators");
  const Mask top = Mask{1} << m;
  std::vector<GrassmannElement::Term> g;
  std::vector<GrassmannElement::Term> h;
  for (const auto& [mask, c] : x.terms()) {
    // v_A v_{m+1} is already in ascending order, so no sign appears.
    if (mask & top) {
      h.emplace_back(mask & ~top, c);
    } else {
      g.emplace_back(mask, c);
    }
  }
  return SkewPoly<GrassmannElement>(
      {GrassmannElement::from_terms(m, std::move(g)), GrassmannElement::from_terms(m, std::move(h))},
      grading_involution_descriptor(m));
}

}  // namespace ctrep
