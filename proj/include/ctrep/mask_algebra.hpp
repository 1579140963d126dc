#pragma once

// Finite-dimensional algebras whose basis is the set of subsets of
// {1, ..., m}, encoded as bitmasks (bit i-1 set <=> generator i present).
//
//   GrassmannElement  E^(m): v_i v_j = -v_j v_i, v_i^2 = 0
//   SquareFreePoly    K[z_1..z_m]/(z_1^2..z_m^2): commutative, z_i^2 = 0
//
// The two rings share all storage and arithmetic and differ only in the sign
// attached to a product of two disjoint basis monomials.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/rational.hpp"
#include "ctrep/ring.hpp"

namespace ctrep {

using Mask = std::uint32_t;

inline constexpr int kMaxGenerators = 16;

/// Sign rule of the exterior algebra: moving the word of B past the word of
/// A costs one transposition per pair (i in A, j in B) with i > j.
struct AnticommutingSign {
  static constexpr char kSymbol = 'v';
  static constexpr const char* kRingName = "grassmann";
  static int sign(Mask a, Mask b) {
    int swaps = 0;
    for (Mask rest = b; rest != 0; rest &= rest - 1) {
      int j = std::countr_zero(rest);
      swaps += std::popcount(a >> (j + 1));
    }
    return (swaps & 1) ? -1 : 1;
  }
};

struct CommutingSign {
  static constexpr char kSymbol = 'z';
  static constexpr const char* kRingName = "sqfree";
  static int sign(Mask, Mask) { return 1; }
};

/// All 2^m subsets of {1..m}, ascending by mask value.
inline std::vector<Mask> basis_enumerate(int m) {
  if (m < 1 || m > kMaxGenerators) throw Error("generator count out of range");
  std::vector<Mask> basis(std::size_t{1} << m);
  for (std::size_t i = 0; i < basis.size(); ++i) basis[i] = static_cast<Mask>(i);
  return basis;
}

template <class SignRule>
class MaskAlgebra {
 public:
  using Term = std::pair<Mask, Rational>;
  using Rule = SignRule;

  /// The zero element of the m-generated ring.
  explicit MaskAlgebra(int m) : m_(m) {
    if (m < 1 || m > kMaxGenerators) throw Error("generator count out of range");
  }

  static MaskAlgebra scalar(int m, const Rational& c) { return monomial(m, 0, c); }

  static MaskAlgebra monomial(int m, Mask mask, const Rational& c = Rational(1)) {
    MaskAlgebra x(m);
    x.check_mask(mask);
    if (!c.is_zero()) x.terms_.emplace_back(mask, c);
    return x;
  }

  /// Generator i, 1-based.
  static MaskAlgebra generator(int m, int i) {
    if (i < 1 || i > m) throw Error("generator index out of range");
    return monomial(m, Mask{1} << (i - 1));
  }

  /// Builds the canonical element from arbitrary (possibly repeated or zero)
  /// terms; repeated masks are summed.
  static MaskAlgebra from_terms(int m, std::vector<Term> terms) {
    MaskAlgebra x(m);
    for (const auto& t : terms) x.check_mask(t.first);
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!x.terms_.empty() && x.terms_.back().first == t.first) {
        x.terms_.back().second += t.second;
        if (x.terms_.back().second.is_zero()) x.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        x.terms_.push_back(std::move(t));
      }
    }
    return x;
  }

  int generators() const noexcept { return m_; }

  /// Canonical terms: ascending masks, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(Mask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Mask m) { return t.first < m; });
    if (it != terms_.end() && it->first == mask) return it->second;
    return Rational();
  }

  Rational constant_term() const { return coefficient(0); }

  /// Dense coordinates in the basis of basis_enumerate(m).
  std::vector<Rational> coordinates() const {
    std::vector<Rational> v(std::size_t{1} << m_);
    for (const auto& [mask, c] : terms_) v[mask] = c;
    return v;
  }

  /// The same element viewed in the ring with m' >= m generators.
  MaskAlgebra widen(int new_m) const {
    if (new_m < m_) throw Error("widen: target generator count is smaller");
    MaskAlgebra x(new_m);
    x.terms_ = terms_;
    return x;
  }

  friend MaskAlgebra operator+(const MaskAlgebra& a, const MaskAlgebra& b) {
    return merge(a, b, false);
  }
  friend MaskAlgebra operator-(const MaskAlgebra& a, const MaskAlgebra& b) {
    return merge(a, b, true);
  }
  friend MaskAlgebra operator-(const MaskAlgebra& a) {
    MaskAlgebra r(a.m_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& [mask, c] : a.terms_) r.terms_.emplace_back(mask, -c);
    return r;
  }

  friend MaskAlgebra operator*(const MaskAlgebra& a, const MaskAlgebra& b) {
    a.check_same(b);
    MaskAlgebra r(a.m_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.m_ <= kDenseLimit) {
      std::vector<Rational> acc(std::size_t{1} << a.m_);
      std::vector<char> touched(acc.size(), 0);
      for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
          if (ma & mb) continue;
          Mask u = ma | mb;
          Rational p = ca * cb;
          if (SignRule::sign(ma, mb) < 0) {
            acc[u] -= p;
          } else {
            acc[u] += p;
          }
          touched[u] = 1;
        }
      }
      for (std::size_t u = 0; u < acc.size(); ++u) {
        if (touched[u] && !acc[u].is_zero()) r.terms_.emplace_back(static_cast<Mask>(u), std::move(acc[u]));
      }
      return r;
    }
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        Rational p = ca * cb;
        raw.emplace_back(ma | mb, SignRule::sign(ma, mb) < 0 ? -p : p);
      }
    }
    return from_terms(a.m_, std::move(raw));
  }

  MaskAlgebra& operator+=(const MaskAlgebra& b) { return *this = *this + b; }
  MaskAlgebra& operator-=(const MaskAlgebra& b) { return *this = *this - b; }
  MaskAlgebra& operator*=(const MaskAlgebra& b) { return *this = *this * b; }

  friend bool operator==(const MaskAlgebra& a, const MaskAlgebra& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  friend MaskAlgebra zero_like(const MaskAlgebra& x) { return MaskAlgebra(x.m_); }
  friend MaskAlgebra one_like(const MaskAlgebra& x) { return scalar(x.m_, Rational(1)); }
  friend MaskAlgebra embed_scalar(const MaskAlgebra& x, const Rational& c) { return scalar(x.m_, c); }
  friend MaskAlgebra scale(const MaskAlgebra& x, const Rational& c) {
    MaskAlgebra r(x.m_);
    if (c.is_zero()) return r;
    r.terms_.reserve(x.terms_.size());
    for (const auto& [mask, v] : x.terms_) r.terms_.emplace_back(mask, v * c);
    return r;
  }
  friend bool is_zero(const MaskAlgebra& x) { return x.terms_.empty(); }
  friend bool is_scalar(const MaskAlgebra& x) {
    return x.terms_.empty() || (x.terms_.size() == 1 && x.terms_[0].first == 0);
  }
  friend Rational scalar_value(const MaskAlgebra& x) {
    if (!is_scalar(x)) throw Error("element is not a scalar");
    return x.constant_term();
  }

 private:
  static constexpr int kDenseLimit = 8;

  void check_mask(Mask mask) const {
    if (m_ < 32 && (mask >> m_) != 0) throw Error("generator index out of range");
  }

  void check_same(const MaskAlgebra& b) const {
    if (m_ != b.m_) {
      throw Error(std::is_same_v<SignRule, AnticommutingSign> ? "generator count mismatch"
                                                                : "variable count mismatch");
    }
  }

  static MaskAlgebra merge(const MaskAlgebra& a, const MaskAlgebra& b, bool subtract) {
    a.check_same(b);
    MaskAlgebra r(a.m_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
        ++ib;
      } else {
        Rational c = subtract ? ia->second - ib->second : ia->second + ib->second;
        if (!c.is_zero()) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  int m_;
  std::vector<Term> terms_;
};

using GrassmannElement = MaskAlgebra<AnticommutingSign>;
using SquareFreePoly = MaskAlgebra<CommutingSign>;

/// Even and odd parts of a Grassmann element.
struct GradedPair {
  GrassmannElement even;
  GrassmannElement odd;
};

inline GradedPair grade_split(const GrassmannElement& g) {
  std::vector<GrassmannElement::Term> even;
  std::vector<GrassmannElement::Term> odd;
  for (const auto& t : g.terms()) {
    (std::popcount(t.first) % 2 == 0 ? even : odd).push_back(t);
  }
  return {GrassmannElement::from_terms(g.generators(), std::move(even)),
          GrassmannElement::from_terms(g.generators(), std::move(odd))};
}

/// sigma(g0 + g1) = g0 - g1.
inline GrassmannElement grading_involution(const GrassmannElement& g) {
  std::vector<GrassmannElement::Term> terms = g.terms();
  for (auto& [mask, c] : terms) {
    if (std::popcount(mask) % 2 == 1) c = -c;
  }
  return GrassmannElement::from_terms(g.generators(), std::move(terms));
}

/// Coordinates over Q; used for rank-based injectivity checks.
template <class Rule>
std::vector<Rational> coordinates(const MaskAlgebra<Rule>& x) {
  return x.coordinates();
}
inline std::vector<Rational> coordinates(const Rational& x) { return {x}; }

}  // namespace ctrep
