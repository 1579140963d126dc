#pragma once

// Seeded randomness. The engine is std::mt19937_64 (fully specified by the
// C++ standard); integers in [lo, hi] are drawn by rejection sampling on the
// raw 64-bit outputs, so streams are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/polynomial.hpp"
#include "ctrep/rational.hpp"

namespace ctrep {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Every one of the 2^m monomials gets an independent coefficient in
/// [-bound, bound].
template <class Rule>
MaskAlgebra<Rule> random_mask_element(int m, std::int64_t bound, Rng& rng) {
  std::vector<typename MaskAlgebra<Rule>::Term> terms;
  const Mask count = Mask{1} << m;
  for (Mask mask = 0; mask < count; ++mask) terms.emplace_back(mask, Rational(rng.uniform(-bound, bound)));
  return MaskAlgebra<Rule>::from_terms(m, std::move(terms));
}

inline GrassmannElement random_grassmann(int m, std::int64_t bound, Rng& rng) {
  return random_mask_element<AnticommutingSign>(m, bound, rng);
}

inline SquareFreePoly random_sqfree(int m, std::int64_t bound, Rng& rng) {
  return random_mask_element<CommutingSign>(m, bound, rng);
}

/// Every monomial of total degree <= `degree` gets an independent
/// coefficient in [-bound, bound]; monomials are visited in lexicographic
/// exponent order.
inline CappedPolynomial random_capped_polynomial(int variables, int degree, int degree_cap, std::int64_t bound,
                                                 Rng& rng) {
  CappedPolynomial p(variables, degree_cap);
  CappedPolynomial::Exponents e(static_cast<std::size_t>(variables), 0);
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == e.size()) {
      p.add_term(e, Rational(rng.uniform(-bound, bound)));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  visit(visit, 0, degree);
  return p;
}

template <class Gen>
auto random_matrix(std::size_t n, Gen&& gen) {
  using R = decltype(gen());
  Matrix<R> a(n, gen());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != 0 || j != 0) a(i, j) = gen();
    }
  }
  return a;
}

}  // namespace ctrep
