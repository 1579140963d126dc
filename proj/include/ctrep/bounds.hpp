#pragma once

#include <cstdint>

#include "ctrep/error.hpp"

namespace ctrep {

struct EmbeddingBounds {
  int m = 0;
  /// Smallest t with m <= 2t - 1: lower bound for any embedding of E^(m)
  /// into t x t matrices over a commutative algebra.
  std::int64_t min_t_commutative = 0;
  /// Smallest t with 3 * 2^{m-2} <= floor(t^2 / 4) + 1: lower bound for any
  /// embedding into t x t matrices over K.
  std::int64_t min_t_over_K = 0;
  /// Size of eps^(m) and of the left regular representation.
  std::int64_t ct_size = 0;
  std::int64_t regular_size = 0;
};

inline EmbeddingBounds embedding_bounds(int m) {
  if (m < 2) throw Error("embedding bounds are stated for m >= 2");
  if (m > 40) throw Error("generator count too large for embedding bounds");
  EmbeddingBounds b;
  b.m = m;
  std::int64_t t = 1;
  while (m > 2 * t - 1) ++t;
  b.min_t_commutative = t;
  const std::int64_t needed = 3 * (std::int64_t{1} << (m - 2));
  t = 1;
  while (needed > (t * t) / 4 + 1) ++t;
  b.min_t_over_K = t;
  b.ct_size = std::int64_t{1} << (m - 1);
  b.regular_size = std::int64_t{1} << m;
  return b;
}

}  // namespace ctrep
