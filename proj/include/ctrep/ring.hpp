#pragma once

// The ring interface shared by every coefficient type in the library.
//
// Element types carry their own ring context (generator count, truncation
// order, matrix dimension), so the neutral elements are obtained from an
// existing element rather than from a global descriptor. The hooks are free
// functions found by argument-dependent lookup:
//
//   zero_like(x), one_like(x)   neutral elements of x's ring
//   embed_scalar(x, c)          image of c in Q under K -> ring(x)
//   scale(x, c)                 scalar action of Q
//   is_scalar(x)                x lies in the image of K
//   scalar_value(x)             the c with x = embed_scalar(x, c)
//   is_zero(x)

#include <concepts>
#include <string>

#include "ctrep/rational.hpp"

namespace ctrep {

template <class R>
concept RingElement = requires(const R& a, const R& b, const Rational& c) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<R>;
  { one_like(a) } -> std::convertible_to<R>;
  { embed_scalar(a, c) } -> std::convertible_to<R>;
  { scale(a, c) } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { is_scalar(a) } -> std::convertible_to<bool>;
  { scalar_value(a) } -> std::convertible_to<Rational>;
};

/// x^k by square-and-multiply; k = 0 gives one_like(x).
template <RingElement R>
R power(const R& x, unsigned k) {
  R result = one_like(x);
  R base = x;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

}  // namespace ctrep
