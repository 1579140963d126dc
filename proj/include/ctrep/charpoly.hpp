#pragma once

#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/rational.hpp"

namespace ctrep {

/// det(zI - B) = c_0 z^N + c_1 z^{N-1} + ... + c_N with c_0 = 1.
struct CharPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Power traces tr(B^k), k = 1..N, computed incrementally. Each must be a
/// scalar; otherwise NonConstantTrace(k) is thrown.
template <RingElement R>
std::vector<Rational> scalar_power_traces(const Matrix<R>& b) {
  const std::size_t n = b.size();
  std::vector<Rational> traces;
  traces.reserve(n);
  Matrix<R> p = b;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) p = p * b;
    R tr = trace(p);
    if (!is_scalar(tr)) throw NonConstantTrace(static_cast<int>(k));
    traces.push_back(scalar_value(tr));
  }
  return traces;
}

/// Newton recursion c_k = -(1/k) (c_{k-1} p_1 + ... + c_0 p_k), p_i = tr(B^i).
inline CharPoly newton_from_traces(const std::vector<Rational>& traces) {
  CharPoly cp;
  cp.coeffs.reserve(traces.size() + 1);
  cp.coeffs.emplace_back(1);
  for (std::size_t k = 1; k <= traces.size(); ++k) {
    Rational s;
    for (std::size_t i = 1; i <= k; ++i) s += cp.coeffs[k - i] * traces[i - 1];
    cp.coeffs.push_back(-s / Rational(static_cast<std::int64_t>(k)));
  }
  return cp;
}

template <RingElement R>
CharPoly newton_charpoly(const Matrix<R>& b) {
  return newton_from_traces(scalar_power_traces(b));
}

}  // namespace ctrep
