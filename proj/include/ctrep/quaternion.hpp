#pragma once

#include "ctrep/matrix.hpp"
#include "ctrep/rational.hpp"

namespace ctrep {

/// a + b i + c j + d k with rational coordinates.
struct Quaternion {
  Rational a, b, c, d;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d, p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b, p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// The real 4x4 embedding of the quaternions, restricted to Q:
/// rows (a,b,c,d), (-b,a,-d,c), (-c,d,a,-b), (-d,-c,b,a).
inline Matrix<Rational> quaternion_embed(const Quaternion& q) {
  const auto& [a, b, c, d] = q;
  return Matrix<Rational>::from_rows({{a, b, c, d}, {-b, a, -d, c}, {-c, d, a, -b}, {-d, -c, b, a}});
}

}  // namespace ctrep
