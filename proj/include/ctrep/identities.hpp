#pragma once

// Cayley-Hamilton identities with scalar coefficients for matrices over
// E^(m), and standard-polynomial identities.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctrep/charpoly.hpp"
#include "ctrep/error.hpp"
#include "ctrep/linalg.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/random.hpp"
#include "ctrep/representations.hpp"

namespace ctrep {

// ---------------------------------------------------------------------------
// Cayley-Hamilton

struct CHCertificate {
  int m = 0;
  int n = 0;
  int degree = 0;
  CharPoly coeffs;
  bool residual_is_zero = false;
};

inline constexpr int kMaxCHGenerators = 6;
inline constexpr int kMaxCHDegree = 64;

/// A^N + c_1 A^{N-1} + ... + c_N I = 0 with N = 2^{m-1} n and c_i in Q.
/// The coefficients come from the characteristic polynomial of eps_n(A);
/// the residual is then evaluated directly in M_n(E^(m)).
///
/// The 1x1 representation of E^(1) is not constant-trace, so for m = 1 the
/// entries are widened into E^(2) and eps^(2) is used, giving N = 2n.
inline CHCertificate cayley_hamilton(int m, const Matrix<GrassmannElement>& a) {
  if (m < 1 || m > kMaxCHGenerators) throw Error("cayley_hamilton supports 1 <= m <= 6");
  const int n = static_cast<int>(a.size());
  const int rep_m = std::max(m, 2);
  const int degree = (1 << (rep_m - 1)) * n;
  if (degree > kMaxCHDegree) throw Error("cayley_hamilton: 2^(m-1) * n exceeds 64");
  const auto rep = ct_representation(rep_m);
  CHCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.degree = degree;
  if (rep_m == m) {
    cert.coeffs = newton_charpoly(extend_to_matrices(*rep, a));
  } else {
    const auto wide = map_entries(a, [&](const GrassmannElement& g) { return g.widen(rep_m); });
    cert.coeffs = newton_charpoly(extend_to_matrices(*rep, wide));
  }
  cert.residual_is_zero = is_zero(evaluate_monic(cert.coeffs.coeffs, a));
  return cert;
}

// ---------------------------------------------------------------------------
// Standard polynomial

inline constexpr int kMaxStandardDegree = 9;

template <RingElement R>
struct StandardPolyResult {
  int k = 0;
  R value;
  std::uint64_t permutation_count = 0;
};

/// S_k(x_1..x_k) = sum over pi in Sym(k) of sgn(pi) x_{pi(1)} ... x_{pi(k)}.
///
/// Permutations are enumerated in lexicographic order by an iterative
/// depth-first walk; the left-folded product of each prefix is kept on a
/// stack so sibling permutations share their common prefix, and the sign is
/// updated incrementally from the number of unused smaller indices.
template <RingElement R>
StandardPolyResult<R> standard_poly(std::span<const R> args) {
  const int k = static_cast<int>(args.size());
  if (k > kMaxStandardDegree) throw Error("degree too large");
  if (k == 0) throw Error("standard polynomial needs at least one argument");

  R value = zero_like(args[0]);
  std::vector<R> prefix(static_cast<std::size_t>(k), value);
  std::vector<int> chosen(static_cast<std::size_t>(k), -1);
  std::vector<int> parity(static_cast<std::size_t>(k) + 1, 0);
  std::uint32_t used = 0;
  std::uint64_t count = 0;
  int depth = 0;
  while (depth >= 0) {
    auto d = static_cast<std::size_t>(depth);
    if (chosen[d] >= 0) used &= ~(std::uint32_t{1} << chosen[d]);
    int x = chosen[d] + 1;
    while (x < k && ((used >> x) & 1U)) ++x;
    if (x == k) {
      chosen[d] = -1;
      --depth;
      continue;
    }
    chosen[d] = x;
    used |= std::uint32_t{1} << x;
    const std::uint32_t smaller_unused = ~used & ((std::uint32_t{1} << x) - 1);
    parity[d + 1] = parity[d] ^ (std::popcount(smaller_unused) & 1);
    prefix[d] = depth == 0 ? args[static_cast<std::size_t>(x)] : prefix[d - 1] * args[static_cast<std::size_t>(x)];
    if (depth + 1 == k) {
      value = parity[d + 1] ? value - prefix[d] : value + prefix[d];
      ++count;
    } else {
      ++depth;
      chosen[d + 1] = -1;
    }
  }
  return {k, std::move(value), count};
}

template <RingElement R>
StandardPolyResult<R> standard_poly(const std::vector<R>& args) {
  return standard_poly(std::span<const R>(args));
}

template <RingElement R>
struct StandardVerdict {
  bool holds = true;
  int k = 0;
  int tuples_checked = 0;
  std::uint64_t seed = 0;
  /// First tuple with S_k != 0, and that value.
  std::optional<std::vector<R>> witness;
  std::optional<R> value;
};

/// Evaluates S_k on `trials` tuples drawn in order from `sample` (seeded by
/// `seed`) and reports the first nonzero value.
template <class Sampler>
auto verify_standard_identity(int k, int trials, std::uint64_t seed, Sampler&& sample)
    -> StandardVerdict<std::invoke_result_t<Sampler&, Rng&>> {
  using R = std::invoke_result_t<Sampler&, Rng&>;
  if (k > kMaxStandardDegree) throw Error("degree too large");
  StandardVerdict<R> verdict;
  verdict.k = k;
  verdict.seed = seed;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<R> tuple;
    tuple.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) tuple.push_back(sample(rng));
    ++verdict.tuples_checked;
    auto result = standard_poly(std::span<const R>(tuple));
    if (!is_zero(result.value)) {
      verdict.holds = false;
      verdict.witness = std::move(tuple);
      verdict.value = std::move(result.value);
      return verdict;
    }
  }
  return verdict;
}

/// Which ring a standard identity is checked on: M_n(E^(m)) or
/// M_n(K[z_1..z_m]/(z_i^2)).
struct AmbientRing {
  enum class Kind { grassmann, sqfree };
  Kind kind = Kind::grassmann;
  int m = 1;
  std::size_t n = 1;
};

inline auto grassmann_matrix_sampler(int m, std::size_t n, std::int64_t bound) {
  return [=](Rng& rng) { return random_matrix(n, [&] { return random_grassmann(m, bound, rng); }); };
}

inline auto sqfree_matrix_sampler(int m, std::size_t n, std::int64_t bound) {
  return [=](Rng& rng) { return random_matrix(n, [&] { return random_sqfree(m, bound, rng); }); };
}

/// Exhaustive check of S_k on M_1(E^(m)) over all k-tuples of basis
/// monomials; S_k is multilinear, so vanishing here proves the identity.
inline constexpr int kMaxExhaustiveBits = 20;

inline StandardVerdict<GrassmannElement> verify_standard_identity_on_basis(int m, int k) {
  if (k > kMaxStandardDegree) throw Error("degree too large");
  if (m * k > kMaxExhaustiveBits) throw Error("exhaustive basis check too large");
  StandardVerdict<GrassmannElement> verdict;
  verdict.k = k;
  const std::uint64_t basis = std::uint64_t{1} << m;
  const std::uint64_t total = std::uint64_t{1} << (m * k);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<GrassmannElement> tuple;
    tuple.reserve(static_cast<std::size_t>(k));
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i, c /= basis) tuple.push_back(GrassmannElement::monomial(m, static_cast<Mask>(c % basis)));
    ++verdict.tuples_checked;
    auto result = standard_poly(std::span<const GrassmannElement>(tuple));
    if (!result.value.is_zero()) {
      verdict.holds = false;
      verdict.witness = std::move(tuple);
      verdict.value = std::move(result.value);
      return verdict;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// No scalar 2x2 Cayley-Hamilton identity for v1 + v2v3 in E^(3)

struct ImpossibilityRow {
  Mask monomial = 0;
  Rational c1_coeff;  ///< coefficient of the unknown c1
  Rational c2_coeff;  ///< coefficient of the unknown c2
  Rational constant;  ///< the row reads c1_coeff*c1 + c2_coeff*c2 + constant = 0
};

struct ImpossibilityRecord {
  GrassmannElement element{3};
  GrassmannElement square{3};
  std::vector<ImpossibilityRow> rows;
  bool unsolvable = false;
  std::optional<ImpossibilityRow> witness;
};

/// Writes A^2 + c1 A + c2 = 0 for A = v1 + v2v3 coefficientwise in the
/// basis of E^(3) as a linear system in (c1, c2) and decides solvability.
inline ImpossibilityRecord remark35_impossibility() {
  ImpossibilityRecord rec;
  rec.element = GrassmannElement::generator(3, 1) + GrassmannElement::generator(3, 2) * GrassmannElement::generator(3, 3);
  rec.square = rec.element * rec.element;
  RationalRows augmented;
  for (Mask mask : basis_enumerate(3)) {
    ImpossibilityRow row;
    row.monomial = mask;
    row.c1_coeff = rec.element.coefficient(mask);
    row.c2_coeff = mask == 0 ? Rational(1) : Rational(0);
    row.constant = rec.square.coefficient(mask);
    if (row.c1_coeff.is_zero() && row.c2_coeff.is_zero() && row.constant.is_zero()) continue;
    augmented.push_back({row.c1_coeff, row.c2_coeff, -row.constant});
    rec.rows.push_back(row);
  }
  auto bad = inconsistent_row(augmented);
  rec.unsolvable = bad.has_value();
  if (bad && *bad < rec.rows.size()) rec.witness = rec.rows[*bad];
  return rec;
}

}  // namespace ctrep
