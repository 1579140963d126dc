#pragma once

// Matrix representations of the Grassmann algebra E^(m).
//
// A representation is fixed by the images of the generators v_1..v_m; the
// image of a basis monomial v_{i_1}...v_{i_k} (i_1 < ... < i_k) is the
// ordered product of generator images, and general elements extend
// linearly. The constant-trace family eps^(m) is built from the explicit
// 2x2 representation of E^(2) by repeated doubling with an adjoined square-
// zero variable.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctrep/error.hpp"
#include "ctrep/linalg.hpp"
#include "ctrep/mask_algebra.hpp"
#include "ctrep/matrix.hpp"
#include "ctrep/random.hpp"
#include "ctrep/truncated_poly.hpp"

namespace ctrep {

template <RingElement Omega>
class GrassmannRepresentation {
 public:
  using target_type = Omega;

  GrassmannRepresentation(std::string name, std::vector<Matrix<Omega>> generator_images, bool ct_claimed)
      : name_(std::move(name)), gens_(std::move(generator_images)), ct_claimed_(ct_claimed) {
    if (gens_.empty() || static_cast<int>(gens_.size()) > kMaxGenerators) {
      throw Error("representation needs between 1 and 16 generator images");
    }
    const std::size_t t = gens_[0].size();
    for (const auto& g : gens_) {
      if (g.size() != t) throw Error("generator images must share one size");
    }
    const std::size_t basis = std::size_t{1} << gens_.size();
    if (basis * t * t <= kEagerCacheEntries) {
      cache_.reserve(basis);
      cache_.push_back(Matrix<Omega>::identity(t, gens_[0].entry_zero()));
      for (std::size_t mask = 1; mask < basis; ++mask) {
        const int top = std::bit_width(mask) - 1;
        cache_.push_back(cache_[mask & ~(std::size_t{1} << top)] * gens_[static_cast<std::size_t>(top)]);
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  int generators() const noexcept { return static_cast<int>(gens_.size()); }
  std::size_t size() const noexcept { return gens_[0].size(); }
  bool ct_claimed() const noexcept { return ct_claimed_; }

  /// Image of v_i, 1-based.
  const Matrix<Omega>& generator_image(int i) const {
    if (i < 1 || i > generators()) throw Error("generator index out of range");
    return gens_[static_cast<std::size_t>(i - 1)];
  }

  Matrix<Omega> basis_image(Mask mask) const {
    if ((mask >> generators()) != 0) throw Error("generator index out of range");
    if (!cache_.empty()) return cache_[mask];
    Matrix<Omega> p = Matrix<Omega>::identity(size(), gens_[0].entry_zero());
    for (Mask rest = mask; rest != 0; rest &= rest - 1) p = p * gens_[static_cast<std::size_t>(std::countr_zero(rest))];
    return p;
  }

  Matrix<Omega> operator()(const GrassmannElement& g) const {
    if (g.generators() != generators()) throw Error("generator count mismatch");
    Matrix<Omega> r = Matrix<Omega>::zero(size(), gens_[0].entry_zero());
    for (const auto& [mask, c] : g.terms()) r = r + scale(basis_image(mask), c);
    return r;
  }

 private:
  static constexpr std::size_t kEagerCacheEntries = std::size_t{1} << 20;

  std::string name_;
  std::vector<Matrix<Omega>> gens_;
  bool ct_claimed_;
  std::vector<Matrix<Omega>> cache_;
};

using CTRepresentation = GrassmannRepresentation<SquareFreePoly>;

namespace detail {

inline SquareFreePoly zvar(int m, int i) { return SquareFreePoly::generator(m, i); }
inline SquareFreePoly zconst(int m, std::int64_t c) { return SquareFreePoly::scalar(m, Rational(c)); }

inline Matrix<SquareFreePoly> sqfree_matrix2(SquareFreePoly a, SquareFreePoly b, SquareFreePoly c,
                                              SquareFreePoly d) {
  return Matrix<SquareFreePoly>::from_rows({{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
}

}  // namespace detail

/// The explicit 2x2 CT-representation of E^(2):
///   c0 + c1 v1 + c2 v2 + c3 v1v2  |->  [[c0 + c1 z1,   c2 z2 + c3 z1z2],
///                                       [c2 z2 - c3 z1z2, c0 - c1 z1]]
inline Matrix<SquareFreePoly> epsilon2(const GrassmannElement& g) {
  if (g.generators() != 2) throw Error("epsilon2 requires an element of E^(2)");
  const Rational c0 = g.coefficient(0b00);
  const Rational c1 = g.coefficient(0b01);
  const Rational c2 = g.coefficient(0b10);
  const Rational c3 = g.coefficient(0b11);
  auto poly = [](std::initializer_list<std::pair<Mask, Rational>> terms) {
    return SquareFreePoly::from_terms(2, std::vector<SquareFreePoly::Term>(terms));
  };
  return detail::sqfree_matrix2(poly({{0b00, c0}, {0b01, c1}}), poly({{0b10, c2}, {0b11, c3}}),
                                poly({{0b10, c2}, {0b11, -c3}}), poly({{0b00, c0}, {0b01, -c1}}));
}

inline CTRepresentation epsilon2_representation() {
  using detail::zconst;
  using detail::zvar;
  return CTRepresentation("eps2",
                          {detail::sqfree_matrix2(zvar(2, 1), zconst(2, 0), zconst(2, 0), -zvar(2, 1)),
                           detail::sqfree_matrix2(zconst(2, 0), zvar(2, 2), zvar(2, 2), zconst(2, 0))},
                          true);
}

/// E^(1) ~= K[z]/(z^2) as a 1x1 representation: v1 |-> [z1]. Injective but
/// not constant-trace (the trace of v1 is z1); it seeds the lift to m = 2.
inline CTRepresentation epsilon1_representation() {
  return CTRepresentation("eps1", {Matrix<SquareFreePoly>(1, detail::zvar(1, 1))}, false);
}

/// Doubling step over an arbitrary commutative target Omega:
///   v_i     |-> [[eps(v_i), 0], [0, -eps(v_i)]]   (i <= m)
///   v_{m+1} |-> [[0, z I_t], [z I_t, 0]]           z^2 = 0
/// with entries in Omega[z]/(z^2).
template <RingElement Omega>
GrassmannRepresentation<TruncatedPoly<Omega>> adjoin_lift(const GrassmannRepresentation<Omega>& rep) {
  using Poly = TruncatedPoly<Omega>;
  const std::size_t t = rep.size();
  const Omega zero = rep.generator_image(1).entry_zero();
  const Poly pzero = Poly::constant(zero, 2);
  auto as_const = [](const Omega& x) { return Poly::constant(x, 2); };
  std::vector<Matrix<Poly>> gens;
  for (int i = 1; i <= rep.generators(); ++i) {
    const Matrix<Poly> e = map_entries(rep.generator_image(i), as_const);
    const Matrix<Poly> z = Matrix<Poly>::zero(t, pzero);
    gens.push_back(block_compose<Poly>({{{e, z}, {z, -e}}}));
  }
  const Matrix<Poly> zero_block = Matrix<Poly>::zero(t, pzero);
  const Matrix<Poly> zhat =
      map_entries(Matrix<Omega>::identity(t, zero), [](const Omega& x) { return Poly::monomial(x, 1, 2); });
  gens.push_back(block_compose<Poly>({{{zero_block, zhat}, {zhat, zero_block}}}));
  return GrassmannRepresentation<Poly>("lift(" + rep.name() + ")", std::move(gens), rep.ct_claimed());
}

/// Doubling step for square-free targets, with the adjoined z relabeled as
/// the next variable so the codomain stays K[z_1..z_{k+1}]/(z_i^2).
inline CTRepresentation lift_representation(const CTRepresentation& rep) {
  const auto lifted = adjoin_lift(rep);
  std::vector<Matrix<SquareFreePoly>> gens;
  for (int i = 1; i <= lifted.generators(); ++i) {
    gens.push_back(map_entries(lifted.generator_image(i), [](const TruncatedPoly<SquareFreePoly>& p) {
      return adjoin_flatten(p);
    }));
  }
  return CTRepresentation(lifted.name(), std::move(gens), rep.ct_claimed());
}

/// Closed form of the lifted image of g + h v_{m+1} (g, h in E^(m)):
///   [[eps(g0 + g1), eps(h0 + h1) z], [eps(h0 - h1) z, eps(g0 - g1)]]
/// relabeled into square-free polynomials.
inline Matrix<SquareFreePoly> lift_closed_form(const CTRepresentation& rep, const GrassmannElement& g,
                                               const GrassmannElement& h) {
  const auto gs = grade_split(g);
  const auto hs = grade_split(h);
  auto lift_entries = [](const Matrix<SquareFreePoly>& a, bool times_z) {
    return map_entries(a, [times_z](const SquareFreePoly& x) {
      const SquareFreePoly zero = zero_like(x);
      return adjoin_flatten(times_z ? TruncatedPoly<SquareFreePoly>({zero, x})
                                    : TruncatedPoly<SquareFreePoly>({x, zero}));
    });
  };
  return block_compose<SquareFreePoly>({{{lift_entries(rep(gs.even + gs.odd), false),
                                          lift_entries(rep(hs.even + hs.odd), true)},
                                         {lift_entries(rep(hs.even - hs.odd), true),
                                          lift_entries(rep(gs.even - gs.odd), false)}}});
}

inline constexpr int kMaxCTGenerators = 12;

/// The CT-representation eps^(m) of E^(m) into 2^{m-1} x 2^{m-1} matrices over
/// K[z_1..z_m]/(z_i^2). Built once per m and shared.
inline std::shared_ptr<const CTRepresentation> ct_representation(int m) {
  if (m < 1 || m > kMaxCTGenerators) throw Error("generator count out of range for eps^(m)");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CTRepresentation>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::shared_ptr<const CTRepresentation> rep;
  if (m == 1) {
    rep = std::make_shared<const CTRepresentation>(epsilon1_representation());
  } else if (m == 2) {
    rep = std::make_shared<const CTRepresentation>(epsilon2_representation());
  } else {
    auto prev = cache.find(m - 1);
    std::shared_ptr<const CTRepresentation> base;
    if (prev != cache.end()) {
      base = prev->second;
    } else {
      base = std::make_shared<const CTRepresentation>(epsilon2_representation());
      for (int k = 3; k < m; ++k) base = std::make_shared<const CTRepresentation>(lift_representation(*base));
    }
    rep = std::make_shared<const CTRepresentation>(lift_representation(*base));
  }
  cache.emplace(m, rep);
  return rep;
}

inline Matrix<SquareFreePoly> epsilon_m(int m, const GrassmannElement& g) {
  if (g.generators() != m) throw Error("generator count mismatch");
  return (*ct_representation(m))(g);
}

/// eps_n : M_n(R) -> M_n(M_t(Omega)) ~= M_{tn}(Omega).
template <RingElement Omega>
Matrix<Omega> extend_to_matrices(const GrassmannRepresentation<Omega>& rep, const Matrix<GrassmannElement>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).generators() != rep.generators()) throw Error("entry algebra mismatch");
    }
  }
  return flatten(map_entries(a, [&rep](const GrassmannElement& x) { return rep(x); }));
}

inline constexpr int kMaxRegularGenerators = 10;

/// Left multiplication by g on E^(m), in the basis of basis_enumerate(m);
/// column j is the image of basis monomial j.
inline Matrix<Rational> regular_representation(int m, const GrassmannElement& g) {
  if (m < 1 || m > kMaxRegularGenerators) throw Error("generator count out of range for the regular representation");
  if (g.generators() != m) throw Error("generator count mismatch");
  const std::size_t dim = std::size_t{1} << m;
  Matrix<Rational> a(dim, Rational());
  for (std::size_t col = 0; col < dim; ++col) {
    const GrassmannElement image = g * GrassmannElement::monomial(m, static_cast<Mask>(col));
    for (const auto& [mask, c] : image.terms()) a(mask, col) = c;
  }
  return a;
}

inline GrassmannRepresentation<Rational> regular_rep(int m) {
  std::vector<Matrix<Rational>> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(regular_representation(m, GrassmannElement::generator(m, i)));
  return GrassmannRepresentation<Rational>("regular", std::move(gens), true);
}

/// The 2x2 embedding of E^(3) over K[x,y,z]/(x^2,y^2,z^2) (x,y,z = z1,z2,z3):
///   v1 |-> [[0, x], [x, 0]], v2 |-> [[y, 2y], [-2y, -y]], v3 |-> [[-2z, -z], [z, 2z]].
/// Injective, but tr(v1v2v3) = 6xyz, so it is not constant-trace.
inline CTRepresentation e3_demo_representation() {
  using detail::zconst;
  using detail::zvar;
  const auto x = zvar(3, 1);
  const auto y = zvar(3, 2);
  const auto z = zvar(3, 3);
  const auto two = Rational(2);
  return CTRepresentation("e3demo",
                          {detail::sqfree_matrix2(zconst(3, 0), x, x, zconst(3, 0)),
                           detail::sqfree_matrix2(y, scale(y, two), -scale(y, two), -y),
                           detail::sqfree_matrix2(-scale(z, two), -z, z, scale(z, two))},
                          false);
}

inline Matrix<SquareFreePoly> e3_demo_embedding(const GrassmannElement& g) {
  if (g.generators() != 3) throw Error("e3_demo_embedding requires an element of E^(3)");
  static const CTRepresentation rep = e3_demo_representation();
  return rep(g);
}

template <RingElement Omega>
struct CtVerdict {
  bool ct = true;
  std::optional<GrassmannElement> witness;
  std::optional<Omega> witness_trace;
  std::size_t elements_checked = 0;
};

inline constexpr int kExhaustiveCtLimit = 8;

/// Checks tr(rep(r)) in K on every basis monomial (m <= 8; complete, since the
/// trace is linear) and on `trials` random elements. The first failure found
/// is returned as the witness.
template <RingElement Omega>
CtVerdict<Omega> is_ct(const GrassmannRepresentation<Omega>& rep, int trials, std::uint64_t seed,
                       std::int64_t coeff_bound = 3) {
  CtVerdict<Omega> verdict;
  const int m = rep.generators();
  auto check = [&](const GrassmannElement& g, const Matrix<Omega>& image) {
    ++verdict.elements_checked;
    Omega tr = trace(image);
    if (!is_scalar(tr)) {
      verdict.ct = false;
      verdict.witness = g;
      verdict.witness_trace = std::move(tr);
      return false;
    }
    return true;
  };
  if (m <= kExhaustiveCtLimit) {
    for (Mask mask : basis_enumerate(m)) {
      if (!check(GrassmannElement::monomial(m, mask), rep.basis_image(mask))) return verdict;
    }
  }
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    const GrassmannElement g = random_grassmann(m, coeff_bound, rng);
    if (!check(g, rep(g))) return verdict;
  }
  return verdict;
}

struct HomomorphismVerdict {
  bool holds = true;
  int pairs_checked = 0;
  std::optional<std::pair<GrassmannElement, GrassmannElement>> witness;
};

/// rep(ab) = rep(a) rep(b) and rep(a + b) = rep(a) + rep(b) on seeded random pairs.
template <RingElement Omega>
HomomorphismVerdict check_homomorphism(const GrassmannRepresentation<Omega>& rep, int trials, std::uint64_t seed,
                                       std::int64_t coeff_bound = 3) {
  HomomorphismVerdict verdict;
  Rng rng(seed);
  const int m = rep.generators();
  for (int i = 0; i < trials; ++i) {
    const GrassmannElement a = random_grassmann(m, coeff_bound, rng);
    const GrassmannElement b = random_grassmann(m, coeff_bound, rng);
    const Matrix<Omega> ra = rep(a);
    const Matrix<Omega> rb = rep(b);
    ++verdict.pairs_checked;
    if (!(rep(a * b) == ra * rb) || !(rep(a + b) == ra + rb)) {
      verdict.holds = false;
      verdict.witness = std::make_pair(a, b);
      return verdict;
    }
  }
  return verdict;
}

/// Rank over Q of the 2^m basis images flattened to coordinate vectors;
/// the representation is injective iff this equals 2^m.
template <RingElement Omega>
std::size_t image_rank(const GrassmannRepresentation<Omega>& rep) {
  RationalRows rows;
  for (Mask mask : basis_enumerate(rep.generators())) {
    const Matrix<Omega> img = rep.basis_image(mask);
    std::vector<Rational> row;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = 0; j < img.size(); ++j) {
        auto c = coordinates(img(i, j));
        row.insert(row.end(), c.begin(), c.end());
      }
    }
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

template <RingElement Omega>
bool is_injective(const GrassmannRepresentation<Omega>& rep) {
  return image_rank(rep) == (std::size_t{1} << rep.generators());
}

}  // namespace ctrep
