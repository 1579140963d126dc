#include <algorithm>
#include <cstdint>

#include <gtest/gtest.h>

#include "ctrep/identities.hpp"
#include "ctrep/random.hpp"
#include "ctrep/text.hpp"
#include "oracles.hpp"

using ctrep::GrassmannElement;
using ctrep::Matrix;
using ctrep::Rational;

namespace {

GrassmannElement gp(const char* text, int m) { return ctrep::parse_grassmann(text, m); }

std::vector<GrassmannElement> generators(int m) {
  std::vector<GrassmannElement> v;
  for (int i = 1; i <= m; ++i) v.push_back(GrassmannElement::generator(m, i));
  return v;
}

std::vector<Rational> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

std::int64_t factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

// ---- Cayley-Hamilton ----------------------------------------------------------

TEST(CayleyHamilton, UnitShiftInTwoGenerators) {
  const auto cert = ctrep::cayley_hamilton(2, Matrix<GrassmannElement>(1, gp("1 + v1", 2)));
  EXPECT_EQ(cert.degree, 2);
  EXPECT_EQ(cert.coeffs.coeffs, ints({1, -2, 1}));
  EXPECT_TRUE(cert.residual_is_zero);
}

TEST(CayleyHamilton, NilpotentInThreeGenerators) {
  const GrassmannElement a = gp("v1 + v2*v3", 3);
  EXPECT_EQ(a * a, gp("2*v1*v2*v3", 3));
  EXPECT_TRUE((a * a * a).is_zero());
  const auto cert = ctrep::cayley_hamilton(3, Matrix<GrassmannElement>(1, a));
  EXPECT_EQ(cert.degree, 4);
  EXPECT_EQ(cert.coeffs.coeffs, ints({1, 0, 0, 0, 0}));
  EXPECT_TRUE(cert.residual_is_zero);
}

TEST(CayleyHamiltonProperty, RandomMatricesGiveRationalIdentities) {
  ctrep::Rng rng(71);
  const std::pair<int, std::size_t> cases[] = {{1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}};
  for (auto [m, n] : cases) {
    for (int i = 0; i < 4; ++i) {
      const auto a = ctrep::random_matrix(n, [&] { return ctrep::random_grassmann(m, 3, rng); });
      const auto cert = ctrep::cayley_hamilton(m, a);
      // E^(1) is widened into E^(2), so m = 1 shares the m = 2 degree.
      EXPECT_EQ(cert.degree, (1 << (std::max(m, 2) - 1)) * static_cast<int>(n));
      EXPECT_EQ(cert.coeffs.degree(), cert.degree);
      EXPECT_EQ(cert.coeffs.coeffs[0], Rational(1));
      EXPECT_TRUE(cert.residual_is_zero) << "m=" << m << " n=" << n;
    }
  }
}

TEST(CayleyHamilton, OneGeneratorUsesDegreeTwo) {
  // No degree-1 scalar identity kills 1 + v1; (x - 1)^2 does.
  const auto cert = ctrep::cayley_hamilton(1, Matrix<GrassmannElement>(1, gp("1 + v1", 1)));
  EXPECT_EQ(cert.degree, 2);
  EXPECT_EQ(cert.coeffs.coeffs, ints({1, -2, 1}));
  EXPECT_TRUE(cert.residual_is_zero);
}

TEST(CayleyHamilton, PerturbedCoefficientsLeaveResidual) {
  // The residual check is not vacuous: changing the constant coefficient of
  // a nonnilpotent certificate is detected.
  ctrep::Rng rng(72);
  const auto a = ctrep::random_matrix(2, [&] { return ctrep::random_grassmann(2, 3, rng); });
  auto coeffs = ctrep::cayley_hamilton(2, a).coeffs.coeffs;
  coeffs.back() += Rational(1);
  EXPECT_FALSE(is_zero(ctrep::evaluate_monic(coeffs, a)));
}

TEST(CayleyHamilton, Guards) {
  EXPECT_THROW(ctrep::cayley_hamilton(7, Matrix<GrassmannElement>(1, GrassmannElement(7))), ctrep::Error);
  EXPECT_THROW(ctrep::cayley_hamilton(6, Matrix<GrassmannElement>(3, GrassmannElement(6))), ctrep::Error);
}

// ---- standard polynomial ------------------------------------------------------

TEST(Standard, SmallExamples) {
  EXPECT_EQ(ctrep::standard_poly(generators(2)).value, gp("2*v1*v2", 2));
  EXPECT_EQ(ctrep::standard_poly(generators(3)).value, gp("6*v1*v2*v3", 3));
  const GrassmannElement a = gp("1 + v1 - 3*v1*v2", 2);
  EXPECT_TRUE(ctrep::standard_poly(std::vector<GrassmannElement>{a, a}).value.is_zero());
  EXPECT_EQ(ctrep::standard_poly(generators(4)).permutation_count, 24U);
}

TEST(Standard, DegreeGuard) {
  try {
    (void)ctrep::standard_poly(std::vector<Rational>(10, Rational(1)));
    FAIL();
  } catch (const ctrep::Error& e) {
    EXPECT_STREQ(e.what(), "degree too large");
  }
}

TEST(StandardProperty, GeneratorsGiveFactorialTopMonomial) {
  for (int m = 2; m <= 7; ++m) {
    const auto r = ctrep::standard_poly(generators(m));
    EXPECT_EQ(r.value, GrassmannElement::monomial(m, (ctrep::Mask{1} << m) - 1, Rational(factorial(m))));
    EXPECT_EQ(r.permutation_count, static_cast<std::uint64_t>(factorial(m)));
  }
}

TEST(StandardProperty, MatchesSubsetRecursionOracle) {
  ctrep::Rng rng(73);
  for (int k = 1; k <= 7; ++k) {
    for (int i = 0; i < 3; ++i) {
      std::vector<Matrix<ctrep::SquareFreePoly>> xs;
      for (int j = 0; j < k; ++j) xs.push_back(ctrep::random_matrix(2, [&] { return ctrep::random_sqfree(2, 2, rng); }));
      EXPECT_EQ(ctrep::standard_poly(xs).value, oracle::standard_by_subsets(xs));
      std::vector<GrassmannElement> gs;
      for (int j = 0; j < k; ++j) gs.push_back(ctrep::random_grassmann(4, 3, rng));
      EXPECT_EQ(ctrep::standard_poly(gs).value, oracle::standard_by_subsets(gs));
      std::vector<Matrix<Rational>> qs;
      for (int j = 0; j < k; ++j) {
        qs.push_back(ctrep::random_matrix(3, [&] { return Rational(rng.uniform(-3, 3)); }));
      }
      EXPECT_EQ(ctrep::standard_poly(qs).value, oracle::standard_by_subsets(qs));
    }
  }
}

TEST(StandardProperty, MultilinearAndAlternating) {
  ctrep::Rng rng(74);
  auto draw = [&] { return ctrep::random_matrix(2, [&] { return ctrep::random_grassmann(2, 3, rng); }); };
  for (int k = 2; k <= 5; ++k) {
    for (int t = 0; t < 3; ++t) {
      std::vector<Matrix<GrassmannElement>> xs;
      for (int j = 0; j < k; ++j) xs.push_back(draw());
      const auto base = ctrep::standard_poly(xs).value;
      const auto slot = static_cast<std::size_t>(rng.uniform(0, k - 1));
      // Additivity in one slot.
      const auto extra = draw();
      auto with_extra = xs;
      with_extra[slot] = extra;
      auto with_sum = xs;
      with_sum[slot] = xs[slot] + extra;
      EXPECT_EQ(ctrep::standard_poly(with_sum).value, base + ctrep::standard_poly(with_extra).value);
      // Swapping two slots negates; repeating one kills.
      auto swapped = xs;
      std::swap(swapped[0], swapped[1]);
      EXPECT_EQ(ctrep::standard_poly(swapped).value, -base);
      auto repeated = xs;
      repeated[1] = repeated[0];
      EXPECT_TRUE(is_zero(ctrep::standard_poly(repeated).value));
    }
  }
}

TEST(StandardIdentity, HoldsOnGrassmannTwo) {
  const auto v = ctrep::verify_standard_identity(
      4, 50, 75, [](ctrep::Rng& rng) { return ctrep::random_grassmann(2, 5, rng); });
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.tuples_checked, 50);
}

TEST(StandardIdentity, FailsOnGeneratorsOfGrassmannThree) {
  const auto r = ctrep::standard_poly(generators(3));
  EXPECT_FALSE(r.value.is_zero());
  EXPECT_EQ(r.value, gp("6*v1*v2*v3", 3));
}

TEST(StandardIdentity, RandomSamplesFindCounterexampleBelowBound) {
  const auto v = ctrep::verify_standard_identity(3, 10, 76, [](ctrep::Rng& rng) { return ctrep::random_grassmann(3, 3, rng); });
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(ctrep::standard_poly(*v.witness).value, *v.value);
}

TEST(StandardIdentity, AmitsurLevitzkiAtSizeTwo) {
  const auto v = ctrep::verify_standard_identity(4, 30, 77, ctrep::sqfree_matrix_sampler(2, 2, 3));
  EXPECT_TRUE(v.holds);
}

TEST(StandardIdentity, ExhaustiveBasisProof) {
  const auto v = ctrep::verify_standard_identity_on_basis(2, 4);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.tuples_checked, 256);
  EXPECT_FALSE(ctrep::verify_standard_identity_on_basis(3, 3).holds);
  EXPECT_THROW(ctrep::verify_standard_identity_on_basis(5, 5), ctrep::Error);
}

TEST(StandardIdentity, HigherDegreeInheritsVanishing) {
  // S_4 = 0 on the samples forces S_5 = 0 on their extensions.
  ctrep::Rng rng(78);
  for (int t = 0; t < 5; ++t) {
    std::vector<GrassmannElement> xs;
    for (int j = 0; j < 5; ++j) xs.push_back(ctrep::random_grassmann(2, 3, rng));
    EXPECT_TRUE(ctrep::standard_poly(std::span<const GrassmannElement>(xs.data(), 4)).value.is_zero());
    EXPECT_TRUE(ctrep::standard_poly(xs).value.is_zero());
  }
}

TEST(StandardIdentity, LargerDegreeOnSmallMatrixRings) {
  // Degree (m+1)n^2 + 1: 4 on M_1(E^(2)) and 9 on M_2(E^(1)).
  EXPECT_TRUE(ctrep::verify_standard_identity(4, 20, 79, [](ctrep::Rng& rng) {
                return ctrep::random_grassmann(2, 3, rng);
              }).holds);
  EXPECT_TRUE(ctrep::verify_standard_identity(9, 1, 80, ctrep::grassmann_matrix_sampler(1, 2, 2)).holds);
}

// ---- the degree-2 impossibility ------------------------------------------------

TEST(Impossibility, SystemIsInconsistent) {
  const auto rec = ctrep::remark35_impossibility();
  EXPECT_EQ(rec.element, gp("v1 + v2*v3", 3));
  EXPECT_EQ(rec.square, gp("2*v1*v2*v3", 3));
  EXPECT_TRUE(rec.unsolvable);
  ASSERT_TRUE(rec.witness.has_value());
  EXPECT_EQ(rec.witness->monomial, 0b111U);
  EXPECT_TRUE(rec.witness->c1_coeff.is_zero());
  EXPECT_TRUE(rec.witness->c2_coeff.is_zero());
  EXPECT_EQ(rec.witness->constant, Rational(2));
  EXPECT_EQ(rec.rows.size(), 4U);
}
