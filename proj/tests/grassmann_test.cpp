#include <gtest/gtest.h>

#include "ctrep/mask_algebra.hpp"
#include "ctrep/random.hpp"
#include "ctrep/text.hpp"
#include "oracles.hpp"

using ctrep::GrassmannElement;
using ctrep::Mask;
using ctrep::Rational;

namespace {

GrassmannElement v(int m, int i) { return GrassmannElement::generator(m, i); }
GrassmannElement one(int m) { return GrassmannElement::scalar(m, Rational(1)); }
GrassmannElement g(const char* text, int m) { return ctrep::parse_grassmann(text, m); }

}  // namespace

TEST(Grassmann, SwapGivesSign) { EXPECT_EQ(v(2, 2) * v(2, 1), -(v(2, 1) * v(2, 2))); }

TEST(Grassmann, SquareOfSumVanishes) {
  const GrassmannElement s = v(2, 1) + v(2, 2);
  EXPECT_TRUE((s * s).is_zero());
}

TEST(Grassmann, ProductOfUnitShifts) {
  EXPECT_EQ((one(2) + v(2, 1)) * (one(2) + v(2, 2)), g("1 + v1 + v2 + v1*v2", 2));
}

TEST(Grassmann, ThreeGeneratorSign) {
  const GrassmannElement v13 = v(3, 1) * v(3, 3);
  EXPECT_EQ(v13 * v(3, 2), GrassmannElement::monomial(3, 0b111, Rational(-1)));
}

TEST(Grassmann, MismatchedGeneratorCount) {
  try {
    (void)(v(2, 1) * v(3, 1));
    FAIL();
  } catch (const ctrep::Error& e) {
    EXPECT_STREQ(e.what(), "generator count mismatch");
  }
  EXPECT_THROW((void)(v(2, 1) + v(3, 1)), ctrep::Error);
}

TEST(Grassmann, GeneratorRange) {
  EXPECT_THROW(GrassmannElement(0), ctrep::Error);
  EXPECT_THROW(GrassmannElement(17), ctrep::Error);
  EXPECT_THROW(v(2, 3), ctrep::Error);
  EXPECT_NO_THROW(GrassmannElement(16));
}

TEST(Grassmann, CanonicalFormDropsZeros) {
  const GrassmannElement x = g("v1 + v2", 2) - g("v1", 2);
  EXPECT_EQ(x.terms().size(), 1U);
  EXPECT_EQ(x, v(2, 2));
  EXPECT_TRUE((x - x).terms().empty());
}

TEST(Grassmann, GradeSplitExamples) {
  auto s = ctrep::grade_split(g("1 + v1 + v1*v2", 2));
  EXPECT_EQ(s.even, g("1 + v1*v2", 2));
  EXPECT_EQ(s.odd, g("v1", 2));
  s = ctrep::grade_split(GrassmannElement(3));
  EXPECT_TRUE(s.even.is_zero());
  EXPECT_TRUE(s.odd.is_zero());
  s = ctrep::grade_split(g("v1*v2*v3 + 5", 3));
  EXPECT_EQ(s.even, g("5", 3));
  EXPECT_EQ(s.odd, g("v1*v2*v3", 3));
}

TEST(Grassmann, GradingInvolutionExamples) {
  EXPECT_EQ(ctrep::grading_involution(g("1 + v1 + v1*v2", 2)), g("1 - v1 + v1*v2", 2));
  EXPECT_EQ(v(2, 1) * v(2, 2), ctrep::grading_involution(v(2, 1)) * ctrep::grading_involution(v(2, 2)));
}

TEST(Grassmann, BasisEnumeration) {
  EXPECT_EQ(ctrep::basis_enumerate(1), (std::vector<Mask>{0, 1}));
  EXPECT_EQ(ctrep::basis_enumerate(2), (std::vector<Mask>{0, 1, 2, 3}));
  EXPECT_EQ(ctrep::basis_enumerate(5).size(), 32U);
}

TEST(Grassmann, WidenKeepsTerms) {
  const GrassmannElement x = g("2 - v1*v2", 2);
  EXPECT_EQ(x.widen(4).generators(), 4);
  EXPECT_EQ(x.widen(4), g("2 - v1*v2", 4));
  EXPECT_THROW(x.widen(1), ctrep::Error);
}

TEST(GrassmannProperty, SignMatchesBubbleSortOnAllMonomialPairs) {
  for (int m = 1; m <= 6; ++m) {
    for (Mask a : ctrep::basis_enumerate(m)) {
      for (Mask b : ctrep::basis_enumerate(m)) {
        const GrassmannElement p = GrassmannElement::monomial(m, a) * GrassmannElement::monomial(m, b);
        const auto [sign, word] = oracle::word_product(oracle::mask_word(a), oracle::mask_word(b));
        if (sign == 0) {
          EXPECT_TRUE(p.is_zero()) << m << ' ' << a << ' ' << b;
        } else {
          EXPECT_EQ(p, GrassmannElement::monomial(m, oracle::word_mask(word), Rational(sign))) << m << ' ' << a << ' ' << b;
        }
      }
    }
  }
}

TEST(GrassmannProperty, ProductsMatchWordOracle) {
  ctrep::Rng rng(21);
  for (int m : {3, 7, 9, 10}) {
    for (int i = 0; i < 20; ++i) {
      const GrassmannElement a = ctrep::random_grassmann(m, 4, rng);
      const GrassmannElement b = ctrep::random_grassmann(m, 4, rng);
      EXPECT_EQ(oracle::to_words(a * b), oracle::word_multiply(oracle::to_words(a), oracle::to_words(b)));
    }
  }
}

TEST(GrassmannProperty, Associativity) {
  ctrep::Rng rng(22);
  for (int m = 1; m <= 9; ++m) {
    for (int i = 0; i < 10; ++i) {
      const auto a = ctrep::random_grassmann(m, 3, rng);
      const auto b = ctrep::random_grassmann(m, 3, rng);
      const auto c = ctrep::random_grassmann(m, 3, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(GrassmannProperty, Anticommutation) {
  for (int m = 1; m <= 8; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = i; j <= m; ++j) EXPECT_TRUE((v(m, i) * v(m, j) + v(m, j) * v(m, i)).is_zero());
    }
  }
}

TEST(GrassmannProperty, GradingInvolutionIsAlgebraInvolution) {
  ctrep::Rng rng(23);
  for (int m = 1; m <= 7; ++m) {
    for (int i = 0; i < 10; ++i) {
      const auto a = ctrep::random_grassmann(m, 3, rng);
      const auto b = ctrep::random_grassmann(m, 3, rng);
      EXPECT_EQ(ctrep::grading_involution(a * b), ctrep::grading_involution(a) * ctrep::grading_involution(b));
      EXPECT_EQ(ctrep::grading_involution(ctrep::grading_involution(a)), a);
      const auto s = ctrep::grade_split(a);
      EXPECT_EQ(s.even + s.odd, a);
      EXPECT_EQ(ctrep::grading_involution(a), s.even - s.odd);
    }
    EXPECT_EQ(ctrep::grading_involution(GrassmannElement::scalar(m, Rational(7, 3))), GrassmannElement::scalar(m, Rational(7, 3)));
  }
}

TEST(GrassmannProperty, TopMonomialSurvives) {
  for (int m = 1; m <= 16; ++m) {
    GrassmannElement p = one(m);
    for (int i = 1; i <= m; ++i) p = p * v(m, i);
    EXPECT_EQ(p, GrassmannElement::monomial(m, (Mask{1} << m) - 1));
  }
}
