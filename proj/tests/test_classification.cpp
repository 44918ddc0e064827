#include <octaudit/classification.hpp>
#include <octaudit/sampling.hpp>

#include <gtest/gtest.h>

using namespace octaudit;

TEST(Classify, DivisionIffAllParametersPositive) {
    EXPECT_EQ(classify(AlgebraParams(Rational(1), Rational(1), Rational(1))),
              AlgebraClass::Division);
    EXPECT_EQ(classify(AlgebraParams(Rational(2), Rational(3), Rational(5))),
              AlgebraClass::Division);
    EXPECT_EQ(classify(AlgebraParams(Rational(1, 2), Rational(2), Rational(3))),
              AlgebraClass::Division);
    EXPECT_EQ(classify(AlgebraParams(Rational(1), Rational(1), Rational(-1))),
              AlgebraClass::Split);
    EXPECT_EQ(classify(AlgebraParams(Rational(-3), Rational(-7), Rational(-11))),
              AlgebraClass::Split);
    EXPECT_EQ(classify(AlgebraParams(Rational(-1), Rational(-3), Rational(-5))),
              AlgebraClass::Split);
    EXPECT_STREQ(to_string(AlgebraClass::Division), "division");
    EXPECT_STREQ(to_string(AlgebraClass::Split), "split");
}

TEST(QuaternionNorm, DiagonalFormAnchor) {
    // n(x) = x0^2 + alpha x1^2 + beta x2^2 + alpha beta x3^2
    QuaternionVector v{{Rational(3), Rational(2), Rational(1), Rational(1)}};
    EXPECT_EQ(quaternion_norm(v, Rational(-3), Rational(-7)), 11);
    QuaternionVector unit{{Rational(1), Rational(0), Rational(0), Rational(0)}};
    EXPECT_EQ(quaternion_norm(unit, Rational(5), Rational(9)), 1);
}

TEST(Height, OfRationals) {
    EXPECT_EQ(rational_height(Rational(0)), 1);
    EXPECT_EQ(rational_height(Rational(5)), 5);
    EXPECT_EQ(rational_height(Rational(-3, 2)), 3);
    EXPECT_EQ(rational_height(Rational(2, 7)), 7);
}

TEST(NormSearch, FindsUnitRepresentationFirst) {
    auto hit = search_norm_representation(Rational(1), Rational(1), Rational(1), 2);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->x[0], 1);
    EXPECT_EQ(hit->x[1], 0);
    EXPECT_EQ(hit->x[2], 0);
    EXPECT_EQ(hit->x[3], 0);
}

TEST(NormSearch, SolvesTargetInIndefiniteForm) {
    // n(x) = 11 is solvable over H(-3,-7); the first height-1 witness in the
    // search order is (0,1,1,1): 0 - 3 - 7 + 21 = 11.
    auto hit = search_norm_representation(Rational(-3), Rational(-7), Rational(11), 5);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(quaternion_norm(*hit, Rational(-3), Rational(-7)), 11);
    EXPECT_EQ(hit->x[0], 0);
    EXPECT_EQ(hit->x[1], 1);
    EXPECT_EQ(hit->x[2], 1);
    EXPECT_EQ(hit->x[3], 1);
}

TEST(NormSearch, PositiveDefiniteShortcutAndValidation) {
    // A positive-definite form never represents a negative target.
    EXPECT_EQ(search_norm_representation(Rational(2), Rational(3), Rational(-1), 10),
              std::nullopt);
    EXPECT_THROW(search_norm_representation(Rational(1), Rational(1), Rational(1), 0),
                 std::invalid_argument);
    EXPECT_THROW(search_norm_representation(Rational(0), Rational(1), Rational(1), 2),
                 std::invalid_argument);
}

TEST(NormSearch, MissReturnsEmpty) {
    // 7 is not a sum of four squares of rationals of height <= 1 other than
    // via 4+1+1+1 = 7: (2,1,1,1) has height 2, so a height-1 search misses it
    // while a height-2 search finds it.
    auto miss = search_norm_representation(Rational(1), Rational(1), Rational(7), 1);
    EXPECT_FALSE(miss.has_value());
    auto hit = search_norm_representation(Rational(1), Rational(1), Rational(7), 2);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(quaternion_norm(*hit, Rational(1), Rational(1)), 7);
}

TEST(Isotropic, WitnessExistsExactlyForSplit) {
    AlgebraParams split_alg(Rational(1), Rational(1), Rational(-1));
    auto witness = find_isotropic(split_alg, 1);
    ASSERT_TRUE(witness.has_value());
    EXPECT_FALSE(witness->is_zero());
    EXPECT_EQ(norm(*witness), 0);

    AlgebraParams division_alg(Rational(1), Rational(1), Rational(1));
    EXPECT_EQ(find_isotropic(division_alg, 1), std::nullopt);
}

TEST(Classify, DivisionMeansPositiveDefiniteNorm) {
    std::vector<AlgebraParams> division_algebras = {
        AlgebraParams(Rational(1), Rational(1), Rational(1)),
        AlgebraParams(Rational(2), Rational(3), Rational(5)),
        AlgebraParams(Rational(1, 2), Rational(2), Rational(3)),
    };
    Sampler sampler(99);
    for (const AlgebraParams& alg : division_algebras) {
        ASSERT_EQ(classify(alg), AlgebraClass::Division);
        for (int trial = 0; trial < 100; ++trial) {
            Octonion x = Octonion::zero(alg);
            for (auto& coeff : x.c) coeff = sampler.small_rational();
            if (x.is_zero()) x = Octonion::one(alg);
            ASSERT_GT(norm(x), 0);
        }
    }
}

TEST(Isotropic, EverySplitSignPatternHasHeightOneWitness) {
    // All 2^3 - 1 sign patterns of (alpha, beta, gamma) = (+-1, +-1, +-1)
    // other than all-positive are split, and a height-1 isotropic vector
    // certifies each one.
    for (int mask = 1; mask < 8; ++mask) {
        AlgebraParams alg(Rational((mask & 1) ? -1 : 1), Rational((mask & 2) ? -1 : 1),
                          Rational((mask & 4) ? -1 : 1));
        ASSERT_EQ(classify(alg), AlgebraClass::Split) << "mask=" << mask;
        auto witness = find_isotropic(alg, 1);
        ASSERT_TRUE(witness.has_value()) << "mask=" << mask;
        EXPECT_FALSE(witness->is_zero());
        EXPECT_EQ(norm(*witness), 0) << "mask=" << mask;
    }
}

TEST(Isotropic, NegativeParameterWitness) {
    AlgebraParams alg(Rational(-1), Rational(-3), Rational(-5));
    auto witness = find_isotropic(alg, 2);
    ASSERT_TRUE(witness.has_value());
    EXPECT_FALSE(witness->is_zero());
    EXPECT_EQ(norm(*witness), 0);
}
