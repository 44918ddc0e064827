#include <octaudit/fib_octonions.hpp>

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace octaudit;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(FamilyParameter, RejectsDegenerateValues) {
    EXPECT_THROW(FamilyParameter(Rational(-1)), std::invalid_argument);
    EXPECT_THROW(FamilyParameter(Rational(-1, 2)), std::invalid_argument);
    EXPECT_THROW(FamilyParameter(Rational(-1, 3)), std::invalid_argument);
    FamilyParameter fam(Rational(-4));
    AlgebraParams alg = ap_algebra(fam);
    EXPECT_EQ(alg.alpha, Rational(-3));
    EXPECT_EQ(alg.beta, Rational(-7));
    EXPECT_EQ(alg.gamma, Rational(-11));
}

TEST(FibonacciOctonion, CoefficientsAreConsecutiveFibonacci) {
    AlgebraParams classical(Rational(1), Rational(1), Rational(1));
    Octonion f0 = fibonacci_octonion(0, classical);
    Integer expected[8] = {0, 1, 1, 2, 3, 5, 8, 13};
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(f0.c[static_cast<std::size_t>(i)], Rational(expected[i]));
    }
    Octonion f5 = fibonacci_octonion(5, classical);
    for (int i = 0; i < 8; ++i) {
        EXPECT_EQ(f5.c[static_cast<std::size_t>(i)], Rational(fib(5 + i)));
    }
    EXPECT_THROW(fibonacci_octonion(-1, classical), std::domain_error);
}

TEST(NormFormula, SpotAnchors) {
    EXPECT_EQ(norm_closed_form(0, FamilyParameter(Rational(0))), 273);
    EXPECT_EQ(norm_closed_form(1, FamilyParameter(Rational(0))), 714);
    EXPECT_EQ(norm_closed_form(0, FamilyParameter(Rational(1))), 5089);
    EXPECT_EQ(norm_closed_form(0, FamilyParameter(Rational(-3, 2))), Rational(-519, 4));
    EXPECT_EQ(norm_direct(0, FamilyParameter(Rational(0))), 273);
    EXPECT_EQ(norm_direct(1, FamilyParameter(Rational(-3, 2))), Rational(-669, 2));
}

TEST(NormFormula, ClosedFormEqualsDirectNorm) {
    std::vector<Rational> samples = {Rational(0), Rational(1), Rational(-4), Rational(-3, 2),
                                     Rational(7, 3)};
    for (const Rational& a : samples) {
        FamilyParameter fam(a);
        for (long long n = 0; n <= 80; ++n) {
            ASSERT_EQ(norm_closed_form(n, fam), norm_direct(n, fam))
                << "a=" << to_string(a) << " n=" << n;
        }
    }
}

TEST(NormFormula, DisplayAndCombinedCoefficientsAgree) {
    std::vector<Rational> samples = {Rational(-4), Rational(0),      Rational(1),
                                     Rational(7, 3), Rational(-3, 2), Rational(5)};
    for (const Rational& a : samples) {
        NormCoefficients display = norm_coefficients_display(a);
        NormCoefficients combined = norm_coefficients_combined(a);
        EXPECT_EQ(display.c6, combined.c6) << "a=" << to_string(a);
        EXPECT_EQ(display.c7, combined.c7) << "a=" << to_string(a);
        EXPECT_EQ(display.cAlt, combined.cAlt) << "a=" << to_string(a);
    }
}

TEST(NormFormula, WorkedExampleCoefficients) {
    NormCoefficients c = norm_coefficients_combined(Rational(-4));
    EXPECT_EQ(c.c6, Rational(-1144));
    EXPECT_EQ(c.c7, Rational(-1851));
    EXPECT_EQ(c.cAlt, Rational(-96));
}

TEST(NormFormula, AuditPassesOnValidRange) {
    std::vector<FamilyParameter> samples = {FamilyParameter(Rational(0)),
                                            FamilyParameter(Rational(1)),
                                            FamilyParameter(Rational(-4))};
    AuditReport report = audit_norm_formula(0, 40, samples);
    EXPECT_EQ(report.claim_id, "P3.3");
    EXPECT_EQ(report.status(), AuditStatus::Pass);
    EXPECT_EQ(report.checked, 123);
    EXPECT_THROW(audit_norm_formula(0, 40, {}), std::invalid_argument);
}

TEST(StatedExamples, CatalogShape) {
    std::vector<StatedFamilyExample> examples = stated_family_examples();
    ASSERT_EQ(examples.size(), 3u);
    EXPECT_EQ(examples[0].a, Rational(-4));
    EXPECT_TRUE(examples[0].stated_coefficients.has_value());
    EXPECT_EQ(examples[0].stated_sign, -1);
    EXPECT_STREQ(examples[0].claim_id, "P3.3.ex.a=-4");

    EXPECT_EQ(examples[1].a, Rational(-2));
    EXPECT_FALSE(examples[1].stated_coefficients.has_value());
    EXPECT_EQ(examples[1].stated_sign, 0);

    EXPECT_EQ(examples[2].a, Rational(-3, 2));
    ASSERT_TRUE(examples[2].stated_coefficients.has_value());
    EXPECT_EQ(examples[2].stated_coefficients->c6, Rational(-7, 2));
    EXPECT_EQ(examples[2].stated_coefficients->c7, Rational(831, 2));
    EXPECT_EQ(examples[2].stated_coefficients->cAlt, Rational(-3, 2));
    EXPECT_EQ(examples[2].stated_sign, 1);
}

TEST(StatedExamples, IntegerExampleMatchesExactly) {
    AuditReport report = audit_family_example(stated_family_examples()[0], 0, 60);
    EXPECT_EQ(report.claim_id, "P3.3.ex.a=-4");
    EXPECT_EQ(report.status(), AuditStatus::Pass);
    EXPECT_TRUE(report.findings.empty());
    EXPECT_TRUE(contains(report.domain_description, "invertibility"));
}

TEST(StatedExamples, HalfIntegerExampleProducesFindings) {
    AuditReport report = audit_family_example(stated_family_examples()[2], 0, 60);
    EXPECT_EQ(report.claim_id, "P3.3.ex.a=-3/2");
    EXPECT_EQ(report.status(), AuditStatus::Finding);
    EXPECT_TRUE(report.failures.empty());
    ASSERT_EQ(report.findings.size(), 3u);
    EXPECT_EQ(report.findings[0].stated, "-7/2");
    EXPECT_EQ(report.findings[0].computed, "-15/2");
    EXPECT_EQ(report.findings[1].stated, "831/2");
    EXPECT_EQ(report.findings[1].computed, "-21/4");
    EXPECT_TRUE(contains(report.findings[2].note, "-519/4"));
    EXPECT_TRUE(contains(report.findings[2].note, "invertibility conclusion survives"));
}

TEST(PolynomialForms, FactoredMiddleNumeratorMismatch) {
    std::vector<Rational> samples = {Rational(-4), Rational(-2), Rational(-1), Rational(1),
                                     Rational(2)};
    AuditReport report = audit_prop34_polynomials(samples);
    EXPECT_EQ(report.claim_id, "P3.4");
    EXPECT_EQ(report.status(), AuditStatus::Finding);
    EXPECT_TRUE(report.failures.empty());
    // The middle factored numerator disagrees at every sample except a = -2.
    ASSERT_EQ(report.findings.size(), 4u);
    for (const Finding& f : report.findings) {
        EXPECT_TRUE(contains(f.note, "282a^3+650a^2+424a+97"));
        EXPECT_TRUE(contains(f.note, "4(a+2)"));
    }
    EXPECT_THROW(audit_prop34_polynomials({Rational(0), Rational(1), Rational(2), Rational(3)}),
                 std::invalid_argument);
    EXPECT_THROW(audit_prop34_polynomials({Rational(1), Rational(1), Rational(2), Rational(3),
                                           Rational(4)}),
                 std::invalid_argument);
}

TEST(SignStability, NegativeOnStatedRegion) {
    std::vector<FamilyParameter> samples;
    for (const Rational& a : {Rational(-2), Rational(-5, 2), Rational(-3), Rational(-4),
                              Rational(-10)}) {
        samples.emplace_back(a);
    }
    AuditReport report = audit_sign_stability(samples, 0, 100);
    EXPECT_EQ(report.claim_id, "P3.4.sign");
    EXPECT_EQ(report.status(), AuditStatus::Pass);
    EXPECT_EQ(report.checked, 505);
    EXPECT_THROW(audit_sign_stability({FamilyParameter(Rational(-3, 2))}, 0, 10),
                 std::invalid_argument);
}

TEST(SignScan, TalliesAndFirstIndices) {
    SignReport down = invertibility_scan(FamilyParameter(Rational(-3, 2)), 0, 10);
    EXPECT_EQ(down.positives, 0);
    EXPECT_EQ(down.negatives, 11);
    EXPECT_EQ(down.zeros, 0);
    ASSERT_TRUE(down.first_negative.has_value());
    EXPECT_EQ(*down.first_negative, 0);
    EXPECT_FALSE(down.first_positive.has_value());
    EXPECT_TRUE(down.all_invertible());

    SignReport up = invertibility_scan(FamilyParameter(Rational(0)), 0, 5);
    EXPECT_EQ(up.positives, 6);
    ASSERT_TRUE(up.first_positive.has_value());
    EXPECT_EQ(*up.first_positive, 0);
    EXPECT_TRUE(up.all_invertible());
}

TEST(FamilySplit, OnlyParametersBelowMinusOneAreAudited) {
    std::vector<FamilyParameter> samples = {
        FamilyParameter(Rational(-4)),   FamilyParameter(Rational(-2)),
        FamilyParameter(Rational(-3, 2)), FamilyParameter(Rational(0)),
        FamilyParameter(Rational(1))};
    AuditReport report = audit_family_split(samples);
    EXPECT_EQ(report.claim_id, "R3.1");
    EXPECT_EQ(report.status(), AuditStatus::Pass);
    EXPECT_EQ(report.checked, 3);
}
