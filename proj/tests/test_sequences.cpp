#include <octaudit/sequences.hpp>

#include <gtest/gtest.h>

#include <set>
#include <string>

using namespace octaudit;

TEST(Fibonacci, Anchors) {
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(1), 1);
    EXPECT_EQ(fib(2), 1);
    EXPECT_EQ(fib(10), 55);
    EXPECT_EQ(fib(20), 6765);
    EXPECT_EQ(fib(50), Integer("12586269025"));
    EXPECT_EQ(fib(-1), 1);
    EXPECT_EQ(fib(-2), -1);
    EXPECT_EQ(fib(-3), 2);
    EXPECT_EQ(fib(-8), -21);
    EXPECT_EQ(fib(-9), 34);
}

TEST(Lucas, Anchors) {
    EXPECT_EQ(lucas(0), 2);
    EXPECT_EQ(lucas(1), 1);
    EXPECT_EQ(lucas(2), 3);
    EXPECT_EQ(lucas(10), 123);
    EXPECT_EQ(lucas(-1), -1);
    EXPECT_EQ(lucas(-2), 3);
    EXPECT_EQ(lucas(-3), -4);
}

TEST(Sequences, RecurrenceOnExtendedRange) {
    for (long long n = -200; n <= 198; ++n) {
        EXPECT_EQ(fib(n + 2), fib(n + 1) + fib(n)) << "fib recurrence at n=" << n;
        EXPECT_EQ(lucas(n + 2), lucas(n + 1) + lucas(n)) << "lucas recurrence at n=" << n;
    }
}

TEST(Sequences, NegationSymmetry) {
    for (long long n = 0; n <= 60; ++n) {
        Integer sign = (n % 2 == 0) ? Integer(-1) : Integer(1);
        EXPECT_EQ(fib(-n), sign * fib(n));
        EXPECT_EQ(lucas(-n), (n % 2 == 0 ? lucas(n) : Integer(-lucas(n))));
    }
}

TEST(Sequences, DoublingAgreesWithIteration) {
    for (long long n = -200; n <= 200; ++n) {
        EXPECT_EQ(fib_doubling(n), fib(n)) << "fib_doubling at n=" << n;
        EXPECT_EQ(lucas_doubling(n), lucas(n)) << "lucas_doubling at n=" << n;
    }
    EXPECT_EQ(fib_doubling(1000), fib(1000));
    EXPECT_EQ(lucas_doubling(1000), lucas(1000));
}

TEST(Horadam, AnchorsAndDomain) {
    HoradamParams params{Integer(2), Integer(3)};
    EXPECT_EQ(horadam(0, params), 2);
    EXPECT_EQ(horadam(1, params), 3);
    EXPECT_EQ(horadam(2, params), 5);
    EXPECT_EQ(horadam(3, params), 8);
    HoradamParams fib_params{Integer(0), Integer(1)};
    EXPECT_EQ(horadam(10, fib_params), 55);
    EXPECT_THROW(horadam(-1, params), std::domain_error);
}

TEST(GFLNumbers, AnchorsAndDomain) {
    HoradamParams params{Integer(2), Integer(3)};
    // g(n; p, q) = p f(n-1) + q l(n)
    EXPECT_EQ(gfl_number(1, params), 3);
    EXPECT_EQ(gfl_number(2, params), 11);
    EXPECT_EQ(gfl_number(3, params), 14);
    EXPECT_THROW(gfl_number(0, params), std::domain_error);
    EXPECT_THROW(gfl_number(-5, params), std::domain_error);
    // Negative-index extension uses the reflected sequences.
    EXPECT_EQ(gfl_number(0, params, true), Integer(2) * fib(-1) + Integer(3) * lucas(0));
    EXPECT_EQ(gfl_number(-3, params, true), Integer(2) * fib(-4) + Integer(3) * lucas(-3));
}

TEST(GFLNumbers, RecurrenceOnWeightGrid) {
    for (long long p = -2; p <= 2; ++p) {
        for (long long q = -2; q <= 2; ++q) {
            if (p == 0 && q == 0) continue;
            HoradamParams params{Integer(p), Integer(q)};
            for (long long n = 1; n <= 200; ++n) {
                ASSERT_EQ(gfl_number(n + 2, params),
                          gfl_number(n + 1, params) + gfl_number(n, params))
                    << "p=" << p << " q=" << q << " n=" << n;
            }
        }
    }
}

TEST(GFLNumbers, LinearInTheWeights) {
    // g(n; ap+bp', aq+bq') = a g(n; p,q) + b g(n; p',q')
    for (long long n : {1LL, 2LL, 7LL, 30LL}) {
        for (long long a : {-3LL, 1LL, 2LL}) {
            for (long long b : {-1LL, 0LL, 4LL}) {
                HoradamParams pq{Integer(2), Integer(-1)};
                HoradamParams pq2{Integer(-3), Integer(5)};
                HoradamParams mixed{a * pq.p + b * pq2.p, a * pq.q + b * pq2.q};
                EXPECT_EQ(gfl_number(n, mixed),
                          Integer(a) * gfl_number(n, pq) + Integer(b) * gfl_number(n, pq2));
            }
        }
    }
}

TEST(Identities, TagsAreCompleteAndUnique) {
    std::set<std::string> tags;
    for (IdentityId id : kAllIdentityIds) {
        std::string tag = identity_tag(id);
        EXPECT_FALSE(tag.empty());
        EXPECT_FALSE(std::string(identity_equation(id)).empty());
        long long lo = identity_min_index(id);
        EXPECT_TRUE(lo == 0 || lo == 1);
        tags.insert(tag);
    }
    EXPECT_EQ(tags.size(), kAllIdentityIds.size());
    EXPECT_EQ(identity_min_index(IdentityId::P2_1_v), 1);
    EXPECT_EQ(identity_min_index(IdentityId::P2_1_vi), 1);
    EXPECT_EQ(identity_min_index(IdentityId::P2_1_i), 0);
    EXPECT_STREQ(identity_tag(IdentityId::P2_1_i), "P2.1.i");
    EXPECT_STREQ(identity_tag(IdentityId::KA_S1), "KA.S1");
}

TEST(Identities, AllHoldOnRange) {
    for (IdentityId id : kAllIdentityIds) {
        AuditReport report = audit_sequence_identity(id, 0, 120);
        EXPECT_TRUE(report.failures.empty()) << identity_tag(id);
        EXPECT_TRUE(report.findings.empty()) << identity_tag(id);
        long long lo = identity_min_index(id);
        EXPECT_EQ(report.checked, 121 - lo) << identity_tag(id);
        EXPECT_EQ(report.status(), AuditStatus::Pass) << identity_tag(id);
    }
}

TEST(Identities, TwoSidedIdentityYieldsTwoChecks) {
    EXPECT_EQ(evaluate_identity(IdentityId::P2_1_iv, 7).size(), 2u);
    EXPECT_EQ(evaluate_identity(IdentityId::P2_1_i, 7).size(), 1u);
}

TEST(Identities, SpotValues) {
    // f(10)^2 + f(11)^2 = f(21)
    auto checks = evaluate_identity(IdentityId::P2_1_iii, 10);
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_EQ(checks[0].lhs, 10946);
    EXPECT_EQ(checks[0].rhs, 10946);
    // Eight-square sum: sum_{i=0}^{7} f(i)^2 = 273 = 21 f(7)
    auto sum0 = evaluate_identity(IdentityId::KA_S1, 0);
    ASSERT_EQ(sum0.size(), 1u);
    EXPECT_EQ(sum0[0].lhs, 273);
    EXPECT_EQ(sum0[0].rhs, 273);
    auto sum1 = evaluate_identity(IdentityId::KA_S1, 1);
    EXPECT_EQ(sum1[0].lhs, 714);
}

TEST(Identities, RestrictedDomainProbeIsInformational) {
    AuditReport report = audit_sequence_identity(IdentityId::P2_1_v, 0, 10);
    EXPECT_EQ(report.checked, 10);  // audited from n = 1
    EXPECT_TRUE(report.failures.empty());
    EXPECT_TRUE(report.findings.empty());
    EXPECT_NE(report.domain_description.find("informational probe at n=0"), std::string::npos);
    AuditReport from_one = audit_sequence_identity(IdentityId::P2_1_v, 1, 10);
    EXPECT_EQ(from_one.domain_description.find("probe"), std::string::npos);
}

TEST(Identities, MergedAuditJoinsClaims) {
    AuditReport merged =
        audit_sequence_identities({IdentityId::P2_1_ii, IdentityId::P2_1_i}, 0, 10);
    EXPECT_EQ(merged.claim_id, "P2.1.i+P2.1.ii");
    EXPECT_EQ(merged.checked, 22);
    EXPECT_TRUE(merged.failures.empty());
    EXPECT_THROW(audit_sequence_identities({}, 0, 10), std::invalid_argument);
    EXPECT_THROW(audit_sequence_identity(IdentityId::P2_1_i, 5, 4), std::invalid_argument);
}
