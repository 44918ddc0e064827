#pragma once

// Exact big-integer engines for the Fibonacci, Lucas, Horadam, and
// generalized Fibonacci-Lucas recurrences, plus the audited catalog of
// fifteen classical identities relating them.
//
// Index conventions:
//   f(0)=0, f(1)=1;  l(0)=2, l(1)=1;  both extended to negative indices by
//   running the recurrence backwards, which forces
//     f(-k) = (-1)^(k+1) f(k)   and   l(-k) = (-1)^k l(k).
//   The Horadam sequence h(0)=p, h(1)=q is defined for n >= 0 only.
//   The generalized Fibonacci-Lucas number g(n; p,q) = p*f(n-1) + q*l(n)
//   is defined for n >= 1; indices n <= 0 are reachable only through the
//   per-call negative-index extension flag.

#include <octaudit/audit.hpp>
#include <octaudit/rational.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octaudit {

namespace detail {

inline const Integer& fib_nonneg(long long n) {
    static thread_local std::vector<Integer> cache{Integer(0), Integer(1)};
    while (static_cast<long long>(cache.size()) <= n) {
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    }
    return cache[static_cast<std::size_t>(n)];
}

inline const Integer& lucas_nonneg(long long n) {
    static thread_local std::vector<Integer> cache{Integer(2), Integer(1)};
    while (static_cast<long long>(cache.size()) <= n) {
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    }
    return cache[static_cast<std::size_t>(n)];
}

}  // namespace detail

inline Integer fib(long long n) {
    if (n >= 0) return detail::fib_nonneg(n);
    long long k = -n;
    Integer v = detail::fib_nonneg(k);
    return (k % 2 == 0) ? Integer(-v) : v;
}

inline Integer lucas(long long n) {
    if (n >= 0) return detail::lucas_nonneg(n);
    long long k = -n;
    Integer v = detail::lucas_nonneg(k);
    return (k % 2 == 0) ? v : Integer(-v);
}

namespace detail {

// (f(n), f(n+1)) by the doubling formulas
//   f(2k)   = f(k) * (2 f(k+1) - f(k))
//   f(2k+1) = f(k)^2 + f(k+1)^2
inline std::pair<Integer, Integer> fib_pair(unsigned long long n) {
    if (n == 0) return {Integer(0), Integer(1)};
    auto [a, b] = fib_pair(n >> 1);
    Integer c = a * (2 * b - a);
    Integer d = a * a + b * b;
    if (n & 1ULL) return {d, c + d};
    return {c, d};
}

}  // namespace detail

// Second, structurally independent evaluation route; must agree bit-exactly
// with fib()/lucas() (enforced by tests).
inline Integer fib_doubling(long long n) {
    if (n >= 0) return detail::fib_pair(static_cast<unsigned long long>(n)).first;
    long long k = -n;
    Integer v = detail::fib_pair(static_cast<unsigned long long>(k)).first;
    return (k % 2 == 0) ? Integer(-v) : v;
}

inline Integer lucas_doubling(long long n) {
    if (n >= 0) {
        auto [fn, fn1] = detail::fib_pair(static_cast<unsigned long long>(n));
        return 2 * fn1 - fn;  // l(n) = f(n-1) + f(n+1) = 2 f(n+1) - f(n)
    }
    long long k = -n;
    Integer v = lucas_doubling(k);
    return (k % 2 == 0) ? v : Integer(-v);
}

struct HoradamParams {
    Integer p;
    Integer q;
};

inline Integer horadam(long long n, const HoradamParams& params) {
    if (n < 0) throw std::domain_error("horadam: index must be nonnegative");
    if (n == 0) return params.p;
    Integer a = params.p, b = params.q;
    for (long long i = 1; i < n; ++i) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

// g(n; p,q) = p*f(n-1) + q*l(n).  Defined for n >= 1; n <= 0 requires the
// negative-index extension (the unique backwards continuation of the
// recurrence), enabled per call.
inline Integer gfl_number(long long n, const HoradamParams& params,
                          bool extend_negative_indices = false) {
    if (n < 1 && !extend_negative_indices) {
        throw std::domain_error(
            "gfl_number: index must be >= 1 unless the negative-index extension is enabled");
    }
    return params.p * fib(n - 1) + params.q * lucas(n);
}

// ---------------------------------------------------------------------------
// Identity catalog
// ---------------------------------------------------------------------------

enum class IdentityId {
    P2_1_i,    // f(n) + f(n+2) = l(n+1)
    P2_1_ii,   // l(n) + l(n+2) = 5 f(n+1)
    P2_1_iii,  // f(n)^2 + f(n+1)^2 = f(2n+1)
    P2_1_iv,   // l(n)^2 + l(n+1)^2 = l(2n) + l(2n+2) = 5 f(2n+1)
    P2_1_v,    // l(n)^2 = l(2n) + 2(-1)^n              (stated for n >= 1)
    P2_1_vi,   // l(2n) = 5 f(n)^2 + 2(-1)^n            (stated for n >= 1)
    P2_1_vii,  // l(n) + f(n) = 2 f(n+1)
    P2_2_i,    // f(n) + f(n+3) = 2 f(n+2)
    P2_2_ii,   // f(n) + f(n+4) = 3 f(n+2)
    P2_2_iii,  // f(n) + f(n+6) = 2 l(n+3)
    P2_2_iv,   // f(n+4) - f(n) = l(n+2)
    P2_3_i,    // l(n+4) + l(n) = 3 l(n+2)
    P2_3_ii,   // l(n+4) - l(n) = 5 f(n+2)
    P2_3_iii,  // f(n) + f(n+8) = 7 f(n+4)
    KA_S1,     // sum_{i=0}^{7} f(n+i)^2 = 21 f(2n+7)
};

inline constexpr std::array<IdentityId, 15> kAllIdentityIds = {
    IdentityId::P2_1_i,   IdentityId::P2_1_ii,  IdentityId::P2_1_iii,
    IdentityId::P2_1_iv,  IdentityId::P2_1_v,   IdentityId::P2_1_vi,
    IdentityId::P2_1_vii, IdentityId::P2_2_i,   IdentityId::P2_2_ii,
    IdentityId::P2_2_iii, IdentityId::P2_2_iv,  IdentityId::P2_3_i,
    IdentityId::P2_3_ii,  IdentityId::P2_3_iii, IdentityId::KA_S1,
};

inline const char* identity_tag(IdentityId id) {
    switch (id) {
        case IdentityId::P2_1_i: return "P2.1.i";
        case IdentityId::P2_1_ii: return "P2.1.ii";
        case IdentityId::P2_1_iii: return "P2.1.iii";
        case IdentityId::P2_1_iv: return "P2.1.iv";
        case IdentityId::P2_1_v: return "P2.1.v";
        case IdentityId::P2_1_vi: return "P2.1.vi";
        case IdentityId::P2_1_vii: return "P2.1.vii";
        case IdentityId::P2_2_i: return "P2.2.i";
        case IdentityId::P2_2_ii: return "P2.2.ii";
        case IdentityId::P2_2_iii: return "P2.2.iii";
        case IdentityId::P2_2_iv: return "P2.2.iv";
        case IdentityId::P2_3_i: return "P2.3.i";
        case IdentityId::P2_3_ii: return "P2.3.ii";
        case IdentityId::P2_3_iii: return "P2.3.iii";
        case IdentityId::KA_S1: return "KA.S1";
    }
    return "?";
}

inline const char* identity_equation(IdentityId id) {
    switch (id) {
        case IdentityId::P2_1_i: return "f(n) + f(n+2) = l(n+1)";
        case IdentityId::P2_1_ii: return "l(n) + l(n+2) = 5 f(n+1)";
        case IdentityId::P2_1_iii: return "f(n)^2 + f(n+1)^2 = f(2n+1)";
        case IdentityId::P2_1_iv: return "l(n)^2 + l(n+1)^2 = l(2n) + l(2n+2) = 5 f(2n+1)";
        case IdentityId::P2_1_v: return "l(n)^2 = l(2n) + 2(-1)^n";
        case IdentityId::P2_1_vi: return "l(2n) = 5 f(n)^2 + 2(-1)^n";
        case IdentityId::P2_1_vii: return "l(n) + f(n) = 2 f(n+1)";
        case IdentityId::P2_2_i: return "f(n) + f(n+3) = 2 f(n+2)";
        case IdentityId::P2_2_ii: return "f(n) + f(n+4) = 3 f(n+2)";
        case IdentityId::P2_2_iii: return "f(n) + f(n+6) = 2 l(n+3)";
        case IdentityId::P2_2_iv: return "f(n+4) - f(n) = l(n+2)";
        case IdentityId::P2_3_i: return "l(n+4) + l(n) = 3 l(n+2)";
        case IdentityId::P2_3_ii: return "l(n+4) - l(n) = 5 f(n+2)";
        case IdentityId::P2_3_iii: return "f(n) + f(n+8) = 7 f(n+4)";
        case IdentityId::KA_S1: return "sum_{i=0..7} f(n+i)^2 = 21 f(2n+7)";
    }
    return "?";
}

// Smallest index the identity is stated for (all hold from 0, but two are
// stated only for positive indices and are audited accordingly).
inline long long identity_min_index(IdentityId id) {
    switch (id) {
        case IdentityId::P2_1_v:
        case IdentityId::P2_1_vi:
            return 1;
        default:
            return 0;
    }
}

struct IdentityCheck {
    std::string label;
    Integer lhs;
    Integer rhs;
};

// Evaluates both sides of the identity at one index.  Multi-part identities
// yield one check per stated equality.
inline std::vector<IdentityCheck> evaluate_identity(IdentityId id, long long n) {
    auto sq = [](const Integer& v) { return v * v; };
    Integer msign = (n % 2 == 0) ? Integer(1) : Integer(-1);  // (-1)^n
    switch (id) {
        case IdentityId::P2_1_i:
            return {{"f(n)+f(n+2) = l(n+1)", fib(n) + fib(n + 2), lucas(n + 1)}};
        case IdentityId::P2_1_ii:
            return {{"l(n)+l(n+2) = 5f(n+1)", lucas(n) + lucas(n + 2), 5 * fib(n + 1)}};
        case IdentityId::P2_1_iii:
            return {{"f(n)^2+f(n+1)^2 = f(2n+1)", sq(fib(n)) + sq(fib(n + 1)), fib(2 * n + 1)}};
        case IdentityId::P2_1_iv:
            return {{"l(n)^2+l(n+1)^2 = l(2n)+l(2n+2)", sq(lucas(n)) + sq(lucas(n + 1)),
                     lucas(2 * n) + lucas(2 * n + 2)},
                    {"l(2n)+l(2n+2) = 5f(2n+1)", lucas(2 * n) + lucas(2 * n + 2),
                     5 * fib(2 * n + 1)}};
        case IdentityId::P2_1_v:
            return {{"l(n)^2 = l(2n)+2(-1)^n", sq(lucas(n)), lucas(2 * n) + 2 * msign}};
        case IdentityId::P2_1_vi:
            return {{"l(2n) = 5f(n)^2+2(-1)^n", lucas(2 * n), 5 * sq(fib(n)) + 2 * msign}};
        case IdentityId::P2_1_vii:
            return {{"l(n)+f(n) = 2f(n+1)", lucas(n) + fib(n), 2 * fib(n + 1)}};
        case IdentityId::P2_2_i:
            return {{"f(n)+f(n+3) = 2f(n+2)", fib(n) + fib(n + 3), 2 * fib(n + 2)}};
        case IdentityId::P2_2_ii:
            return {{"f(n)+f(n+4) = 3f(n+2)", fib(n) + fib(n + 4), 3 * fib(n + 2)}};
        case IdentityId::P2_2_iii:
            return {{"f(n)+f(n+6) = 2l(n+3)", fib(n) + fib(n + 6), 2 * lucas(n + 3)}};
        case IdentityId::P2_2_iv:
            return {{"f(n+4)-f(n) = l(n+2)", fib(n + 4) - fib(n), lucas(n + 2)}};
        case IdentityId::P2_3_i:
            return {{"l(n+4)+l(n) = 3l(n+2)", lucas(n + 4) + lucas(n), 3 * lucas(n + 2)}};
        case IdentityId::P2_3_ii:
            return {{"l(n+4)-l(n) = 5f(n+2)", lucas(n + 4) - lucas(n), 5 * fib(n + 2)}};
        case IdentityId::P2_3_iii:
            return {{"f(n)+f(n+8) = 7f(n+4)", fib(n) + fib(n + 8), 7 * fib(n + 4)}};
        case IdentityId::KA_S1: {
            Integer s = 0;
            for (int i = 0; i < 8; ++i) s += sq(fib(n + i));
            return {{"sum_{i=0..7} f(n+i)^2 = 21f(2n+7)", s, 21 * fib(2 * n + 7)}};
        }
    }
    throw std::logic_error("evaluate_identity: unknown identity");
}

// Audits one identity over [n_lo, n_hi] (clamped from below to the identity's
// stated domain).  When the requested range dips below the stated domain of a
// positive-index identity, the excluded index 0 is probed once and the result
// is recorded informationally in the domain description -- never as a failure
// or finding.
inline AuditReport audit_sequence_identity(IdentityId id, long long n_lo, long long n_hi) {
    if (n_lo > n_hi) throw std::invalid_argument("audit_sequence_identity: empty range");
    AuditReport report;
    report.claim_id = identity_tag(id);
    long long lo = std::max(n_lo, identity_min_index(id));
    std::ostringstream domain;
    domain << identity_equation(id) << " for n in [" << lo << ", " << n_hi << "]";
    for (long long n = lo; n <= n_hi; ++n) {
        ++report.checked;
        for (const IdentityCheck& check : evaluate_identity(id, n)) {
            if (check.lhs != check.rhs) {
                std::ostringstream in;
                in << "n=" << n << ", " << check.label;
                report.failures.push_back(
                    {in.str(), to_string(check.lhs), to_string(check.rhs)});
            }
        }
    }
    if (lo > n_lo && identity_min_index(id) == 1 && n_lo <= 0) {
        // Informational probe at n = 0 (outside the stated domain).
        bool holds = true;
        std::ostringstream probe;
        for (const IdentityCheck& check : evaluate_identity(id, 0)) {
            if (check.lhs != check.rhs) {
                holds = false;
                probe << " (" << check.label << ": " << to_string(check.lhs)
                      << " vs " << to_string(check.rhs) << ")";
            }
        }
        domain << "; stated for n >= 1, informational probe at n=0: "
               << (holds ? "holds" : std::string("does not hold") + probe.str());
    }
    report.domain_description = domain.str();
    return report;
}

// Merged audit over a set of identities; failures are ordered by
// (identity, n) via the deterministic iteration order.
inline AuditReport audit_sequence_identities(const std::set<IdentityId>& ids,
                                             long long n_lo, long long n_hi) {
    if (ids.empty()) throw std::invalid_argument("audit_sequence_identities: empty identity set");
    if (n_lo > n_hi) throw std::invalid_argument("audit_sequence_identities: empty range");
    AuditReport merged;
    std::ostringstream claim, domain;
    bool first = true;
    for (IdentityId id : kAllIdentityIds) {
        if (ids.count(id) == 0) continue;
        AuditReport one = audit_sequence_identity(id, n_lo, n_hi);
        if (!first) {
            claim << "+";
            domain << "; ";
        }
        first = false;
        claim << one.claim_id;
        domain << one.domain_description;
        merged.checked += one.checked;
        for (auto& f : one.failures) merged.failures.push_back(std::move(f));
        for (auto& f : one.findings) merged.findings.push_back(std::move(f));
    }
    merged.claim_id = claim.str();
    merged.domain_description = domain.str();
    return merged;
}

}  // namespace octaudit
