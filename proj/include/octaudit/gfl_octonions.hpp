#pragma once

// Generalized Fibonacci-Lucas octonions
//   G(n; p,q) = g(n)·1 + g(n+1)·e1 + ... + g(n+7)·e7,
//   g(k) = g(k; p,q) = p·f(k-1) + q·l(k),
// their linear and multiplicative decomposition identities, and an exact
// linear-algebra audit of the module structure they generate.
//
// The audited structural claims are treated as targets, not axioms: the rank
// of the generator lattice is computed by fraction-free elimination and
// reported next to the claimed value, and multiplicative closure of the
// scaled family is decided by an exact membership oracle, with contrary
// verdicts recorded as findings rather than crashes.

#include <octaudit/audit.hpp>
#include <octaudit/octonion.hpp>
#include <octaudit/rational.hpp>
#include <octaudit/sampling.hpp>
#include <octaudit/sequences.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octaudit {

struct GFLDescriptor {
    long long n;
    Rational p;
    Rational q;
};

// Rational-weighted g(n; p,q); the integer-weighted engine lives in
// sequences.hpp.
inline Rational gfl_value(long long n, const Rational& p, const Rational& q,
                          bool extend_negative_indices = false) {
    if (n < 1 && !extend_negative_indices) {
        throw std::domain_error(
            "gfl_value: index must be >= 1 unless the negative-index extension is enabled");
    }
    return p * Rational(fib(n - 1)) + q * Rational(lucas(n));
}

inline Octonion gfl_octonion(const GFLDescriptor& d, const AlgebraParams& algebra,
                             bool extend_negative_indices = false) {
    if (d.n < 1 && !extend_negative_indices) {
        throw std::domain_error(
            "gfl_octonion: index must be >= 1 unless the negative-index extension is enabled");
    }
    Octonion x = Octonion::zero(algebra);
    for (int i = 0; i < 8; ++i) {
        x.c[static_cast<std::size_t>(i)] = gfl_value(d.n + i, d.p, d.q, true);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Decomposition identities
// ---------------------------------------------------------------------------

// a·G(n by p,q) + b·G(m by p',q') = G(n by ap,aq) + G(m by bp',bq'),
// verified coefficient-wise.
struct LinearDecomposition {
    GFLDescriptor d1;
    GFLDescriptor d2;
    Octonion lhs;
    Octonion rhs;
    bool equal;
};

inline LinearDecomposition decompose_linear(const Rational& a, const GFLDescriptor& d1,
                                            const Rational& b, const GFLDescriptor& d2,
                                            const AlgebraParams& algebra) {
    if (d1.n < 1 || d2.n < 1) throw std::domain_error("decompose_linear: indices must be >= 1");
    GFLDescriptor r1{d1.n, a * d1.p, a * d1.q};
    GFLDescriptor r2{d2.n, b * d2.p, b * d2.q};
    Octonion lhs =
        linear_combine(a, gfl_octonion(d1, algebra), b, gfl_octonion(d2, algebra));
    Octonion rhs = gfl_octonion(r1, algebra) + gfl_octonion(r2, algebra);
    bool equal = (lhs == rhs);
    return {r1, r2, lhs, rhs, equal};
}

// One right-hand term of the product decomposition: scale * g(index; p,q).
struct ScaledGFLTerm {
    Integer scale;
    long long index;
    Integer p;
    Integer q;

    Integer value() const {
        return scale * (p * fib(index - 1) + q * lucas(index));
    }
};

// 5g(n; p,q) · 5g(m; p',q') written as the six-term sum
//   5g(m+n-2; 5p'q, pp') + 5g(m+n-1; 5p'q, 0)
// + 5g(n-m;   5p'q(-1)^m, pp'(-1)^m) + 5g(n-m+1; 5p'q(-1)^m, 0)
// + 5g(m+n;   5pq', 5qq') + 5g(n-m;  5pq'(-1)^m, 5qq'(-1)^m),
// with both sides evaluated exactly.
struct ProductDecomposition {
    std::array<ScaledGFLTerm, 6> terms;
    Integer lhs;
    Integer rhs;
    bool equal;
};

inline ProductDecomposition product_decompose_numbers(long long n, long long m,
                                                      const HoradamParams& pq,
                                                      const HoradamParams& pq2,
                                                      bool extend_negative_indices = false) {
    if (!extend_negative_indices && !(n > m && m >= 1)) {
        throw std::domain_error(
            "product_decompose_numbers: requires n > m >= 1 so every derived index is >= 1; "
            "other index pairs need the negative-index extension");
    }
    const Integer& p = pq.p;
    const Integer& q = pq.q;
    const Integer& p2 = pq2.p;
    const Integer& q2 = pq2.q;
    Integer msign = (m % 2 == 0) ? Integer(1) : Integer(-1);  // (-1)^m

    ProductDecomposition out{
        {{
            {Integer(5), m + n - 2, 5 * p2 * q, p * p2},
            {Integer(5), m + n - 1, 5 * p2 * q, Integer(0)},
            {Integer(5), n - m, 5 * p2 * q * msign, p * p2 * msign},
            {Integer(5), n - m + 1, 5 * p2 * q * msign, Integer(0)},
            {Integer(5), m + n, 5 * p * q2, 5 * q * q2},
            {Integer(5), n - m, 5 * p * q2 * msign, 5 * q * q2 * msign},
        }},
        Integer(0),
        Integer(0),
        false,
    };
    out.lhs = 25 * gfl_number(n, pq, true) * gfl_number(m, pq2, true);
    for (const ScaledGFLTerm& t : out.terms) out.rhs += t.value();
    out.equal = (out.lhs == out.rhs);
    return out;
}

// ---------------------------------------------------------------------------
// Generator lattice and exact membership
// ---------------------------------------------------------------------------

// Rows are the coefficient vectors of G(n; 1,0) and G(n; 0,1) for n = 1..N,
// in that interleaved order.  Every row is a window of eight consecutive
// terms of a Fibonacci-type sequence, so row[i] = row[i-1] + row[i-2] for
// i = 2..7 -- which confines all rows to a 2-dimensional subspace.
struct GeneratorMatrix {
    std::vector<std::array<Rational, 8>> rows;
};

inline GeneratorMatrix generator_matrix(long long N) {
    if (N < 1) throw std::invalid_argument("generator_matrix: N must be >= 1");
    GeneratorMatrix gm;
    AlgebraParams any(1, 1, 1);  // coefficients do not depend on the algebra
    for (long long n = 1; n <= N; ++n) {
        gm.rows.push_back(gfl_octonion({n, Rational(1), Rational(0)}, any).c);
        gm.rows.push_back(gfl_octonion({n, Rational(0), Rational(1)}, any).c);
    }
    return gm;
}

// Exact rank via Bareiss fraction-free elimination on the integer matrix
// obtained by clearing each row's denominators.
inline int lattice_rank(const GeneratorMatrix& gm) {
    if (gm.rows.empty()) throw std::invalid_argument("lattice_rank: empty matrix");
    std::vector<std::array<Integer, 8>> m;
    for (const auto& row : gm.rows) {
        Integer lcm(1);
        for (const Rational& v : row) {
            Integer den = denominator(v);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::array<Integer, 8> cleared;
        for (std::size_t j = 0; j < 8; ++j) {
            cleared[j] = numerator(row[j]) * (lcm / denominator(row[j]));
        }
        m.push_back(std::move(cleared));
    }
    const std::size_t nrows = m.size();
    std::size_t r = 0;  // next pivot row
    Integer prev(1);
    for (std::size_t col = 0; col < 8 && r < nrows; ++col) {
        std::size_t pivot = r;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < 8; ++j) {
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

struct MembershipResult {
    bool member = false;
    // When member: coordinates over the row list (unit row last if included),
    // recombining exactly to the query vector.
    std::vector<Rational> coordinates;
    // When not member: the nonzero residual left after eliminating the query
    // against the row space.
    std::array<Rational, 8> residual = {};
};

namespace detail {

// Reduced row echelon form with a transform log: reduced[i] equals
// sum_j transform[i][j] * original_row[j].  Pivoting is deterministic:
// columns left to right, first remaining row with a nonzero entry.
struct RrefWithTransform {
    std::vector<std::array<Rational, 8>> reduced;
    std::vector<std::vector<Rational>> transform;
    std::vector<std::size_t> pivot_cols;
};

inline RrefWithTransform rref_with_transform(const std::vector<std::array<Rational, 8>>& rows) {
    RrefWithTransform out;
    std::vector<std::array<Rational, 8>> work = rows;
    std::vector<std::vector<Rational>> trans(rows.size(),
                                             std::vector<Rational>(rows.size(), Rational(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) trans[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t col = 0; col < 8 && r < work.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.size() && work[pivot][col] == 0) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[pivot], work[r]);
        std::swap(trans[pivot], trans[r]);
        Rational inv = Rational(1) / work[r][col];
        for (std::size_t j = 0; j < 8; ++j) work[r][j] *= inv;
        for (Rational& t : trans[r]) t *= inv;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == r || work[i][col] == 0) continue;
            Rational factor = work[i][col];
            for (std::size_t j = 0; j < 8; ++j) work[i][j] -= factor * work[r][j];
            for (std::size_t j = 0; j < trans[i].size(); ++j) {
                trans[i][j] -= factor * trans[r][j];
            }
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    work.resize(r);
    trans.resize(r);
    out.reduced = std::move(work);
    out.transform = std::move(trans);
    return out;
}

}  // namespace detail

inline MembershipResult span_membership(const Octonion& x, const GeneratorMatrix& basis,
                                        bool include_unit) {
    std::vector<std::array<Rational, 8>> rows = basis.rows;
    if (include_unit) {
        std::array<Rational, 8> unit = {};
        unit[0] = 1;
        rows.push_back(unit);
    }
    detail::RrefWithTransform rref = detail::rref_with_transform(rows);

    MembershipResult result;
    result.coordinates.assign(rows.size(), Rational(0));
    std::array<Rational, 8> residual = x.c;
    for (std::size_t i = 0; i < rref.reduced.size(); ++i) {
        std::size_t col = rref.pivot_cols[i];
        Rational coeff = residual[col];  // pivots are normalized to 1
        if (coeff == 0) continue;
        for (std::size_t j = 0; j < 8; ++j) residual[j] -= coeff * rref.reduced[i][j];
        for (std::size_t j = 0; j < rows.size(); ++j) {
            result.coordinates[j] += coeff * rref.transform[i][j];
        }
    }
    result.member = true;
    for (const Rational& v : residual) {
        if (v != 0) {
            result.member = false;
            break;
        }
    }
    if (!result.member) {
        result.coordinates.clear();
        result.residual = residual;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

// G(n; p,q) = 0 exactly when p = q = 0, over the grid
// (n, p, q) in [1, n_max] x [0, pq_max]^2.
// Point check for "G(n; p,q) = 0 iff p = q = 0" with nonnegative weights:
// true when the evaluated octonion's zero-ness agrees with the criterion.
inline bool is_zero_characterization(long long n, long long p, long long q) {
    if (n < 1) throw std::domain_error("is_zero_characterization: index must be >= 1");
    if (p < 0 || q < 0) {
        throw std::domain_error("is_zero_characterization: weights must be nonnegative");
    }
    AlgebraParams alg(1, 1, 1);
    bool zero = gfl_octonion({n, Rational(p), Rational(q)}, alg).is_zero();
    return zero == (p == 0 && q == 0);
}

inline AuditReport audit_zero_characterization(long long n_max, long long pq_max) {
    if (n_max < 1 || pq_max < 0) {
        throw std::invalid_argument("audit_zero_characterization: bad grid bounds");
    }
    AuditReport report;
    report.claim_id = "R4.1";
    std::ostringstream domain;
    domain << "G(n; p,q) = 0 iff p = q = 0, over (n, p, q) in [1, " << n_max << "] x [0, "
           << pq_max << "]^2";
    report.domain_description = domain.str();
    for (long long n = 1; n <= n_max; ++n) {
        for (long long p = 0; p <= pq_max; ++p) {
            for (long long q = 0; q <= pq_max; ++q) {
                ++report.checked;
                if (!is_zero_characterization(n, p, q)) {
                    std::ostringstream in;
                    in << "n=" << n << ", p=" << p << ", q=" << q;
                    report.failures.push_back(
                        {in.str(), "zero-ness disagrees with the criterion", "agreement"});
                }
            }
        }
    }
    return report;
}

// Linear decomposition identity on pseudorandom integer tuples.
inline AuditReport audit_linear_decomposition(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("audit_linear_decomposition: trials must be >= 1");
    AuditReport report;
    report.claim_id = "R4.2.i";
    std::ostringstream domain;
    domain << "a·G(n; p,q) + b·G(m; p',q') = G(n; ap,aq) + G(m; bp',bq') for " << trials
           << " seeded random integer tuples (seed " << seed << ")";
    report.domain_description = domain.str();
    Sampler sampler(seed);
    AlgebraParams alg(1, 1, 1);
    for (int t = 0; t < trials; ++t) {
        Rational a(sampler.range(-9, 9)), b(sampler.range(-9, 9));
        GFLDescriptor d1{sampler.range(1, 30), Rational(sampler.range(-9, 9)),
                         Rational(sampler.range(-9, 9))};
        GFLDescriptor d2{sampler.range(1, 30), Rational(sampler.range(-9, 9)),
                         Rational(sampler.range(-9, 9))};
        ++report.checked;
        LinearDecomposition result = decompose_linear(a, d1, b, d2, alg);
        if (!result.equal) {
            std::ostringstream in;
            in << "a=" << to_string(a) << ", b=" << to_string(b) << ", n=" << d1.n
               << ", p=" << to_string(d1.p) << ", q=" << to_string(d1.q) << ", m=" << d2.n
               << ", p'=" << to_string(d2.p) << ", q'=" << to_string(d2.q);
            report.failures.push_back(
                {in.str(), to_string(result.lhs), to_string(result.rhs)});
        }
    }
    return report;
}

// Product decomposition identity over the full grid 1 <= m < n <= n_max and
// a fixed 16-point (p,q) x (p',q') grid; optionally also over the n <= m
// region, which is only defined under the negative-index extension.
inline AuditReport audit_product_decomposition(long long n_max, bool include_extension_region) {
    if (n_max < 2) throw std::invalid_argument("audit_product_decomposition: n_max must be >= 2");
    AuditReport report;
    report.claim_id = "R4.2.ii";
    const std::vector<HoradamParams> grid = {
        {Integer(1), Integer(0)},
        {Integer(0), Integer(1)},
        {Integer(1), Integer(1)},
        {Integer(2), Integer(-1)},
    };
    std::ostringstream domain;
    domain << "25·g(n; p,q)·g(m; p',q') equals the six-term decomposition for 1 <= m < n <= "
           << n_max << " over a 16-point (p,q,p',q') grid";
    for (long long n = 2; n <= n_max; ++n) {
        for (long long m = 1; m < n; ++m) {
            for (const HoradamParams& pq : grid) {
                for (const HoradamParams& pq2 : grid) {
                    ++report.checked;
                    ProductDecomposition d = product_decompose_numbers(n, m, pq, pq2);
                    if (!d.equal) {
                        std::ostringstream in;
                        in << "n=" << n << ", m=" << m << ", p=" << to_string(pq.p)
                           << ", q=" << to_string(pq.q) << ", p'=" << to_string(pq2.p)
                           << ", q'=" << to_string(pq2.q);
                        report.failures.push_back({in.str(), to_string(d.lhs), to_string(d.rhs)});
                    }
                }
            }
        }
    }
    if (include_extension_region) {
        long long ext_max = std::min<long long>(n_max, 12);
        long long ext_checked = 0;
        for (long long n = 1; n <= ext_max; ++n) {
            for (long long m = n; m <= ext_max; ++m) {  // n <= m: derived indices drop below 1
                for (const HoradamParams& pq : grid) {
                    for (const HoradamParams& pq2 : grid) {
                        ++report.checked;
                        ++ext_checked;
                        ProductDecomposition d = product_decompose_numbers(n, m, pq, pq2, true);
                        if (!d.equal) {
                            std::ostringstream in;
                            in << "extension region: n=" << n << ", m=" << m
                               << ", p=" << to_string(pq.p) << ", q=" << to_string(pq.q)
                               << ", p'=" << to_string(pq2.p) << ", q'=" << to_string(pq2.q);
                            report.failures.push_back(
                                {in.str(), to_string(d.lhs), to_string(d.rhs)});
                        }
                    }
                }
            }
        }
        domain << "; plus the negative-index extension region n <= m <= " << ext_max << " ("
               << ext_checked << " instances)";
    }
    report.domain_description = domain.str();
    return report;
}

// The deterministic sample stream used by the structural audit below, exposed
// so an independent checker can re-derive identical samples from the seed.
inline std::vector<std::pair<GFLDescriptor, GFLDescriptor>> theorem41_samples(
    long long N, int trials, std::uint64_t seed) {
    Sampler sampler(seed);
    std::vector<std::pair<GFLDescriptor, GFLDescriptor>> samples;
    samples.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        auto draw = [&]() {
            while (true) {
                GFLDescriptor d{sampler.range(1, N), Rational(sampler.range(-3, 3)),
                                Rational(sampler.range(-3, 3))};
                if (d.p != 0 || d.q != 0) return d;
            }
        };
        GFLDescriptor d1 = draw();
        GFLDescriptor d2 = draw();
        samples.emplace_back(d1, d2);
    }
    return samples;
}

// Structural audit of the generated module:
//   (1) additive closure: random integer combinations of the generators stay
//       in the generator span (hard requirement);
//   (2) the generator-lattice rank is computed exactly and compared against
//       the claimed rank of 8, any difference recorded as a finding;
//   (3) multiplicative closure: products of scaled generators 5G·5G' are
//       tested for membership in span(generators + unit) and the verdict is
//       recorded, a contrary verdict being a finding;
//   (4) every product coefficient must recombine exactly from the six-term
//       scalar decomposition pushed through the bilinear table expansion
//       (hard requirement).
inline AuditReport audit_theorem41(long long N, int trials, const AlgebraParams& algebra,
                                   std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("audit_theorem41: N must be >= 1");
    if (trials < 1) throw std::invalid_argument("audit_theorem41: trials must be >= 1");
    AuditReport report;
    report.claim_id = "T4.1";
    GeneratorMatrix gm = generator_matrix(N);

    // (1) additive closure
    Sampler combo_sampler(seed ^ 0x9e3779b97f4a7c15ULL);
    long long additive_failures = 0;
    for (int t = 0; t < trials; ++t) {
        std::array<Rational, 8> combo = {};
        for (const auto& row : gm.rows) {
            Rational weight(combo_sampler.range(-5, 5));
            for (std::size_t j = 0; j < 8; ++j) combo[j] += weight * row[j];
        }
        ++report.checked;
        Octonion x(combo, algebra);
        if (!span_membership(x, gm, false).member) {
            ++additive_failures;
            std::ostringstream in;
            in << "additive-closure trial " << t;
            report.failures.push_back({in.str(), "combination outside generator span",
                                       "member of generator span"});
        }
    }

    // (2) rank
    int computed_rank = lattice_rank(gm);
    ++report.checked;
    if (computed_rank != 8) {
        std::ostringstream in, note;
        in << "generator matrix for n in [1, " << N << "] (" << gm.rows.size() << " rows)";
        note << "claimed: free module of rank 8 on {1, e1, ..., e7}; exact fraction-free "
                "elimination gives rank "
             << computed_rank
             << " -- every generator row satisfies the window recurrence row[i] = row[i-1] + "
                "row[i-2], confining the whole family to a 2-dimensional subspace";
        report.findings.push_back({in.str(), "rank 8", "rank " + std::to_string(computed_rank),
                                   note.str()});
    }

    // (3) multiplicative closure + (4) coefficient-wise decomposition
    auto samples = theorem41_samples(N, trials, seed);
    long long members = 0, non_members = 0;
    std::optional<std::string> first_non_member;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [d1, d2] = samples[s];
        Octonion x = Rational(5) * gfl_octonion(d1, algebra);
        Octonion y = Rational(5) * gfl_octonion(d2, algebra);
        Octonion product = mul(x, y);

        ++report.checked;
        if (span_membership(product, gm, true).member) {
            ++members;
        } else {
            ++non_members;
            if (!first_non_member) {
                std::ostringstream in;
                in << "5G(" << d1.n << "; " << to_string(d1.p) << "," << to_string(d1.q)
                   << ") * 5G(" << d2.n << "; " << to_string(d2.p) << "," << to_string(d2.q)
                   << ")";
                first_non_member = in.str();
            }
        }

        // (4) recombine each product coefficient from scalar decompositions.
        ++report.checked;
        HoradamParams pq{numerator(d1.p), numerator(d1.q)};
        HoradamParams pq2{numerator(d2.p), numerator(d2.q)};
        std::array<Rational, 8> recombined = {};
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                const BasisTableEntry& e = kBasisTable[i][j];
                ProductDecomposition dec =
                    product_decompose_numbers(d1.n + i, d2.n + j, pq, pq2, true);
                if (!dec.equal) {
                    std::ostringstream in;
                    in << "sample " << s << ": scalar decomposition at indices (" << d1.n + i
                       << ", " << d2.n + j << ")";
                    report.failures.push_back(
                        {in.str(), to_string(dec.lhs), to_string(dec.rhs)});
                }
                Rational term = Rational(dec.rhs) * monomial_value(e.monomial, algebra);
                if (e.sign < 0) term = -term;
                recombined[static_cast<std::size_t>(e.k)] += term;
            }
        }
        if (recombined != product.c) {
            std::ostringstream in;
            in << "sample " << s << ": product coefficients vs recombined decomposition";
            report.failures.push_back({in.str(), to_string(Octonion(recombined, algebra)),
                                       to_string(product)});
        }
    }
    if (non_members > 0) {
        std::ostringstream note;
        note << "claimed: the scaled family with the unit adjoined is closed under "
                "multiplication; the exact membership oracle rejects "
             << non_members << " of " << samples.size()
             << " sampled products (first: " << *first_non_member << ")";
        report.findings.push_back({*first_non_member,
                                   "product lies in span(generators + unit)",
                                   "product outside span(generators + unit)", note.str()});
    }

    std::ostringstream domain;
    domain << "generators G(n; 1,0), G(n; 0,1) for n in [1, " << N << "] over O("
           << to_string(algebra.alpha) << ", " << to_string(algebra.beta) << ", "
           << to_string(algebra.gamma) << "); " << trials
           << " additive-closure trials (failures: " << additive_failures << "); computed rank "
           << computed_rank << " vs claimed 8; multiplicative closure on " << samples.size()
           << " seeded samples (seed " << seed << "): " << members << " member, " << non_members
           << " not member; coefficient-wise decomposition re-verified per sample";
    report.domain_description = domain.str();
    return report;
}

}  // namespace octaudit
