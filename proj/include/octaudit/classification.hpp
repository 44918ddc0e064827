#pragma once

// Split-vs-division classification of O(alpha, beta, gamma) over the reals:
// the algebra is a division algebra exactly when all three parameters are
// positive; every other sign pattern is split.  Also provides the bounded,
// deterministic search for representations of a target value by the
// quaternion norm form x0^2 + a x1^2 + b x2^2 + ab x3^2, used to confirm
// concrete solvability claims, plus a small isotropic-vector search that
// produces explicit zero-norm witnesses in split algebras.

#include <octaudit/octonion.hpp>
#include <octaudit/rational.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

namespace octaudit {

enum class AlgebraClass { Division, Split };

inline const char* to_string(AlgebraClass c) {
    return c == AlgebraClass::Division ? "division" : "split";
}

inline AlgebraClass classify(const AlgebraParams& params) {
    if (params.alpha > 0 && params.beta > 0 && params.gamma > 0) {
        return AlgebraClass::Division;
    }
    return AlgebraClass::Split;
}

struct QuaternionVector {
    std::array<Rational, 4> x;

    friend bool operator==(const QuaternionVector& a, const QuaternionVector& b) {
        return a.x == b.x;
    }
};

inline Rational quaternion_norm(const QuaternionVector& v, const Rational& alpha,
                                const Rational& beta) {
    return v.x[0] * v.x[0] + alpha * v.x[1] * v.x[1] + beta * v.x[2] * v.x[2] +
           alpha * beta * v.x[3] * v.x[3];
}

// Height of a rational: max(|numerator|, denominator).  Height of a vector:
// the maximum over its coordinates.
inline Integer rational_height(const Rational& r) {
    Integer num = numerator(r);
    if (num < 0) num = -num;
    Integer den = denominator(r);
    return num > den ? num : den;
}

namespace detail {

// All rationals of height <= h, sorted descending, e.g. h=1 -> {1, 0, -1}.
inline std::vector<Rational> rationals_up_to_height(int h) {
    std::vector<Rational> values;
    values.emplace_back(0);
    for (int p = 1; p <= h; ++p) {
        for (int q = 1; q <= h; ++q) {
            if (std::gcd(p, q) != 1) continue;
            values.emplace_back(p, q);
            values.emplace_back(-p, q);
        }
    }
    std::sort(values.begin(), values.end(),
              [](const Rational& a, const Rational& b) { return a > b; });
    return values;
}

}  // namespace detail

// Deterministic bounded search for a vector with quaternion_norm = target.
// Enumeration order: height shells h = 1..height_bound; within a shell, the
// four coordinates run lexicographically over all values of height <= h in
// descending numeric order, skipping tuples already covered by a smaller
// shell.  The first tuple found is returned, so results are reproducible.
// An empty result is inconclusive (the search is bounded), except for
// positive-definite forms with a negative target, where it is exact.
inline std::optional<QuaternionVector> search_norm_representation(
    const Rational& alpha, const Rational& beta, const Rational& target, int height_bound) {
    if (height_bound < 1) {
        throw std::invalid_argument("search_norm_representation: height bound must be >= 1");
    }
    if (alpha == 0 || beta == 0) {
        throw std::invalid_argument("search_norm_representation: parameters must be nonzero");
    }
    // A form with positive diagonal never takes negative values.
    if (alpha > 0 && beta > 0 && target < 0) return std::nullopt;
    for (int h = 1; h <= height_bound; ++h) {
        const std::vector<Rational> values = detail::rationals_up_to_height(h);
        const std::size_t count = values.size();
        std::array<std::size_t, 4> idx = {0, 0, 0, 0};
        while (true) {
            QuaternionVector v{{values[idx[0]], values[idx[1]], values[idx[2]], values[idx[3]]}};
            Integer height = 0;
            for (const Rational& coord : v.x) height = std::max(height, rational_height(coord));
            if (height == h && quaternion_norm(v, alpha, beta) == target) return v;
            // odometer increment over the four coordinate indices
            int pos = 3;
            while (pos >= 0) {
                if (++idx[static_cast<std::size_t>(pos)] < count) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

// Deterministic search for a nonzero integer-coordinate octonion of norm
// zero.  Returns the first hit in the same shell/descending order as the
// quaternion search; split algebras with parameters in {1, -1} always have a
// witness at height 1.
inline std::optional<Octonion> find_isotropic(const AlgebraParams& alg, int height_bound) {
    if (height_bound < 1) throw std::invalid_argument("find_isotropic: height bound must be >= 1");
    for (int h = 1; h <= height_bound; ++h) {
        std::vector<Rational> values;
        for (int v = h; v >= -h; --v) values.emplace_back(v);
        const std::size_t count = values.size();
        std::array<std::size_t, 8> idx = {};
        while (true) {
            Octonion x = Octonion::zero(alg);
            Integer height = 0;
            for (std::size_t i = 0; i < 8; ++i) {
                x.c[i] = values[idx[i]];
                height = std::max(height, rational_height(x.c[i]));
            }
            if (height == h && !x.is_zero() && norm(x) == 0) return x;
            int pos = 7;
            while (pos >= 0) {
                if (++idx[static_cast<std::size_t>(pos)] < count) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace octaudit
