#pragma once

// Exact arithmetic in the generalized octonion algebra O(alpha, beta, gamma)
// over the rationals: an eight-dimensional non-commutative, non-associative
// algebra with basis {1, e1, ..., e7}.  The basis multiplication table is
// stored as data (sign, monomial in the three parameters, resulting basis
// index) rather than as code branches, so a golden-file test can compare it
// entry-by-entry against an independent transcription.
//
// The norm is the diagonal quadratic form
//   n(x) = x0^2 + a x1^2 + b x2^2 + ab x3^2 + g x4^2 + ag x5^2 + bg x6^2
//        + abg x7^2
// and satisfies the composition law n(xy) = n(x) n(y).

#include <octaudit/rational.hpp>

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace octaudit {

class AlgebraMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ZeroNorm : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

struct AlgebraParams {
    Rational alpha;
    Rational beta;
    Rational gamma;

    AlgebraParams(Rational a, Rational b, Rational g)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
        if (alpha == 0 || beta == 0 || gamma == 0) {
            throw std::invalid_argument("AlgebraParams: parameters must be nonzero");
        }
    }

    friend bool operator==(const AlgebraParams& x, const AlgebraParams& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma;
    }
    friend bool operator!=(const AlgebraParams& x, const AlgebraParams& y) { return !(x == y); }
};

// One basis product e_i * e_j = sign * (monomial in alpha,beta,gamma) * e_k.
// The monomial is a bitmask: bit 0 -> alpha, bit 1 -> beta, bit 2 -> gamma.
struct BasisTableEntry {
    int sign;
    unsigned monomial;
    int k;
};

inline constexpr unsigned kMonomialAlpha = 1u;
inline constexpr unsigned kMonomialBeta = 2u;
inline constexpr unsigned kMonomialGamma = 4u;

inline constexpr BasisTableEntry kBasisTable[8][8] = {
    // row 1 (scalar unit)
    {{1, 0, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 0, 4}, {1, 0, 5}, {1, 0, 6}, {1, 0, 7}},
    // row e1
    {{1, 0, 1}, {-1, 1, 0}, {1, 0, 3}, {-1, 1, 2}, {1, 0, 5}, {-1, 1, 4}, {-1, 0, 7}, {1, 1, 6}},
    // row e2
    {{1, 0, 2}, {-1, 0, 3}, {-1, 2, 0}, {1, 2, 1}, {1, 0, 6}, {1, 0, 7}, {-1, 2, 4}, {-1, 2, 5}},
    // row e3
    {{1, 0, 3}, {1, 1, 2}, {-1, 2, 1}, {-1, 3, 0}, {1, 0, 7}, {-1, 1, 6}, {1, 2, 5}, {-1, 3, 4}},
    // row e4
    {{1, 0, 4}, {-1, 0, 5}, {-1, 0, 6}, {-1, 0, 7}, {-1, 4, 0}, {1, 4, 1}, {1, 4, 2}, {1, 4, 3}},
    // row e5
    {{1, 0, 5}, {1, 1, 4}, {-1, 0, 7}, {1, 1, 6}, {-1, 4, 1}, {-1, 5, 0}, {-1, 4, 3}, {1, 5, 2}},
    // row e6
    {{1, 0, 6}, {1, 0, 7}, {1, 2, 4}, {-1, 2, 5}, {-1, 4, 2}, {1, 4, 3}, {-1, 6, 0}, {-1, 6, 1}},
    // row e7
    {{1, 0, 7}, {-1, 1, 6}, {1, 2, 5}, {1, 3, 4}, {-1, 4, 3}, {-1, 5, 2}, {1, 6, 1}, {-1, 7, 0}},
};

inline Rational monomial_value(unsigned monomial, const AlgebraParams& alg) {
    Rational v(1);
    if (monomial & kMonomialAlpha) v *= alg.alpha;
    if (monomial & kMonomialBeta) v *= alg.beta;
    if (monomial & kMonomialGamma) v *= alg.gamma;
    return v;
}

struct Octonion {
    std::array<Rational, 8> c;
    AlgebraParams algebra;

    Octonion(std::array<Rational, 8> coeffs, AlgebraParams alg)
        : c(std::move(coeffs)), algebra(std::move(alg)) {}

    static Octonion zero(const AlgebraParams& alg) { return Octonion({}, alg); }

    static Octonion scalar(const Rational& value, const AlgebraParams& alg) {
        Octonion x = zero(alg);
        x.c[0] = value;
        return x;
    }

    static Octonion one(const AlgebraParams& alg) { return scalar(Rational(1), alg); }

    static Octonion basis(int k, const AlgebraParams& alg) {
        if (k < 0 || k > 7) throw std::invalid_argument("Octonion::basis: index out of range");
        Octonion x = zero(alg);
        x.c[static_cast<std::size_t>(k)] = 1;
        return x;
    }

    bool is_zero() const {
        for (const Rational& v : c) {
            if (v != 0) return false;
        }
        return true;
    }

    friend bool operator==(const Octonion& x, const Octonion& y) {
        return x.algebra == y.algebra && x.c == y.c;
    }
    friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }
};

namespace detail {

inline void require_same_algebra(const Octonion& x, const Octonion& y, const char* op) {
    if (x.algebra != y.algebra) {
        throw AlgebraMismatch(std::string(op) + ": operands belong to different algebras");
    }
}

}  // namespace detail

inline Octonion linear_combine(const Rational& a, const Octonion& x,
                               const Rational& b, const Octonion& y) {
    detail::require_same_algebra(x, y, "linear_combine");
    Octonion out = Octonion::zero(x.algebra);
    for (std::size_t i = 0; i < 8; ++i) out.c[i] = a * x.c[i] + b * y.c[i];
    return out;
}

inline Octonion operator+(const Octonion& x, const Octonion& y) {
    return linear_combine(Rational(1), x, Rational(1), y);
}

inline Octonion operator-(const Octonion& x, const Octonion& y) {
    return linear_combine(Rational(1), x, Rational(-1), y);
}

inline Octonion operator*(const Rational& a, const Octonion& x) {
    return linear_combine(a, x, Rational(0), x);
}

inline Octonion mul(const Octonion& x, const Octonion& y) {
    detail::require_same_algebra(x, y, "mul");
    Octonion out = Octonion::zero(x.algebra);
    for (std::size_t i = 0; i < 8; ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (y.c[j] == 0) continue;
            const BasisTableEntry& e = kBasisTable[i][j];
            Rational term = x.c[i] * y.c[j] * monomial_value(e.monomial, x.algebra);
            if (e.sign < 0) term = -term;
            out.c[static_cast<std::size_t>(e.k)] += term;
        }
    }
    return out;
}

inline Octonion conj(const Octonion& x) {
    Octonion out = x;
    for (std::size_t i = 1; i < 8; ++i) out.c[i] = -out.c[i];
    return out;
}

inline Rational norm(const Octonion& x) {
    const AlgebraParams& p = x.algebra;
    const std::array<Rational, 8> diag = {
        Rational(1),          p.alpha,           p.beta,           p.alpha * p.beta,
        p.gamma,              p.alpha * p.gamma, p.beta * p.gamma, p.alpha * p.beta * p.gamma,
    };
    Rational out(0);
    for (std::size_t i = 0; i < 8; ++i) out += diag[i] * x.c[i] * x.c[i];
    return out;
}

inline Octonion inverse(const Octonion& x) {
    Rational n = norm(x);
    if (n == 0) throw ZeroNorm("inverse: element has zero norm");
    Rational inv = Rational(1) / n;
    Octonion out = conj(x);
    for (Rational& v : out.c) v *= inv;
    return out;
}

inline Rational scalar_part(const Octonion& x) { return x.c[0]; }

struct BasisProduct {
    int i;
    int j;
    Rational coefficient;
    int k;
};

// Full evaluated table in row-major order (i outer, j inner).
inline std::array<BasisProduct, 64> basis_table(const AlgebraParams& alg) {
    std::array<BasisProduct, 64> out = {};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const BasisTableEntry& e = kBasisTable[i][j];
            Rational coeff = monomial_value(e.monomial, alg);
            if (e.sign < 0) coeff = -coeff;
            out[static_cast<std::size_t>(i * 8 + j)] = {i, j, coeff, e.k};
        }
    }
    return out;
}

// Rendering like "1/2 + 2e5 - e7"; non-integer coefficients on basis terms
// are parenthesized.
inline std::string to_string(const Octonion& x) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < 8; ++i) {
        const Rational& v = x.c[i];
        if (v == 0) continue;
        Rational mag = abs(v);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << to_string(mag);
        } else {
            if (mag != 1) {
                if (denominator(mag) == 1) {
                    out << to_string(mag);
                } else {
                    out << "(" << to_string(mag) << ")";
                }
            }
            out << "e" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace octaudit
