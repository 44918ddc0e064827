#pragma once

// Exact scalar arithmetic for the whole library: arbitrary-precision
// integers and rationals kept in canonical form (lowest terms, positive
// denominator).  Backed by Boost.Multiprecision, which maintains exactly
// that canonical form, so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace octaudit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

// Renders "p/q" in lowest terms; integral values render without "/1".
// The sign, if any, sits on the numerator.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline std::string to_string(const Integer& n) {
    return n.str();
}

// Parses "p", "-p", or "p/q".  Whitespace is not accepted; a zero
// denominator throws std::domain_error, malformed input throws
// std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
}

inline int sign(const Rational& r) {
    return r.sign();
}

inline Rational abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

}  // namespace octaudit
