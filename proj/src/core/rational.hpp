#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace skt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

// Parses "p/q", "p" or a decimal-free integer string.
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse rational number: '" + s + "'");
    }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace skt
