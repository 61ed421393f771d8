#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fusionkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// True when q is an integer that fits the return type.
inline bool as_long(const Rational& q, long long& out) {
    if (denominator(q) != 1) return false;
    const BigInt& n = numerator(q);
    if (n > (std::numeric_limits<long long>::max)() || n < (std::numeric_limits<long long>::min)())
        return false;
    out = n.convert_to<long long>();
    return true;
}

} // namespace fusionkit
