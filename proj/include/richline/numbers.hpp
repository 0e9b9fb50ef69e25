#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace richline {

// All integer quantities are arbitrary precision: line-count formulas involve
// N^2, which overflows 64-bit for modest N. Rationals are kept canonical
// (gcd-reduced, positive denominator) by the backend, so equality and
// ordering are by-value.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical rational num/den. The two-argument cpp_rational constructor
/// rejects negative denominators, so normalize through division.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("make_rat: zero denominator");
    }
    return Rat(num) / Rat(den);
}

inline Int int_pow(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline std::string to_decimal(const Int& v) { return v.str(); }

/// Rationals print as "p/q", or just "p" when the denominator is 1.
inline std::string to_decimal(const Rat& v) {
    if (denominator(v) == 1) {
        return numerator(v).str();
    }
    return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace richline
