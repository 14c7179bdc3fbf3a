#pragma once

// 50-significant-digit decimal arithmetic for the transcendental quantities
// (natural logs) reported next to exact values.

#include "dplus/errors.hpp"
#include "dplus/rational.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>

namespace dplus {

using Decimal = boost::multiprecision::cpp_dec_float_50;

inline Decimal to_decimal(const Integer& v) { return Decimal(v.get_str()); }
inline Decimal to_decimal(const Rational& v) { return to_decimal(v.numerator()) / to_decimal(v.denominator()); }

/// ln(v) for v > 0; numerator and denominator are logged separately so huge or tiny values stay exact-scaled.
inline Decimal ln(const Rational& v) {
    if (v.sign() <= 0) throw DomainError("logarithm of a non-positive value");
    return boost::multiprecision::log(to_decimal(v.numerator())) - boost::multiprecision::log(to_decimal(v.denominator()));
}
inline Decimal ln(const Integer& v) { return ln(Rational(v)); }

/// Fixed-point-free rendering with `digits` significant digits.
inline std::string decimal_str(const Decimal& v, int digits = 20) {
    return v.str(digits, std::ios_base::fmtflags(0));
}

}  // namespace dplus
