#pragma once

#include <cmath>
#include <cstdint>

#include "davenport/rational.hpp"

namespace davenport {

/*
 * Trigonometry of exact rational turns. All angle reduction happens on the
 * integers: the argument arrives as a fractional part r/q in [0, 1) and is
 * folded by symmetry until the libm call sees an argument of magnitude at
 * most pi/4, where sin and cos are fully accurate. The value depends only on
 * (r, q), so repeated evaluation is bitwise reproducible.
 */
namespace detail {

// sin(pi a/b) for 0 <= a <= b, nonnegative on that range.
inline double sinpi_frac(std::int64_t a, std::int64_t b) {
    if (a == 0 || a == b) return 0.0;
    if (2 * a > b) a = b - a;               // sin(pi(1-s)) = sin(pi s)
    if (4 * a <= b)                          // s <= 1/4
        return std::sin(M_PI * (static_cast<double>(a) / static_cast<double>(b)));
    // s in (1/4, 1/2]: sin(pi s) = cos(pi(1/2 - s)), 1/2 - s = (b - 2a)/(2b)
    return std::cos(M_PI * (static_cast<double>(b - 2 * a) / static_cast<double>(2 * b)));
}

} // namespace detail

// sin(2 pi u) for u = r/q in [0, 1).
inline double sin2pi(const Rational& u) {
    const std::int64_t r = u.num, q = u.den;
    if (2 * r >= q) return -detail::sinpi_frac(2 * r - q, q); // second half turn
    return detail::sinpi_frac(2 * r, q);
}

// sin(pi u) for u = r/q in [0, 1); always >= 0 there.
inline double sinpi(const Rational& u) { return detail::sinpi_frac(u.num, u.den); }

// cos(2 pi u) = sin(2 pi (u + 1/4)), shift done exactly on 4q.
inline double cos2pi(const Rational& u) {
    const std::int64_t q4 = 4 * u.den;
    std::int64_t r4 = 4 * u.num + u.den;
    if (r4 >= q4) r4 -= q4;
    if (2 * r4 >= q4) return -detail::sinpi_frac(2 * r4 - q4, q4);
    return detail::sinpi_frac(2 * r4, q4);
}

// cos(2 pi u) - 1 = -2 sin^2(pi u): no cancellation near u = 0.
inline double cos2pi_m1(const Rational& u) {
    const double s = detail::sinpi_frac(u.num, u.den);
    return -2.0 * s * s;
}

} // namespace davenport
