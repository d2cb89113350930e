#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <cmath>

#include "davenport/errors.hpp"

namespace davenport {

/*
 * Exact rational arguments. Series arguments are kept as reduced p/q so that
 * fractional parts {n x} are computed by integer arithmetic: for x = p/q,
 *   {n x} = ((n p) mod q) / q
 * exactly, with the product taken in 128-bit. This removes the dominant error
 * source of these series, which live on the sawtooth discontinuities.
 */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0, gcd(|num|, den) = 1

    constexpr Rational() = default;
    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
    Rational reciprocal() const {
        if (num == 0) throw domain_error("reciprocal of zero");
        return Rational(den, num);
    }
    // Exact halving without overflow on the common den < 2^62 case.
    Rational half() const {
        if (num % 2 == 0) return Rational(num / 2, den);
        if (den > (std::int64_t{1} << 62)) throw range_error("denominator overflow in half()");
        return Rational(num, 2 * den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Rational& a, std::int64_t k) {
        return static_cast<__int128>(a.num) < static_cast<__int128>(k) * a.den;
    }
    friend bool operator>(const Rational& a, std::int64_t k) {
        return static_cast<__int128>(a.num) > static_cast<__int128>(k) * a.den;
    }
    friend bool operator>=(const Rational& a, std::int64_t k) { return !(a < k); }
    friend bool operator<=(const Rational& a, std::int64_t k) { return !(a > k); }

    // floor(p/q) for any sign of p.
    std::int64_t floor() const {
        std::int64_t q = num / den, r = num % den;
        return (r < 0) ? q - 1 : q;
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// {n x} for x = p/q, exact: ((n p) mod q)/q, representative in [0, 1).
// Negative x folds into [0, q) so the result stays a true fractional part.
inline Rational frac_part(std::int64_t n, const Rational& x) {
    if (n < 1) throw domain_error("frac_part requires n >= 1");
    const __int128 prod = static_cast<__int128>(n) * x.num;
    std::int64_t r = static_cast<std::int64_t>(prod % x.den);
    if (r < 0) r += x.den;
    return Rational(r, x.den);
}

// Parses "p/q", an integer, or a decimal (converted with a power-of-ten
// denominator, so "2.5" means exactly 25/10).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational");
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            const std::int64_t p = std::stoll(s.substr(0, slash));
            const std::int64_t q = std::stoll(s.substr(slash + 1));
            if (q == 0) throw parse_error("zero denominator in '" + s + "'");
            return Rational(p, q);
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(s), 1);
        const std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.size() > 17) throw parse_error("too many decimal digits in '" + s + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
        const bool neg = !ip.empty() && ip[0] == '-';
        const std::int64_t whole = ip.empty() || ip == "-" ? 0 : std::stoll(ip);
        const std::int64_t frac = fp.empty() ? 0 : std::stoll(fp);
        const __int128 num = static_cast<__int128>(whole) * den + (neg ? -frac : frac);
        if (num > INT64_MAX || num < INT64_MIN) throw parse_error("rational overflow in '" + s + "'");
        return Rational(static_cast<std::int64_t>(num), den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + s + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range '" + s + "'");
    }
}

} // namespace davenport
