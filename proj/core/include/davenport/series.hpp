#pragma once

#include "davenport/fn_table.hpp"
#include "davenport/rational.hpp"
#include "davenport/series_value.hpp"

namespace davenport {

/*
 * Truncated series evaluators. Conventions shared by all of them:
 *  - x is an exact rational p/q; every fractional part and trig argument is
 *    reduced by integer arithmetic before a libm call (see trig.hpp).
 *  - terms are accumulated by compensated summation in ascending n, so each
 *    value is bitwise reproducible.
 *  - tail bounds are rigorous where the series is absolutely convergent, with
 *    the |f| / |F| majorant chosen per function:
 *      von_mangoldt: |f(n)| <= log n, F(n) = log n;
 *      moebius, liouville: |f| <= 1, |F| <= 1;
 *      unit: |F(n)| = d(n) <= 2 sqrt(n) (divisors pair across sqrt(n));
 *      custom: max |f| over the table.
 *    Conditionally convergent 1/n series get a dispersion estimate instead,
 *    flagged heuristic.
 */

// (1/2) sum_{x < n <= n_max} f(n)/n^2 ({n/x} - {n/x}^2).
// {n/x} is exact: for x = p/q it equals ((n q) mod p)/p. Tail bound
// (1/8) B(n_max) with B the per-function majorant of sum_{n>n_max} |f(n)|/n^2
// (the 1/8 is (1/2) max{u - u^2} = 1/8).
SeriesValue theorem11_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t);

// Exact closed form of int_0^x S(y)/y^2 dy = sum_{n <= x} f(n)(1/n - 1/x)
// (step function integrated directly; the 1/(2x) factor is the caller's).
double theorem11_integral_term(const FnTable& f, const Rational& x);

// (1/(2 pi^2)) sum_{n <= n_max} F(n)/n^2 (cos(2 pi n / x) - 1), with
// cos - 1 = -2 sin^2 computed on the exact residue (n q mod p)/p. Tail bound
// (1/pi^2) per-function majorant of sum_{n>n_max} |F(n)|/n^2.
SeriesValue cosine_term(const FnTable& F, const Rational& x, const TruncationSpec& t);

// -(1/pi) sum F(n)/n sin(2 pi n x). Rigorous zero tail only when F vanishes
// beyond some point within the table (e.g. F = delta_1); otherwise heuristic.
SeriesValue davenport_sine(const FnTable& F, const Rational& x, const TruncationSpec& t);

// sum f(n)/n ({n x} - 1/2); conditionally convergent, cesaro recommended.
SeriesValue frac_series_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t);

// sum f(n)/n ((1/(2 n x))({n x}^2 + floor(n x)) - 1/2), evaluated in the
// cancellation-free equivalent form sum f(n) ({n x}^2 - {n x}) / (2 n^2 x)
// (substitute floor(n x) = n x - {n x}). Tail bound B(n_max)/(8x).
SeriesValue theorem12_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t);

// (1/(2 x pi^2)) sum F(n)/n^2 (cos(2 pi n x) - 1); tail (1/(x pi^2)) majorant.
SeriesValue theorem12_rhs(const FnTable& F, const Rational& x, const TruncationSpec& t);

// 2 sum c_n sin(pi n x) cos(pi n x) with c_n = -F(n)/(n pi), evaluated
// literally as separate sine and cosine factors (no double-angle collapse).
SeriesValue sincos_series(const FnTable& F, const Rational& x, const TruncationSpec& t);

} // namespace davenport
