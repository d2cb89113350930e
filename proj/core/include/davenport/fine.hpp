#pragma once

#include <string>
#include <vector>

#include "davenport/fn_table.hpp"
#include "davenport/rational.hpp"
#include "davenport/series_value.hpp"

namespace davenport {

/*
 * The continuous-but-cancelling families: cos-power and even sin-power series
 * with 1/n weights, and the chi-weighted D1/D2 series with n^{-l} weights.
 * The defining property under test is sum_{k=1}^N phi(k/N) = 0 for N coprime
 * to the modulus.
 */
struct FineSpec {
    enum class Family { cos_power, sin_even_power, d1, d2 };
    enum class Frequency { two_pi, pi_literal };

    Family family = Family::cos_power;
    FnId base_fn = FnId::moebius;
    int power = 1;          // cos_power / sin_even_power exponent
    ChiVariant chi;         // d1/d2 only (sign forced: d1 plus, d2 minus)
    Frequency frequency = Frequency::two_pi;

    std::string family_name() const;
};

struct FineReport {
    std::string family;
    std::string base_fn;
    std::int64_t N = 0;
    bool coprime_ok = true;     // gcd(N, m) = 1 where a modulus applies
    double value = 0.0;
    double bound = 0.0;
    bool bound_is_heuristic = false;
    std::string method;         // "brute" | "collapsed"
};

// Exact power-reduction coefficients: trig^power = c0 + sum_j c_j cos(j
// theta), from the binomial expansion of ((e^{i t} +- e^{-i t})/2(i))^power.
// kind = sin requires an even power (odd sin powers expand in sines).
struct PowerReduction {
    double c0 = 0.0;
    std::vector<std::pair<int, double>> harmonics; // (j, c_j), j > 0 ascending
};
PowerReduction power_reduction_coeffs(const std::string& kind, int power);

// sum_{k=1}^N cos(2 pi k n / N), exact angle reduction; equals N when N | n
// and 0 otherwise.
double ramanujan_cos_sum(std::int64_t N, std::int64_t n);

// sum_{0 < n <= N} sin^2(pi n m / N); equals 0 when N | m and N/2 otherwise.
double sin2_sum(std::int64_t N, std::int64_t m);

// Evaluates the family series at exact rational x. d1 requires f(m) = -1 and
// d2 requires f(m) = +1 (checked against the table); a base that is not
// completely multiplicative is allowed (audit data) but annotated by callers.
SeriesValue eval_phi(const FineSpec& spec, const FnTable& table, const Rational& x,
                     const TruncationSpec& t);

// sum_{k=1}^N phi(k/N). brute evaluates the N series directly; collapsed uses
// sum_k cos(2 pi k n/N) = N [N | n] to reduce d1/d2 to N sum_{N | n} chi f /
// n^l, and the power-reduction coefficients to reduce the cos/sin families to
// N sum_n f(n) w(gcd(n, N))/n. collapsed requires frequency = two_pi.
FineReport fine_sum(const FineSpec& spec, const FnTable& table, std::int64_t N,
                    const TruncationSpec& t, const std::string& method);

// max |phi(x) + phi(-x)| over the samples; for the cosine families this is
// 2 max |phi(x)|, and a value above 10x the series bound certifies that phi
// is not odd.
struct OddnessReport {
    double max_abs = 0.0;
    Rational witness{0, 1};
    double bound = 0.0;
    bool certified_not_odd = false;
    bool inconclusive = false;
};
OddnessReport oddness_probe(const FineSpec& spec, const FnTable& table,
                            const std::vector<Rational>& sample_xs, const TruncationSpec& t);

// fine_sum over a range of N, plus pass counts split by coprimality.
struct FineScan {
    std::vector<FineReport> reports;
    int coprime_total = 0, coprime_small = 0;       // |value| <= bound among coprime N
    int noncoprime_total = 0, noncoprime_small = 0;
};
FineScan fine_scan(const FineSpec& spec, const FnTable& table, std::int64_t N_lo,
                   std::int64_t N_hi, const TruncationSpec& t, const std::string& method);

} // namespace davenport
