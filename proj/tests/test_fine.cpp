#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "davenport/errors.hpp"
#include "davenport/fine.hpp"
#include "davenport/fn_table.hpp"
#include "davenport/rational.hpp"

using namespace davenport;

namespace {

TruncationSpec upto(std::int64_t n_max) {
    TruncationSpec t;
    t.n_max = n_max;
    return t;
}

FineSpec d2_spec(FnId fn, std::int64_t m, int l) {
    FineSpec s;
    s.family = FineSpec::Family::d2;
    s.base_fn = fn;
    s.chi.sign = ChiVariant::Sign::minus;
    s.chi.convention = ChiVariant::Convention::corrected;
    s.chi.m = m;
    s.chi.l = l;
    return s;
}

FineSpec d1_spec(FnId fn, std::int64_t m, int l) {
    FineSpec s = d2_spec(fn, m, l);
    s.family = FineSpec::Family::d1;
    s.chi.sign = ChiVariant::Sign::plus;
    return s;
}

FineSpec cos_spec(FnId fn, int power) {
    FineSpec s;
    s.family = FineSpec::Family::cos_power;
    s.base_fn = fn;
    s.power = power;
    return s;
}

} // namespace

TEST_CASE("power reduction: exact dyadic coefficients") {
    const PowerReduction c2 = power_reduction_coeffs("cos", 2);
    CHECK(c2.c0 == 0.5);
    REQUIRE(c2.harmonics.size() == 1);
    CHECK(c2.harmonics[0].first == 2);
    CHECK(c2.harmonics[0].second == 0.5);

    const PowerReduction s2 = power_reduction_coeffs("sin", 2);
    CHECK(s2.c0 == 0.5);
    REQUIRE(s2.harmonics.size() == 1);
    CHECK(s2.harmonics[0].first == 2);
    CHECK(s2.harmonics[0].second == -0.5);

    const PowerReduction c3 = power_reduction_coeffs("cos", 3);
    CHECK(c3.c0 == 0.0);
    REQUIRE(c3.harmonics.size() == 2);
    CHECK(c3.harmonics[0].first == 1);
    CHECK(c3.harmonics[0].second == 0.75);
    CHECK(c3.harmonics[1].first == 3);
    CHECK(c3.harmonics[1].second == 0.25);

    CHECK_THROWS_AS(power_reduction_coeffs("sin", 3), domain_error);
    CHECK_THROWS_AS(power_reduction_coeffs("cos", 0), domain_error);
    CHECK_THROWS_AS(power_reduction_coeffs("cos", 31), domain_error);
    CHECK_THROWS_AS(power_reduction_coeffs("tan", 2), domain_error);
}

TEST_CASE("power reduction: pointwise identity against libm") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    for (int m = 1; m <= 10; ++m) {
        const bool sin_ok = (m % 2 == 0);
        const PowerReduction pc = power_reduction_coeffs("cos", m);
        for (int trial = 0; trial < 10; ++trial) {
            const double th = dist(rng);
            double rec = pc.c0;
            for (const auto& [j, cj] : pc.harmonics) rec += cj * std::cos(j * th);
            CHECK(std::fabs(rec - std::pow(std::cos(th), m)) <= 1e-12);
            if (sin_ok) {
                const PowerReduction ps = power_reduction_coeffs("sin", m);
                double recs = ps.c0;
                for (const auto& [j, cj] : ps.harmonics) recs += cj * std::cos(j * th);
                CHECK(std::fabs(recs - std::pow(std::sin(th), m)) <= 1e-12);
            }
        }
        // At theta = 0 the cosine coefficients resum to 1.
        double total = pc.c0;
        for (const auto& [j, cj] : pc.harmonics) total += cj;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("full-period cosine sums detect divisibility") {
    // The divisible cases hit only residue 0, where the trig kernels return
    // exact 1 and 0, so those sums are bitwise exact.  Off the divisible case
    // the terms are irrational cosines carrying ulp-level rounding (for
    // instance cos2pi(1/3) sits one ulp off -1/2), so the cancellation to 0
    // or N/2 is only clean to a few 1e-16 per term.  1e-12 leaves three
    // orders of headroom over the worst observed while staying far below the
    // 1e-9 window the verification layer uses.
    CHECK(std::fabs(ramanujan_cos_sum(6, 4)) <= 1e-12);
    CHECK(ramanujan_cos_sum(5, 10) == 5.0);
    CHECK(ramanujan_cos_sum(1, 1) == 1.0);
    for (std::int64_t N = 1; N <= 12; ++N)
        for (std::int64_t n = 1; n <= 30; ++n) {
            const double want = (n % N == 0) ? static_cast<double>(N) : 0.0;
            CHECK(std::fabs(ramanujan_cos_sum(N, n) - want) <= 1e-12);
        }

    CHECK(sin2_sum(4, 4) == 0.0);
    CHECK(sin2_sum(4, 6) == 2.0);
    CHECK(sin2_sum(1, 3) == 0.0);
    for (std::int64_t N = 1; N <= 12; ++N)
        for (std::int64_t m = 1; m <= 30; ++m) {
            const double want =
                (m % N == 0) ? 0.0 : static_cast<double>(N) / 2.0;
            CHECK(std::fabs(sin2_sum(N, m) - want) <= 1e-12);
        }
}

TEST_CASE("family series evaluator: hand value, symmetry, periodicity") {
    const FnTable lam = sieve(FnId::liouville, 100000);
    const FineSpec d2 = d2_spec(FnId::liouville, 4, 2);

    // x = 0: every cosine is 1, so the series is sum chi lam / n^2 truncated
    // at 2: n=1 gives 1, n=2 gives -1/4; chi is 1 off multiples of 4.
    const SeriesValue at0 = eval_phi(d2, lam, Rational(0, 1), upto(2));
    CHECK(at0.value == 0.75);

    const SeriesValue a = eval_phi(d2, lam, Rational(3, 7), upto(10000));
    const SeriesValue b = eval_phi(d2, lam, Rational(10, 7), upto(10000));
    CHECK(a.value == b.value); // period 1 exactly under the residue fold
    const SeriesValue c = eval_phi(d2, lam, Rational(-3, 7), upto(10000));
    CHECK(a.value == c.value); // even in x, bitwise
}

TEST_CASE("family series evaluator rejects inconsistent specs") {
    const FnTable lam = sieve(FnId::liouville, 1000);
    CHECK_THROWS_AS(eval_phi(d1_spec(FnId::liouville, 4, 2), lam, Rational(1, 3), upto(100)),
                    spec_error); // d1 needs f(m) = -1, lam(4) = +1
    CHECK_THROWS_AS(eval_phi(d2_spec(FnId::liouville, 2, 2), lam, Rational(1, 3), upto(100)),
                    spec_error); // d2 needs f(m) = +1, lam(2) = -1
    CHECK_THROWS_AS(eval_phi(d2_spec(FnId::liouville, 1, 2), lam, Rational(1, 3), upto(100)),
                    spec_error); // modulus must exceed 1
    CHECK_THROWS_AS(eval_phi(d2_spec(FnId::liouville, 2000, 2), lam, Rational(1, 3), upto(100)),
                    range_error); // f(m) unavailable beyond the table

    FineSpec sin_odd;
    sin_odd.family = FineSpec::Family::sin_even_power;
    sin_odd.base_fn = FnId::moebius;
    sin_odd.power = 3;
    const FnTable mu = sieve(FnId::moebius, 1000);
    CHECK_THROWS_AS(eval_phi(sin_odd, mu, Rational(1, 3), upto(100)), spec_error);
}

TEST_CASE("lattice sum: brute and collapsed agree and stay within bounds") {
    const FnTable lam = sieve(FnId::liouville, 100000);
    const FineSpec d2 = d2_spec(FnId::liouville, 4, 2);

    const FineReport col = fine_sum(d2, lam, 3, upto(100000), "collapsed");
    CHECK(col.coprime_ok);
    CHECK_FALSE(col.bound_is_heuristic);
    CHECK(std::fabs(col.value) <= col.bound);

    const FineReport bru = fine_sum(d2, lam, 3, upto(10000), "brute");
    const FineReport col2 = fine_sum(d2, lam, 3, upto(10000), "collapsed");
    CHECK(std::fabs(bru.value - col2.value) <= bru.bound + col2.bound);
    CHECK(std::fabs(bru.value - col2.value) <= 1e-9);

    // Even N shares a factor with m = 4: reported, not silently skipped.
    const FineReport even = fine_sum(d2, lam, 4, upto(10000), "collapsed");
    CHECK_FALSE(even.coprime_ok);

    FineSpec lit = d2;
    lit.frequency = FineSpec::Frequency::pi_literal;
    CHECK_THROWS_AS(fine_sum(lit, lam, 3, upto(1000), "collapsed"), spec_error);
    CHECK_THROWS_AS(fine_sum(d2, lam, 3, upto(1000), "midpoint"), domain_error);
    CHECK_THROWS_AS(fine_sum(d2, lam, 0, upto(1000), "brute"), domain_error);
}

TEST_CASE("lattice sum: cos-power brute equals collapsed exactly on shared terms") {
    const FnTable mu = sieve(FnId::moebius, 10000);
    const FineSpec cp = cos_spec(FnId::moebius, 2);
    const FineReport bru = fine_sum(cp, mu, 5, upto(10000), "brute");
    const FineReport col = fine_sum(cp, mu, 5, upto(10000), "collapsed");
    CHECK(std::fabs(bru.value - col.value) <= 1e-12);
    CHECK(bru.method == "brute");
    CHECK(col.method == "collapsed");
}

TEST_CASE("oddness probe certifies the even families are not odd") {
    const FnTable lam = sieve(FnId::liouville, 100000);
    const FineSpec d2 = d2_spec(FnId::liouville, 4, 2);
    const std::vector<Rational> xs = {Rational(1, 2), Rational(1, 3), Rational(2, 5),
                                      Rational(1, 7)};
    const OddnessReport rep = oddness_probe(d2, lam, xs, upto(100000));
    CHECK(rep.certified_not_odd);
    CHECK_FALSE(rep.inconclusive);
    CHECK(rep.max_abs > 10.0 * rep.bound);

    // A table of zeros gives phi == 0, which is odd and even at once; the
    // probe must refuse to certify.
    FnTable zero;
    zero.fn_id = FnId::custom;
    zero.limit = 1000;
    zero.values.assign(1001, 0.0);
    FineSpec cz = cos_spec(FnId::custom, 2);
    const OddnessReport none = oddness_probe(cz, zero, xs, upto(1000));
    CHECK(none.inconclusive);
    CHECK_FALSE(none.certified_not_odd);
}

TEST_CASE("scan over N tallies coprime and shared-factor cases separately") {
    const FnTable lam = sieve(FnId::liouville, 100000);
    const FineSpec d2 = d2_spec(FnId::liouville, 4, 2);
    const FineScan scan = fine_scan(d2, lam, 3, 11, upto(100000), "collapsed");
    CHECK(scan.reports.size() == 9);
    CHECK(scan.coprime_total == 5);   // N = 3, 5, 7, 9, 11
    CHECK(scan.coprime_small == 5);
    CHECK(scan.noncoprime_total == 4); // N = 4, 6, 8, 10
    for (const FineReport& r : scan.reports) {
        const bool coprime = std::gcd(r.N, std::int64_t{4}) == 1;
        CHECK(r.coprime_ok == coprime);
    }
}
