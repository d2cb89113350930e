#include "davenport/fine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "davenport/detail/accumulate.hpp"
#include "davenport/errors.hpp"
#include "davenport/kahan.hpp"
#include "davenport/trig.hpp"

namespace davenport {
namespace {

using detail::accumulate_series;
using detail::kTrigTableCap;
using detail::ResidueStep;

double ipow(double base, std::int64_t e) {
    double p = 1.0;
    for (std::int64_t i = 0; i < e; ++i) p *= base;
    return p;
}

// The D-family sign is a structural part of the family, not a free knob:
// D1 pairs with chi^+ (and f(m) = -1), D2 with chi^- (and f(m) = +1).
ChiVariant effective_chi(const FineSpec& spec) {
    ChiVariant c = spec.chi;
    c.sign = (spec.family == FineSpec::Family::d1) ? ChiVariant::Sign::plus
                                                   : ChiVariant::Sign::minus;
    return c;
}

bool is_power_family(const FineSpec& spec) {
    return spec.family == FineSpec::Family::cos_power ||
           spec.family == FineSpec::Family::sin_even_power;
}

// |f(n)| majorant valid beyond the table, used in the rigorous D-family
// tails. The named +-1/0 functions are bounded by 1; a custom table can only
// promise what it shows, so its observed maximum stands in.
double fmax_abs(const FnTable& f) {
    switch (f.fn_id) {
        case FnId::moebius:
        case FnId::liouville:
        case FnId::unit: return 1.0;
        default: break;
    }
    double fmax = 0.0;
    for (std::int64_t n = 1; n <= f.limit; ++n) fmax = std::max(fmax, std::fabs(f.at(n)));
    return fmax;
}

void validate_spec(const FineSpec& spec, const FnTable& table) {
    if (spec.base_fn != table.fn_id)
        throw spec_error("fine: base_fn does not match the supplied table");
    switch (spec.family) {
        case FineSpec::Family::cos_power:
            if (spec.power < 1 || spec.power > 30)
                throw domain_error("fine: cos_power exponent must be in [1, 30]");
            break;
        case FineSpec::Family::sin_even_power:
            if (spec.power < 1 || spec.power > 30)
                throw domain_error("fine: sin_even_power exponent must be in [1, 30]");
            if (spec.power % 2 != 0)
                throw spec_error("fine: sin_even_power requires an even exponent");
            break;
        case FineSpec::Family::d1:
        case FineSpec::Family::d2: {
            if (spec.chi.m <= 1) throw spec_error("fine: d1/d2 require modulus m > 1");
            if (spec.chi.l <= 1) throw spec_error("fine: d1/d2 require exponent l > 1");
            if (spec.chi.m > table.limit)
                throw range_error("fine: modulus m exceeds the table limit");
            const double fm = table.at(spec.chi.m);
            if (spec.family == FineSpec::Family::d1 && std::fabs(fm + 1.0) > 1e-12)
                throw spec_error("fine: d1 requires f(m) = -1 at the modulus");
            if (spec.family == FineSpec::Family::d2 && std::fabs(fm - 1.0) > 1e-12)
                throw spec_error("fine: d2 requires f(m) = +1 at the modulus");
            break;
        }
    }
}

void check_trunc(const FnTable& f, const TruncationSpec& t) {
    if (t.n_max < 1) throw domain_error("n_max must be >= 1");
    if (t.n_max > f.limit) throw range_error("n_max exceeds table limit");
    if (t.method == SumMethod::cesaro && t.cesaro_block < 1)
        throw domain_error("cesaro_block must be >= 1");
}

std::vector<double> trig_power_table(std::int64_t q, int power, bool sine) {
    std::vector<double> tbl(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r) {
        const Rational u(r, q);
        tbl[static_cast<std::size_t>(r)] = ipow(sine ? sin2pi(u) : cos2pi(u), power);
    }
    return tbl;
}

std::vector<double> cos2pi_table(std::int64_t q) {
    std::vector<double> tbl(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r)
        tbl[static_cast<std::size_t>(r)] = cos2pi(Rational(r, q));
    return tbl;
}

// Rigorous tail for the D-families: |chi f / n^l| <= (1 + m^l) fmax / n^l
// summed over n > M via integral comparison, M >= 1.
double d_tail(const ChiVariant& chi, double fmax, double M) {
    const double ml = std::pow(static_cast<double>(chi.m), static_cast<double>(chi.l));
    const double l = static_cast<double>(chi.l);
    return (1.0 + ml) * fmax * std::pow(M, 1.0 - l) / (l - 1.0);
}

} // namespace

std::string FineSpec::family_name() const {
    switch (family) {
        case Family::cos_power: return "cos_power";
        case Family::sin_even_power: return "sin_even_power";
        case Family::d1: return "d1";
        case Family::d2: return "d2";
    }
    return "unknown";
}

PowerReduction power_reduction_coeffs(const std::string& kind, int power) {
    if (kind != "cos" && kind != "sin")
        throw domain_error("power_reduction kind must be \"cos\" or \"sin\"");
    if (power < 1 || power > 30) throw domain_error("power_reduction power must be in [1, 30]");
    const bool sine = (kind == "sin");
    if (sine && power % 2 != 0)
        throw domain_error("sin power reduction requires an even power (odd powers expand in sines)");
    /*
     * trig^m theta from the binomial theorem on the exponential forms:
     *   cos^m = 2^{-m} sum_k C(m,k) e^{i(m-2k)theta}
     *   sin^m = (2i)^{-m} sum_k C(m,k) (-1)^k e^{i(m-2k)theta}   (m even)
     * Conjugate exponents pair into cosines; each C(m,k)/2^m is an exact
     * dyadic double (C(30,15) < 2^28), so the coefficients carry no rounding.
     */
    std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
    std::int64_t binom = 1; // C(m, 0), updated exactly
    for (int k = 0; k <= power; ++k) {
        double coeff = std::ldexp(static_cast<double>(binom), -power);
        if (sine && ((power / 2 + k) % 2 != 0)) coeff = -coeff;
        c[static_cast<std::size_t>(std::abs(power - 2 * k))] += coeff;
        binom = binom * (power - k) / (k + 1);
    }
    PowerReduction out;
    out.c0 = c[0];
    for (int j = 1; j <= power; ++j)
        if (c[static_cast<std::size_t>(j)] != 0.0)
            out.harmonics.emplace_back(j, c[static_cast<std::size_t>(j)]);
    return out;
}

double ramanujan_cos_sum(std::int64_t N, std::int64_t n) {
    if (N < 1 || n < 1) throw domain_error("ramanujan_cos_sum requires N >= 1, n >= 1");
    ResidueStep rs(1, n, N); // residue of k n mod N as k steps from 1
    NeumaierSum acc;
    for (std::int64_t k = 1; k <= N; ++k, rs.advance())
        acc.add(cos2pi(Rational(rs.current(), N)));
    return acc.value();
}

double sin2_sum(std::int64_t N, std::int64_t m) {
    if (N < 1 || m < 1) throw domain_error("sin2_sum requires N >= 1, m >= 1");
    // sin^2(pi t) has period 1, so only (n m mod N)/N matters.
    ResidueStep rs(1, m, N);
    NeumaierSum acc;
    for (std::int64_t n = 1; n <= N; ++n, rs.advance()) {
        const double s = detail::sinpi_frac(rs.current(), N);
        acc.add(s * s);
    }
    return acc.value();
}

SeriesValue eval_phi(const FineSpec& spec, const FnTable& table, const Rational& x,
                     const TruncationSpec& t) {
    validate_spec(spec, table);
    check_trunc(table, t);
    // pi_literal halves the frequency: trig(pi n x) = trig(2 pi n (x/2)).
    const Rational xe = (spec.frequency == FineSpec::Frequency::two_pi) ? x : x.half();
    const std::int64_t q = xe.den;
    ResidueStep rs(1, xe.num, q);

    if (is_power_family(spec)) {
        const bool sine = (spec.family == FineSpec::Family::sin_even_power);
        // 1/n weights: conditionally convergent at best, so the driver's
        // dispersion heuristic is the only tail statement available.
        if (q <= kTrigTableCap) {
            const std::vector<double> tbl = trig_power_table(q, spec.power, sine);
            return accumulate_series(1, t, [&](std::int64_t n) {
                const double fn = table.at(n);
                const double v =
                    fn != 0.0 ? fn / static_cast<double>(n) * tbl[static_cast<std::size_t>(rs.current())]
                              : 0.0;
                rs.advance();
                return v;
            });
        }
        return accumulate_series(1, t, [&](std::int64_t n) {
            const double fn = table.at(n);
            double v = 0.0;
            if (fn != 0.0) {
                const Rational u(rs.current(), q);
                v = fn / static_cast<double>(n) * ipow(sine ? sin2pi(u) : cos2pi(u), spec.power);
            }
            rs.advance();
            return v;
        });
    }

    const ChiVariant chi = effective_chi(spec);
    const double fmax = fmax_abs(table);
    const bool tabled = q <= kTrigTableCap;
    const std::vector<double> tbl = tabled ? cos2pi_table(q) : std::vector<double>{};
    SeriesValue out = accumulate_series(1, t, [&](std::int64_t n) {
        const double fn = table.at(n);
        double v = 0.0;
        if (fn != 0.0) {
            const double cosv =
                tabled ? tbl[static_cast<std::size_t>(rs.current())] : cos2pi(Rational(rs.current(), q));
            v = chi_weight(chi, n) * fn / ipow(static_cast<double>(n), chi.l) * cosv;
        }
        rs.advance();
        return v;
    });
    // Absolutely convergent: a rigorous tail replaces the dispersion. Under
    // Cesaro averaging every partial in the window is within the tail at the
    // window's first index, hence so is their mean.
    const std::int64_t window =
        t.method == SumMethod::cesaro ? std::min(t.cesaro_block, t.n_max) : std::int64_t{0};
    const double M_eff = static_cast<double>(std::max<std::int64_t>(1, t.n_max - window + 1));
    out.tail_bound = d_tail(chi, fmax, M_eff);
    out.tail_is_heuristic = false;
    return out;
}

FineReport fine_sum(const FineSpec& spec, const FnTable& table, std::int64_t N,
                    const TruncationSpec& t, const std::string& method) {
    if (N < 1) throw domain_error("fine_sum requires N >= 1");
    validate_spec(spec, table);
    check_trunc(table, t);
    if (method != "brute" && method != "collapsed")
        throw domain_error("fine_sum method must be \"brute\" or \"collapsed\"");

    FineReport rep;
    rep.family = spec.family_name();
    rep.base_fn = fn_name(table.fn_id);
    rep.N = N;
    rep.method = method;
    rep.coprime_ok = is_power_family(spec) ? true : std::gcd(N, spec.chi.m) == 1;

    if (method == "brute") {
        NeumaierSum acc;
        double bound = 0.0;
        bool heuristic = false;
        for (std::int64_t k = 1; k <= N; ++k) {
            const SeriesValue sv = eval_phi(spec, table, Rational(k, N), t);
            acc.add(sv.value);
            bound += sv.tail_bound;
            heuristic = heuristic || sv.tail_is_heuristic;
        }
        rep.value = acc.value();
        rep.bound = bound;
        rep.bound_is_heuristic = heuristic;
        return rep;
    }

    if (spec.frequency != FineSpec::Frequency::two_pi)
        throw spec_error("fine_sum: collapsed evaluation requires the two_pi frequency");

    if (!is_power_family(spec)) {
        // sum_k cos(2 pi k n / N) = N [N | n] collapses the double sum to the
        // multiples of N; absolutely convergent with a rigorous tail.
        const ChiVariant chi = effective_chi(spec);
        const double fmax = fmax_abs(table);
        const std::int64_t J = t.n_max / N;
        NeumaierSum acc;
        for (std::int64_t j = 1; j <= J; ++j) {
            const std::int64_t n = j * N;
            const double fn = table.at(n);
            if (fn != 0.0)
                acc.add(chi_weight(chi, n) * fn / ipow(static_cast<double>(n), chi.l));
        }
        rep.value = static_cast<double>(N) * acc.value();
        // N sum_{j > J} (1 + m^l) fmax / (j N)^l, via the j-integral.
        const double l = static_cast<double>(chi.l);
        const double Nd = static_cast<double>(N);
        const double tail_j = J >= 1 ? std::pow(static_cast<double>(J), 1.0 - l) / (l - 1.0)
                                     : l / (l - 1.0); // sum_{j >= 1} j^{-l} <= 1 + 1/(l-1)
        const double ml = std::pow(static_cast<double>(chi.m), l);
        rep.bound = std::pow(Nd, 1.0 - l) * (1.0 + ml) * fmax * tail_j;
        rep.bound_is_heuristic = false;
        return rep;
    }

    // Power families collapse through the reduction coefficients: summing
    // cos^m(2 pi k n / N) over k = 1..N leaves N (c0 + sum_{(N/g) | j} c_j)
    // with g = gcd(n, N), so the k-sum becomes one weighted n-series.
    const bool sine = (spec.family == FineSpec::Family::sin_even_power);
    const PowerReduction pr = power_reduction_coeffs(sine ? "sin" : "cos", spec.power);
    std::vector<double> weight(static_cast<std::size_t>(N));
    for (std::int64_t r = 0; r < N; ++r) {
        const std::int64_t g = std::gcd(r, N); // gcd(0, N) = N
        const std::int64_t qq = N / g;
        double w = pr.c0;
        for (const auto& [j, cj] : pr.harmonics)
            if (j % qq == 0) w += cj;
        weight[static_cast<std::size_t>(r)] = w;
    }
    ResidueStep rs(1, 1, N);
    SeriesValue sv = accumulate_series(1, t, [&](std::int64_t n) {
        const double fn = table.at(n);
        const double v = fn != 0.0 ? static_cast<double>(N) * fn *
                                         weight[static_cast<std::size_t>(rs.current())] /
                                         static_cast<double>(n)
                                   : 0.0;
        rs.advance();
        return v;
    });
    rep.value = sv.value;
    rep.bound = sv.tail_bound;
    rep.bound_is_heuristic = sv.tail_is_heuristic;
    return rep;
}

OddnessReport oddness_probe(const FineSpec& spec, const FnTable& table,
                            const std::vector<Rational>& sample_xs, const TruncationSpec& t) {
    if (sample_xs.empty()) throw domain_error("oddness_probe requires at least one sample");
    OddnessReport rep;
    bool first = true;
    for (const Rational& x : sample_xs) {
        const SeriesValue a = eval_phi(spec, table, x, t);
        const SeriesValue b = eval_phi(spec, table, Rational(-x.num, x.den), t);
        const double s = std::fabs(a.value + b.value);
        if (first || s > rep.max_abs) {
            rep.max_abs = s;
            rep.witness = x;
            rep.bound = a.tail_bound + b.tail_bound;
            first = false;
        }
    }
    rep.certified_not_odd = rep.max_abs > 10.0 * rep.bound;
    rep.inconclusive = !rep.certified_not_odd;
    return rep;
}

FineScan fine_scan(const FineSpec& spec, const FnTable& table, std::int64_t N_lo,
                   std::int64_t N_hi, const TruncationSpec& t, const std::string& method) {
    if (N_lo < 1 || N_lo > N_hi) throw domain_error("fine_scan requires 1 <= N_lo <= N_hi");
    FineScan scan;
    for (std::int64_t N = N_lo; N <= N_hi; ++N) {
        FineReport rep = fine_sum(spec, table, N, t, method);
        const bool small = std::fabs(rep.value) <= std::max(rep.bound, 1e-14);
        if (rep.coprime_ok) {
            ++scan.coprime_total;
            if (small) ++scan.coprime_small;
        } else {
            ++scan.noncoprime_total;
            if (small) ++scan.noncoprime_small;
        }
        scan.reports.push_back(std::move(rep));
    }
    return scan;
}

} // namespace davenport
