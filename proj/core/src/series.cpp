#include "davenport/series.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "davenport/detail/accumulate.hpp"
#include "davenport/kahan.hpp"
#include "davenport/trig.hpp"

namespace davenport {
namespace {

// Majorant of sum_{n > M} |f(n)| / n^2 per function class, by integral
// comparison. unit tables only occur as divisor sums (F = d), where
// d(n) <= 2 sqrt(n) gives sum_{n>M} d(n)/n^2 <= 4/sqrt(M).
double tail_over_n2(const FnTable& f, std::int64_t n_max) {
    const double M = static_cast<double>(n_max);
    switch (f.fn_id) {
        case FnId::von_mangoldt: return (std::log(M) + 1.0) / M;
        case FnId::moebius:
        case FnId::liouville: return 1.0 / M;
        case FnId::unit: return f.is_divisor_sum ? 4.0 / std::sqrt(M) : 1.0 / M;
        case FnId::custom: {
            double fmax = 0.0;
            for (std::int64_t n = 1; n <= f.limit; ++n) fmax = std::max(fmax, std::fabs(f.at(n)));
            return fmax / M;
        }
    }
    return 0.0;
}

void check_trunc(const FnTable& f, const TruncationSpec& t) {
    if (t.n_max < 1) throw domain_error("n_max must be >= 1");
    if (t.n_max > f.limit) throw range_error("n_max exceeds table limit");
    if (t.method == SumMethod::cesaro && t.cesaro_block < 1)
        throw domain_error("cesaro_block must be >= 1");
}

using detail::accumulate_series;
using detail::cos2pi_m1_table;
using detail::kTrigTableCap;
using detail::ResidueStep;

} // namespace

SeriesValue theorem11_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t) {
    if (!(x > 1)) throw domain_error("theorem11_lhs requires x > 1");
    check_trunc(f, t);
    const std::int64_t p = x.num, q = x.den;
    const std::int64_t n_lo = x.floor() + 1; // n > x
    // {n/x} = r/p with r = (n q) mod p; u - u^2 = r (p - r) / p^2 exactly.
    ResidueStep rs(n_lo, q, p);
    const double p2 = static_cast<double>(p) * static_cast<double>(p);
    NeumaierSum acc;
    for (std::int64_t n = n_lo; n <= t.n_max; ++n, rs.advance()) {
        const double fn = f.at(n);
        if (fn != 0.0) {
            const double r = static_cast<double>(rs.current());
            const double w = r * (static_cast<double>(p) - r) / p2;
            const double nn = static_cast<double>(n);
            acc.add(fn / (nn * nn) * w);
        }
    }
    const double value = 0.5 * acc.value();
    return SeriesValue{value, 0.125 * tail_over_n2(f, t.n_max), false, t.n_max, SumMethod::direct};
}

double theorem11_integral_term(const FnTable& f, const Rational& x) {
    if (x < 1) return 0.0; // S vanishes below 1
    const std::int64_t nx = std::min<std::int64_t>(x.floor(), f.limit);
    if (x.floor() > f.limit) throw range_error("x exceeds table limit");
    const double inv_x = static_cast<double>(x.den) / static_cast<double>(x.num);
    NeumaierSum acc;
    for (std::int64_t n = 1; n <= nx; ++n) {
        const double fn = f.at(n);
        if (fn != 0.0) acc.add(fn * (1.0 / static_cast<double>(n) - inv_x));
    }
    return acc.value();
}

SeriesValue cosine_term(const FnTable& F, const Rational& x, const TruncationSpec& t) {
    if (!(x > 1)) throw domain_error("cosine_term requires x > 1");
    check_trunc(F, t);
    const std::int64_t p = x.num, q = x.den;
    ResidueStep rs(1, q, p);
    const double inv_2pi2 = 1.0 / (2.0 * M_PI * M_PI);
    NeumaierSum acc;
    if (p <= kTrigTableCap) {
        const std::vector<double> tbl = cos2pi_m1_table(p);
        for (std::int64_t n = 1; n <= t.n_max; ++n, rs.advance()) {
            const double Fn = F.at(n);
            if (Fn != 0.0) {
                const double nn = static_cast<double>(n);
                acc.add(Fn / (nn * nn) * tbl[static_cast<std::size_t>(rs.current())]);
            }
        }
    } else {
        for (std::int64_t n = 1; n <= t.n_max; ++n, rs.advance()) {
            const double Fn = F.at(n);
            if (Fn != 0.0) {
                const double nn = static_cast<double>(n);
                const double s = detail::sinpi_frac(rs.current(), p);
                acc.add(Fn / (nn * nn) * (-2.0 * s * s));
            }
        }
    }
    const double bound = 2.0 * inv_2pi2 * tail_over_n2(F, t.n_max); // |cos - 1| <= 2
    return SeriesValue{inv_2pi2 * acc.value(), bound, false, t.n_max, SumMethod::direct};
}

SeriesValue davenport_sine(const FnTable& F, const Rational& x, const TruncationSpec& t) {
    check_trunc(F, t);
    ResidueStep rs(1, x.num, x.den);
    const std::int64_t q = x.den;
    SeriesValue out = accumulate_series(1, t, [&](std::int64_t n) {
        const double Fn = F.at(n);
        double v = 0.0;
        if (Fn != 0.0) v = Fn / static_cast<double>(n) * sin2pi(Rational(rs.current(), q));
        rs.advance();
        return -v / M_PI;
    });
    // |F(n)|/n is summable within the table only when F has finite support;
    // detect that and report a rigorous zero tail, else keep the heuristic.
    // A table whose last entry is nonzero certifies nothing past its limit,
    // so finite support requires a trailing zero stretch.
    std::int64_t last_nonzero = 0;
    for (std::int64_t n = 1; n <= F.limit; ++n)
        if (F.at(n) != 0.0) last_nonzero = n;
    if (last_nonzero < F.limit && last_nonzero <= t.n_max && t.method == SumMethod::direct) {
        out.tail_bound = 0.0;
        out.tail_is_heuristic = false;
    }
    return out;
}

SeriesValue frac_series_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t) {
    check_trunc(f, t);
    // {n x} - 1/2 = (2 r - q) / (2 q) with r = (n x.num) mod q, exact.
    ResidueStep rs(1, x.num, x.den);
    const double two_q = 2.0 * static_cast<double>(x.den);
    return accumulate_series(1, t, [&](std::int64_t n) {
        const double fn = f.at(n);
        double v = 0.0;
        if (fn != 0.0)
            v = fn * (2.0 * static_cast<double>(rs.current()) - static_cast<double>(x.den)) /
                (two_q * static_cast<double>(n));
        rs.advance();
        return v;
    });
}

SeriesValue theorem12_lhs(const FnTable& f, const Rational& x, const TruncationSpec& t) {
    if (!(x > 0)) throw domain_error("theorem12_lhs requires x > 0");
    check_trunc(f, t);
    const std::int64_t p = x.num, q = x.den;
    ResidueStep rs(1, p, q);
    // {n x}^2 - {n x} = r (r - q) / q^2; divide by 2 n^2 x = 2 n^2 p / q.
    const double qd = static_cast<double>(q);
    const double xd = x.to_double();
    NeumaierSum acc;
    for (std::int64_t n = 1; n <= t.n_max; ++n, rs.advance()) {
        const double fn = f.at(n);
        if (fn != 0.0) {
            const double r = static_cast<double>(rs.current());
            const double w = r * (r - qd) / (qd * qd); // in [-1/4, 0]
            const double nn = static_cast<double>(n);
            acc.add(fn * w / (2.0 * nn * nn * xd));
        }
    }
    return SeriesValue{acc.value(), tail_over_n2(f, t.n_max) / (8.0 * xd), false, t.n_max,
                       SumMethod::direct};
}

SeriesValue theorem12_rhs(const FnTable& F, const Rational& x, const TruncationSpec& t) {
    if (!(x > 0)) throw domain_error("theorem12_rhs requires x > 0");
    check_trunc(F, t);
    const std::int64_t q = x.den;
    ResidueStep rs(1, x.num, q);
    const double xd = x.to_double();
    const double scale = 1.0 / (2.0 * xd * M_PI * M_PI);
    NeumaierSum acc;
    if (q <= kTrigTableCap) {
        const std::vector<double> tbl = cos2pi_m1_table(q);
        for (std::int64_t n = 1; n <= t.n_max; ++n, rs.advance()) {
            const double Fn = F.at(n);
            if (Fn != 0.0) {
                const double nn = static_cast<double>(n);
                acc.add(Fn / (nn * nn) * tbl[static_cast<std::size_t>(rs.current())]);
            }
        }
    } else {
        for (std::int64_t n = 1; n <= t.n_max; ++n, rs.advance()) {
            const double Fn = F.at(n);
            if (Fn != 0.0) {
                const double nn = static_cast<double>(n);
                const double s = detail::sinpi_frac(rs.current(), q);
                acc.add(Fn / (nn * nn) * (-2.0 * s * s));
            }
        }
    }
    const double bound = tail_over_n2(F, t.n_max) / (xd * M_PI * M_PI);
    return SeriesValue{scale * acc.value(), bound, false, t.n_max, SumMethod::direct};
}

SeriesValue sincos_series(const FnTable& F, const Rational& x, const TruncationSpec& t) {
    check_trunc(F, t);
    // sin(pi n x) = sin(2 pi {n x / 2}); step the residue of n x/2 on 2q.
    const Rational xh = x.half();
    ResidueStep rs(1, xh.num, xh.den);
    const std::int64_t qh = xh.den;
    SeriesValue out = accumulate_series(1, t, [&](std::int64_t n) {
        const double Fn = F.at(n);
        double v = 0.0;
        if (Fn != 0.0) {
            const Rational u(rs.current(), qh);
            v = 2.0 * (-Fn / (M_PI * static_cast<double>(n))) * sin2pi(u) * cos2pi(u);
        }
        rs.advance();
        return v;
    });
    std::int64_t last_nonzero = 0;
    for (std::int64_t n = 1; n <= F.limit; ++n)
        if (F.at(n) != 0.0) last_nonzero = n;
    if (last_nonzero < F.limit && last_nonzero <= t.n_max && t.method == SumMethod::direct) {
        out.tail_bound = 0.0;
        out.tail_is_heuristic = false;
    }
    return out;
}

} // namespace davenport
