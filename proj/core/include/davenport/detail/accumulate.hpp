#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "davenport/kahan.hpp"
#include "davenport/series_value.hpp"
#include "davenport/trig.hpp"

namespace davenport::detail {

/*
 * Shared series driver. Terms are fed in ascending n into a compensated sum.
 * direct: value = the full partial sum. cesaro: value = (C,1) mean of the
 * last min(cesaro_block, count) partial sums. Both report the half-spread of
 * the last min(1000, count) partial sums as a dispersion estimate of how far
 * the series still wanders; it is a heuristic tail stand-in for conditionally
 * convergent series, and callers with a rigorous majorant overwrite it.
 */
template <typename Term>
SeriesValue accumulate_series(std::int64_t n_lo, const TruncationSpec& t, Term&& term) {
    NeumaierSum acc;
    const std::int64_t count = std::max<std::int64_t>(0, t.n_max - n_lo + 1);
    const std::int64_t window =
        std::min(t.method == SumMethod::cesaro ? t.cesaro_block : std::int64_t{1},
                 std::max<std::int64_t>(count, 1));
    const std::int64_t mean_from = t.n_max - window + 1;
    const std::int64_t spread_from =
        t.n_max - std::min<std::int64_t>(1000, std::max<std::int64_t>(count, 1)) + 1;
    NeumaierSum mean;
    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (std::int64_t n = n_lo; n <= t.n_max; ++n) {
        acc.add(term(n));
        const double s = acc.value();
        if (t.method == SumMethod::cesaro && n >= mean_from) mean.add(s);
        if (n >= spread_from) {
            lo = seen ? std::min(lo, s) : s;
            hi = seen ? std::max(hi, s) : s;
            seen = true;
        }
    }
    const double dispersion = seen ? 0.5 * (hi - lo) : 0.0;
    const double value = (t.method == SumMethod::cesaro && count > 0)
                             ? mean.value() / static_cast<double>(window)
                             : acc.value();
    return SeriesValue{value, dispersion, true, t.n_max, t.method};
}

// Residue stepper for (n * step) mod q over consecutive n: one add and one
// conditional subtract per term instead of a 128-bit mod. q < 2^62.
struct ResidueStep {
    std::int64_t q, step, r;
    ResidueStep(std::int64_t n_lo, std::int64_t step_raw, std::int64_t q_) : q(q_) {
        step = step_raw % q;
        if (step < 0) step += q;
        r = static_cast<std::int64_t>((static_cast<__int128>(n_lo % q) * step) % q);
    }
    std::int64_t current() const { return r; }
    void advance() {
        r += step;
        if (r >= q) r -= q;
    }
};

// Small-denominator fast path: all trig values of a series live on q residues.
constexpr std::int64_t kTrigTableCap = 1 << 20;

inline std::vector<double> cos2pi_m1_table(std::int64_t q) {
    std::vector<double> tbl(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r) {
        const double s = sinpi_frac(r, q);
        tbl[static_cast<std::size_t>(r)] = -2.0 * s * s;
    }
    return tbl;
}

} // namespace davenport::detail
