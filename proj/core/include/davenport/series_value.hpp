#pragma once

#include <cstdint>

namespace davenport {

enum class SumMethod { direct, cesaro };

// Truncation policy for every series evaluator. For conditionally convergent
// 1/n-weighted series, method = cesaro averages the last cesaro_block partial
// sums ((C,1) block mean); cesaro_block = n_max gives the full Fejer mean.
struct TruncationSpec {
    std::int64_t n_max = 1000000;
    SumMethod method = SumMethod::direct;
    std::int64_t cesaro_block = 1000;
};

// A truncated series result. tail_bound is a rigorous majorant of the
// discarded tail when tail_is_heuristic is false; otherwise it is a
// dispersion estimate (spread of the averaged partial sums) and is labeled so
// in every report.
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    bool tail_is_heuristic = false;
    std::int64_t terms_used = 0;
    SumMethod method = SumMethod::direct;
};

} // namespace davenport
