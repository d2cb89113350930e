#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "davenport/errors.hpp"
#include "davenport/series_value.hpp"

namespace davenport {

enum class FnId { von_mangoldt, moebius, liouville, unit, custom };

std::string fn_name(FnId id);
FnId fn_from_name(const std::string& name);

/*
 * Sieved values f(1..limit) of a named arithmetic function. Values are stored
 * as doubles (exact for the +-1/0 functions; log p for the von Mangoldt
 * function). Tables are immutable after construction and safely shared.
 */
struct FnTable {
    FnId fn_id = FnId::unit;
    std::int64_t limit = 0;
    std::vector<double> values; // size limit + 1, index 0 unused (= 0)
    bool is_completely_multiplicative = false;
    bool is_divisor_sum = false; // true for tables produced by divisor_sum_table

    double at(std::int64_t n) const { return values[static_cast<std::size_t>(n)]; }
};

// Linear (smallest-prime-factor) sieve. limit in [1, 10^8].
FnTable sieve(FnId id, std::int64_t limit);

// F(n) = sum_{d | n} f(d), by scanning multiples of every d with f(d) != 0.
FnTable divisor_sum_table(const FnTable& table);

/*
 * Prefix sums S(x) = sum_{n <= x} f(n). For the +-1/0-valued functions the
 * accumulation is carried in 64-bit integers, so M(x) and the Liouville
 * summatory are exact; the von Mangoldt prefix sums are compensated doubles.
 */
struct SummatoryView {
    const FnTable* base = nullptr;
    bool integer_valued = false;
    std::vector<std::int64_t> iprefix; // used when integer_valued
    std::vector<double> dprefix;       // otherwise

    explicit SummatoryView(const FnTable& table);
    double prefix(std::int64_t n) const {
        return integer_valued ? static_cast<double>(iprefix[static_cast<std::size_t>(n)])
                              : dprefix[static_cast<std::size_t>(n)];
    }
};

// S(x) = prefix_sums[floor(x)], zero below 1.
double summatory(const SummatoryView& view, double x);

/*
 * The chi weights attached to the D-family series: 1 off the multiples of m,
 * and on multiples either the corrected weights 1 +- m^l (default: these make
 * sum chi(n) f(n) n^{-s} = (1 +- f(m) m^{l-s}) L(s) an identity for
 * completely multiplicative f) or the literal weights +-(m^l -+ 1) kept for
 * audit.
 */
struct ChiVariant {
    enum class Sign { plus, minus };
    enum class Convention { corrected, literal };
    Sign sign = Sign::plus;
    std::int64_t m = 2;
    std::int64_t l = 2;
    Convention convention = Convention::corrected;
};

double chi_weight(const ChiVariant& variant, std::int64_t n);

// Compensated partial sum of L(s) = sum f(n) n^{-s}, with an integral tail
// majorant: |f| <= max over the table gives max|f| n_max^{1-s}/(s-1); the von
// Mangoldt table uses |Lambda(n)| <= log n, giving
// (log n_max + 1/(s-1)) n_max^{1-s}/(s-1).
SeriesValue dirichlet_partial(const FnTable& table, double s, std::int64_t n_max);

// Custom function ingestion: CSV with header "n,f", rows 1..limit in order.
// A declared completely-multiplicative flag is spot-checked on coprime pairs
// with product <= min(limit, 100^2).
FnTable load_custom_csv(const std::string& path, bool is_completely_multiplicative);

} // namespace davenport
