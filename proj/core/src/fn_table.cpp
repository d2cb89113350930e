#include "davenport/fn_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "davenport/kahan.hpp"

namespace davenport {

std::string fn_name(FnId id) {
    switch (id) {
        case FnId::von_mangoldt: return "von_mangoldt";
        case FnId::moebius: return "moebius";
        case FnId::liouville: return "liouville";
        case FnId::unit: return "unit";
        case FnId::custom: return "custom";
    }
    return "?";
}

FnId fn_from_name(const std::string& name) {
    if (name == "von_mangoldt" || name == "lambda_von" || name == "von") return FnId::von_mangoldt;
    if (name == "moebius" || name == "mu") return FnId::moebius;
    if (name == "liouville" || name == "lambda") return FnId::liouville;
    if (name == "unit") return FnId::unit;
    if (name == "custom") return FnId::custom;
    throw parse_error("unknown function '" + name + "'");
}

FnTable sieve(FnId id, std::int64_t limit) {
    if (limit < 1 || limit > 100000000)
        throw resource_error("sieve limit " + std::to_string(limit) + " outside [1, 1e8]");
    if (id == FnId::custom)
        throw domain_error("custom tables are loaded from CSV, not sieved");

    FnTable t;
    t.fn_id = id;
    t.limit = limit;
    t.values.assign(static_cast<std::size_t>(limit) + 1, 0.0);
    t.is_completely_multiplicative = (id == FnId::liouville || id == FnId::unit);

    if (id == FnId::unit) {
        std::fill(t.values.begin() + 1, t.values.end(), 1.0);
        return t;
    }

    // Linear sieve: each n > 1 is struck exactly once, via its smallest prime
    // factor. spf[n] = 0 marks primes during the scan.
    std::vector<std::int32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::int32_t> primes;
    primes.reserve(limit > 100 ? static_cast<std::size_t>(limit / 10) : 16);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (spf[static_cast<std::size_t>(i)] == 0) {
            spf[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
            primes.push_back(static_cast<std::int32_t>(i));
        }
        const std::int32_t spf_i = spf[static_cast<std::size_t>(i)];
        for (std::int32_t p : primes) {
            if (p > spf_i || i * p > limit) break;
            spf[static_cast<std::size_t>(i * p)] = p;
        }
    }

    if (id == FnId::moebius || id == FnId::liouville) {
        // mu and lambda recurse on n = p * m with p = spf(n): lambda flips sign,
        // mu dies on a repeated prime.
        std::vector<std::int8_t> v(static_cast<std::size_t>(limit) + 1, 0);
        v[1] = 1;
        const bool is_mu = (id == FnId::moebius);
        for (std::int64_t n = 2; n <= limit; ++n) {
            const std::int64_t p = spf[static_cast<std::size_t>(n)];
            const std::int64_t m = n / p;
            if (is_mu)
                v[static_cast<std::size_t>(n)] = (m % p == 0) ? 0 : static_cast<std::int8_t>(-v[static_cast<std::size_t>(m)]);
            else
                v[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(-v[static_cast<std::size_t>(m)]);
        }
        for (std::int64_t n = 1; n <= limit; ++n)
            t.values[static_cast<std::size_t>(n)] = static_cast<double>(v[static_cast<std::size_t>(n)]);
        return t;
    }

    // von Mangoldt: log p on prime powers p^k, else 0. n is a prime power iff
    // n / spf(n) is 1 or itself a power of the same prime.
    std::vector<bool> is_pp(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t n = 2; n <= limit; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        const std::int64_t m = n / p;
        if (m == 1 || (is_pp[static_cast<std::size_t>(m)] && spf[static_cast<std::size_t>(m)] == p)) {
            is_pp[static_cast<std::size_t>(n)] = true;
            t.values[static_cast<std::size_t>(n)] = std::log(static_cast<double>(p));
        }
    }
    return t;
}

FnTable divisor_sum_table(const FnTable& table) {
    FnTable F;
    F.fn_id = table.fn_id;
    F.limit = table.limit;
    F.values.assign(static_cast<std::size_t>(table.limit) + 1, 0.0);
    F.is_completely_multiplicative = false;
    F.is_divisor_sum = true;
    // Scan multiples of every d with f(d) != 0; cost sum_{f(d)!=0} limit/d.
    for (std::int64_t d = 1; d <= table.limit; ++d) {
        const double fd = table.at(d);
        if (fd == 0.0) continue;
        for (std::int64_t n = d; n <= table.limit; n += d)
            F.values[static_cast<std::size_t>(n)] += fd;
    }
    return F;
}

SummatoryView::SummatoryView(const FnTable& table) : base(&table) {
    integer_valued = (table.fn_id == FnId::moebius || table.fn_id == FnId::liouville ||
                      table.fn_id == FnId::unit);
    const auto n = static_cast<std::size_t>(table.limit);
    if (integer_valued) {
        iprefix.assign(n + 1, 0);
        std::int64_t acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            acc += static_cast<std::int64_t>(table.values[i]);
            iprefix[i] = acc;
        }
    } else {
        dprefix.assign(n + 1, 0.0);
        NeumaierSum acc;
        for (std::size_t i = 1; i <= n; ++i) {
            acc.add(table.values[i]);
            dprefix[i] = acc.value();
        }
    }
}

double summatory(const SummatoryView& view, double x) {
    if (x < 1.0) return 0.0;
    const auto limit = view.base->limit;
    if (x > static_cast<double>(limit))
        throw range_error("summatory argument exceeds sieve limit");
    return view.prefix(static_cast<std::int64_t>(std::floor(x)));
}

double chi_weight(const ChiVariant& variant, std::int64_t n) {
    if (variant.m <= 1 || variant.l <= 1) throw domain_error("chi requires m > 1 and l > 1");
    if (n < 1) throw domain_error("chi_weight requires n >= 1");
    if (n % variant.m != 0) return 1.0;
    __int128 ml = 1;
    for (std::int64_t i = 0; i < variant.l; ++i) {
        ml *= variant.m;
        if (ml > (static_cast<__int128>(1) << 53))
            throw range_error("m^l exceeds exactly representable range");
    }
    const double p = static_cast<double>(static_cast<std::int64_t>(ml));
    const bool plus = variant.sign == ChiVariant::Sign::plus;
    if (variant.convention == ChiVariant::Convention::corrected)
        return plus ? 1.0 + p : 1.0 - p;
    return plus ? p - 1.0 : -(p + 1.0);
}

SeriesValue dirichlet_partial(const FnTable& table, double s, std::int64_t n_max) {
    if (s <= 1.0) throw domain_error("dirichlet_partial requires s > 1");
    if (n_max > table.limit) throw range_error("n_max exceeds table limit");
    NeumaierSum acc;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const double f = table.at(n);
        if (f != 0.0) acc.add(f * std::pow(static_cast<double>(n), -s));
    }
    const double M = static_cast<double>(n_max);
    double bound;
    if (table.fn_id == FnId::von_mangoldt && !table.is_divisor_sum) {
        // integral majorant of sum_{n>M} log(n) n^{-s}
        bound = (std::log(M) + 1.0 / (s - 1.0)) * std::pow(M, 1.0 - s) / (s - 1.0);
    } else {
        double fmax = 0.0;
        for (std::int64_t n = 1; n <= table.limit; ++n) fmax = std::max(fmax, std::fabs(table.at(n)));
        bound = fmax * std::pow(M, 1.0 - s) / (s - 1.0);
    }
    return SeriesValue{acc.value(), bound, false, n_max, SumMethod::direct};
}

FnTable load_custom_csv(const std::string& path, bool is_completely_multiplicative) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open custom CSV '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty custom CSV '" + path + "'");
    // tolerate a UTF-8 BOM and trailing CR
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,f") throw parse_error(path + ":1: expected header 'n,f'");

    FnTable t;
    t.fn_id = FnId::custom;
    t.is_completely_multiplicative = is_completely_multiplicative;
    t.values.assign(1, 0.0);
    std::int64_t expect = 1, line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error(path + ":" + std::to_string(line_no) + ": missing comma");
        std::int64_t n;
        double f;
        try {
            n = std::stoll(line.substr(0, comma));
            f = std::stod(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": malformed row");
        }
        if (n != expect)
            throw parse_error(path + ":" + std::to_string(line_no) + ": gap, expected n = " +
                              std::to_string(expect));
        if (!std::isfinite(f))
            throw parse_error(path + ":" + std::to_string(line_no) + ": non-finite value");
        t.values.push_back(f);
        ++expect;
    }
    t.limit = expect - 1;
    if (t.limit < 1) throw parse_error(path + ": no data rows");

    if (is_completely_multiplicative) {
        // Spot-check f(ab) = f(a) f(b) on pairs a, b <= 100 within range
        // (complete multiplicativity needs no coprimality).
        for (std::int64_t a = 2; a <= 100 && a <= t.limit; ++a)
            for (std::int64_t b = a; b <= 100; ++b) {
                if (a * b > t.limit) break;
                if (std::fabs(t.at(a * b) - t.at(a) * t.at(b)) > 1e-9)
                    throw spec_error("declared completely multiplicative but f(" +
                                     std::to_string(a) + "*" + std::to_string(b) +
                                     ") != f(a)f(b)");
            }
    }
    return t;
}

} // namespace davenport
