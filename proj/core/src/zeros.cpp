#include "davenport/zeros.hpp"

#include <cmath>
#include <fstream>

#include "davenport/errors.hpp"
#include "davenport/kahan.hpp"

namespace davenport {

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open zeros file '" + path + "'");
    ZeroTable t;
    t.source = path;
    std::string line;
    std::int64_t line_no = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size() || line[i] == '#') continue;
        double g;
        try {
            std::size_t used = 0;
            g = std::stod(line.substr(i), &used);
            while (i + used < line.size() && (line[i + used] == ' ' || line[i + used] == '\t')) ++used;
            if (i + used != line.size()) throw parse_error("");
        } catch (const std::exception&) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": non-numeric ordinate");
        }
        if (!(g > prev))
            throw parse_error(path + ":" + std::to_string(line_no) + ": ordinates not strictly increasing");
        if (g <= 14.0)
            throw parse_error(path + ":" + std::to_string(line_no) + ": ordinate below the first zero (14.13...)");
        t.ordinates.push_back(g);
        prev = g;
    }
    if (t.ordinates.empty()) throw parse_error(path + ": no zeros");
    return t;
}

SeriesValue popov_zero_sum(double x, const ZeroTable& zeros) {
    if (!(x > 1.0)) throw domain_error("popov_zero_sum requires x > 1");
    if (zeros.ordinates.empty()) throw domain_error("popov_zero_sum requires a nonempty zero table");
    const double lx = std::log(x);
    const double amp = -2.0 * std::pow(x, -1.5);
    NeumaierSum acc;
    for (double g : zeros.ordinates)
        acc.add(amp * std::cos(g * lx) / (g * g + 0.25));
    const double gmax = zeros.ordinates.back();
    // zero-density estimate of the discarded tail; heuristic by construction
    const double tail = 2.0 * std::pow(x, -1.5) *
                        (std::log(gmax / (2.0 * M_PI)) + 1.0) / (2.0 * M_PI * gmax);
    return SeriesValue{acc.value(), tail, true,
                       static_cast<std::int64_t>(zeros.ordinates.size()), SumMethod::direct};
}

OddZetaCache::OddZetaCache() {
    values_.assign(201, 0.0);
    for (int k = 1; k <= 200; ++k) {
        const double s = 2.0 * k + 1.0;
        // M from M^{-2k}/(2k) <= 1e-12; descending order adds small terms first.
        const double target = std::exp(std::log(1.0 / (2.0 * k * 1e-12)) / (2.0 * k));
        const std::int64_t M = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(target)) + 1);
        NeumaierSum acc;
        for (std::int64_t n = M; n >= 1; --n)
            acc.add(std::pow(static_cast<double>(n), -s));
        values_[static_cast<std::size_t>(k)] = acc.value();
    }
}

double OddZetaCache::zeta_odd(int k) const {
    if (k < 1 || k > 200) throw domain_error("zeta_odd requires 1 <= k <= 200");
    return values_[static_cast<std::size_t>(k)];
}

const OddZetaCache& OddZetaCache::instance() {
    static const OddZetaCache cache;
    return cache;
}

SeriesValue popov_trivial_sum(double x, int k_max, const OddZetaCache& cache) {
    if (!(x >= 1.1))
        throw domain_error("popov_trivial_sum requires x >= 1.1 (geometric convergence stalls below)");
    if (k_max < 1) throw domain_error("popov_trivial_sum requires k_max >= 1");
    if (k_max > 200) throw domain_error("popov_trivial_sum supports k_max <= 200");
    NeumaierSum acc;
    for (int k = 1; k <= k_max; ++k) {
        const double kk = static_cast<double>(k);
        const double num = kk + 1.0 - 2.0 * kk * cache.zeta_odd(k);
        const double den = 2.0 * kk * (kk + 1.0) * (2.0 * kk + 1.0);
        acc.add(num / den * std::pow(x, -2.0 * kk - 2.0));
    }
    const double r = 1.0 / (x * x);
    const double tail = std::pow(x, -2.0 * k_max - 4.0) / (1.0 - r);
    return SeriesValue{acc.value(), tail, false, k_max, SumMethod::direct};
}

} // namespace davenport
