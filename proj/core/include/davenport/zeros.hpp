#pragma once

#include <string>
#include <vector>

#include "davenport/series_value.hpp"

namespace davenport {

/*
 * Ascending positive ordinates gamma of nontrivial zeta zeros, ingested from
 * an ASCII file: one decimal ordinate per line, lines starting with '#'
 * skipped, strictly increasing, all above 14 (the first zero's ordinate is
 * 14.13...). Zeros are assumed on the critical line, which holds for every
 * tabulated zero.
 */
struct ZeroTable {
    std::vector<double> ordinates;
    std::string source;
};

ZeroTable load_zeros(const std::string& path);

/*
 * Conjugate-paired zero-sum term of the explicit formula, evaluated in real
 * arithmetic: for rho = 1/2 + i gamma, rho(rho - 1) = -(gamma^2 + 1/4), so
 * the rho and conjugate terms combine to
 *   -2 x^{-3/2} cos(gamma log x) / (gamma^2 + 1/4).
 * The reported tail is the zero-density integral estimate
 *   2 x^{-3/2} (1/2pi)(log(gamma_max/2pi) + 1)/gamma_max,
 * flagged heuristic: the true tail oscillates and is not majorized term-wise.
 */
SeriesValue popov_zero_sum(double x, const ZeroTable& zeros);

/*
 * ζ(2k+1) by direct descending summation to M terms with integral tail
 * M^{-2k}/(2k) <= 1e-12; all 200 supported values precomputed at
 * construction, immutable afterwards (safe to share across threads).
 */
class OddZetaCache {
  public:
    OddZetaCache();
    double zeta_odd(int k) const; // 1 <= k <= 200
    static const OddZetaCache& instance();

  private:
    std::vector<double> values_;
};

/*
 * Trivial-zero series of the explicit formula:
 *   sum_{k>=1} (k + 1 - 2k zeta(2k+1)) / (2k(k+1)(2k+1)) x^{-2k-2},
 * truncated at k_max with geometric tail x^{-2 k_max - 4}/(1 - x^{-2})
 * (|term_k| <= x^{-2k-2} for k >= 2). Requires x >= 1.1: below that the
 * geometric convergence stalls.
 */
SeriesValue popov_trivial_sum(double x, int k_max, const OddZetaCache& cache = OddZetaCache::instance());

} // namespace davenport
