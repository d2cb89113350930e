#include "davenport/identities.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "davenport/errors.hpp"
#include "davenport/series.hpp"

namespace davenport {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void finish(IdentityReport& rep) {
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    rep.pass = rep.residual <= std::max(rep.bound, kFloorTol);
}

// Popov right-hand side pieces shared by verify_popov and the cross check.
struct ExplicitRhs {
    double leading, value, bound;
};

ExplicitRhs explicit_rhs(double xd, const VerifyConfig& cfg, IdentityReport& rep) {
    if (cfg.zeros == nullptr)
        throw domain_error("explicit-formula checks require a zero table (cfg.zeros)");
    const double leading = (2.0 - std::log(2.0 * M_PI)) / xd;
    const SeriesValue zs = popov_zero_sum(xd, *cfg.zeros);
    const SeriesValue ts = popov_trivial_sum(xd, cfg.k_max);
    rep.params.emplace_back("zero_count", std::to_string(cfg.zeros->ordinates.size()));
    rep.params.emplace_back("leading_term", fmt(leading));
    rep.params.emplace_back("zero_sum", fmt(zs.value));
    rep.params.emplace_back("zero_sum_tail", fmt(zs.tail_bound));
    rep.params.emplace_back("trivial_sum", fmt(ts.value));
    rep.params.emplace_back("trivial_sum_tail", fmt(ts.tail_bound));
    return ExplicitRhs{leading, leading + zs.value + ts.value, zs.tail_bound + ts.tail_bound};
}

} // namespace

const FnTable& TableCache::base_locked(FnId id, std::int64_t limit) {
    const Key want{static_cast<int>(id), limit};
    auto it = base_.lower_bound(want);
    if (it != base_.end() && it->first.first == want.first) return *it->second;
    if (id == FnId::custom)
        throw domain_error("no custom table registered covering the requested limit");
    auto inserted = base_.emplace(want, std::make_unique<FnTable>(sieve(id, limit)));
    return *inserted.first->second;
}

const FnTable& TableCache::table(FnId id, std::int64_t limit) {
    std::lock_guard<std::mutex> lock(mu_);
    return base_locked(id, limit);
}

const FnTable& TableCache::divisor_sum(FnId id, std::int64_t limit) {
    std::lock_guard<std::mutex> lock(mu_);
    const Key want{static_cast<int>(id), limit};
    auto it = dsum_.lower_bound(want);
    if (it != dsum_.end() && it->first.first == want.first) return *it->second;
    const FnTable& base = base_locked(id, limit);
    auto inserted =
        dsum_.emplace(Key{want.first, base.limit}, std::make_unique<FnTable>(divisor_sum_table(base)));
    return *inserted.first->second;
}

void TableCache::put_custom(FnTable table) {
    if (table.fn_id != FnId::custom) throw domain_error("put_custom expects a custom table");
    std::lock_guard<std::mutex> lock(mu_);
    base_.emplace(Key{static_cast<int>(FnId::custom), table.limit},
                  std::make_unique<FnTable>(std::move(table)));
}

IdentityReport verify_popov(TableCache& cache, const Rational& x, const VerifyConfig& cfg) {
    if (x < 2) throw domain_error("verify_popov requires x >= 2");
    IdentityReport rep;
    rep.identity = "popov";
    rep.params.emplace_back("x", x.str());
    rep.params.emplace_back("n_max", std::to_string(cfg.n_max));
    rep.params.emplace_back("k_max", std::to_string(cfg.k_max));
    const FnTable& f = cache.table(FnId::von_mangoldt, cfg.n_max);
    TruncationSpec t;
    t.n_max = cfg.n_max;
    const SeriesValue half = theorem11_lhs(f, x, t);
    rep.lhs = 2.0 * half.value; // exactly 2 x the shared series, bitwise
    const ExplicitRhs rhs = explicit_rhs(x.to_double(), cfg, rep);
    rep.rhs = rhs.value;
    rep.params.emplace_back("lhs_tail", fmt(2.0 * half.tail_bound));
    rep.bound = 2.0 * half.tail_bound + rhs.bound;
    rep.bound_is_heuristic = true; // zero-sum tail is a density estimate
    finish(rep);
    return rep;
}

IdentityReport verify_theorem11(TableCache& cache, FnId fn, const Rational& x,
                                const VerifyConfig& cfg) {
    if (!(x > 1)) throw domain_error("verify_theorem11 requires x > 1");
    IdentityReport rep;
    rep.identity = "thm11";
    rep.params.emplace_back("fn", fn_name(fn));
    rep.params.emplace_back("x", x.str());
    rep.params.emplace_back("n_max", std::to_string(cfg.n_max));
    const FnTable& f = cache.table(fn, cfg.n_max);
    const FnTable& F = cache.divisor_sum(fn, cfg.n_max);
    TruncationSpec t;
    t.n_max = cfg.n_max;
    const SeriesValue lhs = theorem11_lhs(f, x, t);
    const double integral = theorem11_integral_term(f, x);
    const SeriesValue cosine = cosine_term(F, x, t);
    rep.lhs = lhs.value;
    rep.rhs = -(0.5 / x.to_double()) * integral - cosine.value;
    rep.params.emplace_back("integral_term", fmt(integral));
    rep.params.emplace_back("cosine_term", fmt(cosine.value));
    rep.params.emplace_back("lhs_tail", fmt(lhs.tail_bound));
    rep.params.emplace_back("cosine_tail", fmt(cosine.tail_bound));
    rep.bound = lhs.tail_bound + cosine.tail_bound;
    rep.bound_is_heuristic = lhs.tail_is_heuristic || cosine.tail_is_heuristic;
    finish(rep);
    return rep;
}

IdentityReport verify_theorem12(TableCache& cache, FnId fn, const Rational& x,
                                const VerifyConfig& cfg) {
    if (!(x > 0)) throw domain_error("verify_theorem12 requires x > 0");
    IdentityReport rep;
    rep.identity = "thm12";
    rep.params.emplace_back("fn", fn_name(fn));
    rep.params.emplace_back("x", x.str());
    rep.params.emplace_back("n_max", std::to_string(cfg.n_max));
    const FnTable& f = cache.table(fn, cfg.n_max);
    const FnTable& F = cache.divisor_sum(fn, cfg.n_max);
    TruncationSpec t;
    t.n_max = cfg.n_max;
    const SeriesValue lhs = theorem12_lhs(f, x, t);
    const SeriesValue rhs = theorem12_rhs(F, x, t);
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    rep.params.emplace_back("lhs_tail", fmt(lhs.tail_bound));
    rep.params.emplace_back("rhs_tail", fmt(rhs.tail_bound));
    rep.bound = lhs.tail_bound + rhs.tail_bound;
    rep.bound_is_heuristic = lhs.tail_is_heuristic || rhs.tail_is_heuristic;
    finish(rep);
    return rep;
}

IdentityReport verify_theorem31(TableCache& cache, FnId fn, const Rational& x,
                                const VerifyConfig& cfg) {
    IdentityReport rep;
    rep.identity = "thm31";
    rep.params.emplace_back("fn", fn_name(fn));
    rep.params.emplace_back("x", x.str());
    rep.params.emplace_back("n_max", std::to_string(cfg.n_max));
    rep.params.emplace_back("cesaro_block", std::to_string(cfg.cesaro_block));
    const FnTable& f = cache.table(fn, cfg.n_max);
    const FnTable& F = cache.divisor_sum(fn, cfg.n_max);
    // Both sides are conditionally convergent; both run under (C,1) averaging.
    TruncationSpec t;
    t.n_max = cfg.n_max;
    t.method = SumMethod::cesaro;
    t.cesaro_block = cfg.cesaro_block;
    const SeriesValue lhs = frac_series_lhs(f, x, t);
    const SeriesValue rhs = sincos_series(F, x, t);
    const SeriesValue dav = davenport_sine(F, x, t);
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    const double denom = std::max({std::fabs(dav.value), std::fabs(rhs.value), 1e-30});
    rep.params.emplace_back("structural_rel_diff", fmt(std::fabs(rhs.value - dav.value) / denom));
    rep.params.emplace_back("lhs_dispersion", fmt(lhs.tail_bound));
    rep.params.emplace_back("rhs_dispersion", fmt(rhs.tail_bound));
    rep.bound = lhs.tail_bound + rhs.tail_bound;
    rep.bound_is_heuristic = true;
    finish(rep);
    return rep;
}

IdentityReport verify_lemma31(int n, int m) {
    if (n < 1 || m < 1) throw domain_error("verify_lemma31 requires n, m >= 1");
    IdentityReport rep;
    rep.identity = "lemma31";
    rep.params.emplace_back("n", std::to_string(n));
    rep.params.emplace_back("m", std::to_string(m));
    rep.lhs = orthogonality_integral(n, m);
    rep.rhs = (n == m) ? 0.125 : 0.0;
    rep.bound = 1e-10; // quadrature error estimate, not a proven majorant
    rep.bound_is_heuristic = true;
    finish(rep);
    return rep;
}

IdentityReport verify_eq34(int N, int m) {
    if (N < 1 || m < 1) throw domain_error("verify_eq34 requires N, m >= 1");
    IdentityReport rep;
    rep.identity = "eq34";
    rep.params.emplace_back("N", std::to_string(N));
    rep.params.emplace_back("m", std::to_string(m));
    rep.lhs = frac_sincos_integral(N, m);
    rep.rhs = (m % N == 0) ? -static_cast<double>(N) / (4.0 * M_PI * static_cast<double>(m)) : 0.0;
    rep.bound = 1e-9;
    rep.bound_is_heuristic = true;
    finish(rep);
    return rep;
}

IdentityReport verify_lemma32(PhiSpec::Kind phi, double a, double b) {
    if (!(a < b)) throw domain_error("verify_lemma32 requires a < b");
    IdentityReport rep;
    rep.identity = "lemma32";
    PhiSpec spec;
    const char* name = "";
    switch (phi) {
        case PhiSpec::Kind::square: spec = PhiSpec::square(); name = "square"; break;
        case PhiSpec::Kind::sine: spec = PhiSpec::sine(); name = "sine"; break;
        case PhiSpec::Kind::cubic: spec = PhiSpec::cubic(); name = "cubic"; break;
    }
    rep.params.emplace_back("phi", name);
    rep.params.emplace_back("a", fmt(a));
    rep.params.emplace_back("b", fmt(b));
    // The identity asserts the two-sided residual vanishes; lhs carries it.
    rep.lhs = euler_maclaurin_residual(spec, a, b);
    rep.rhs = 0.0;
    rep.bound = 1e-9;
    rep.bound_is_heuristic = true;
    finish(rep);
    return rep;
}

IdentityReport cross_check_popov_thm11(TableCache& cache, const Rational& x,
                                       const VerifyConfig& cfg) {
    if (x < 2) throw domain_error("cross_check_popov_thm11 requires x >= 2");
    IdentityReport rep;
    rep.identity = "cross_popov_thm11";
    rep.params.emplace_back("x", x.str());
    rep.params.emplace_back("n_max", std::to_string(cfg.n_max));
    rep.params.emplace_back("k_max", std::to_string(cfg.k_max));
    const FnTable& f = cache.table(FnId::von_mangoldt, cfg.n_max);
    const FnTable& F = cache.divisor_sum(FnId::von_mangoldt, cfg.n_max);
    TruncationSpec t;
    t.n_max = cfg.n_max;
    // Corrected orientation (as in verify_theorem11): the closed side of the
    // series identity is -(1/(2x)) integral - cosine term; it must match half
    // the explicit-formula right side.
    const double integral = theorem11_integral_term(f, x);
    const SeriesValue cosine = cosine_term(F, x, t);
    rep.lhs = -(0.5 / x.to_double()) * integral - cosine.value;
    rep.params.emplace_back("integral_term", fmt(integral));
    rep.params.emplace_back("cosine_term", fmt(cosine.value));
    const ExplicitRhs rhs = explicit_rhs(x.to_double(), cfg, rep);
    rep.rhs = 0.5 * rhs.value;
    rep.bound = cosine.tail_bound + 0.5 * rhs.bound;
    rep.bound_is_heuristic = true;
    finish(rep);
    return rep;
}

std::vector<ProbeRow> asymptotic_probe(TableCache& cache, FnId fn,
                                       const std::vector<Rational>& x_grid,
                                       const AsymptoticModel& model, const VerifyConfig& cfg) {
    std::vector<ProbeRow> rows;
    rows.reserve(x_grid.size());
    for (const Rational& x : x_grid) {
        if (!(x > 1)) throw domain_error("asymptotic_probe requires x > 1");
        const FnTable& f = cache.table(fn, cfg.n_max);
        const FnTable& F = cache.divisor_sum(fn, cfg.n_max);
        TruncationSpec t;
        t.n_max = cfg.n_max;
        const double lhs = theorem11_lhs(f, x, t).value;
        const double cosine = cosine_term(F, x, t).value;
        const double xd = x.to_double();
        ProbeRow row;
        row.x = x;
        row.D = lhs - cosine;
        // Delta(x)/x^2 is 1/x for the linear model and 1/x^2 for the constant.
        row.ratio = model.delta_kind == AsymptoticModel::Delta::linear ? row.D * xd
                                                                       : row.D * xd * xd;
        row.log_comparison = row.D * 2.0 * xd / std::log(xd);
        rows.push_back(row);
    }
    return rows;
}

} // namespace davenport
