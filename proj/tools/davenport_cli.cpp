#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "davenport/errors.hpp"
#include "davenport/fine.hpp"
#include "davenport/identities.hpp"
#include "davenport/report_io.hpp"
#include "davenport/series.hpp"
#include "davenport/trig.hpp"

#ifndef DAVENPORT_DATA_DIR
#define DAVENPORT_DATA_DIR "data"
#endif

namespace {

using namespace davenport;

constexpr int kExitPass = 0;
constexpr int kExitResidualFailure = 1;
constexpr int kExitUsage = 2;

std::string resolve_zeros_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("DAVENPORT_ZEROS"); env != nullptr && *env != '\0')
        return env;
    return std::string(DAVENPORT_DATA_DIR) + "/zeros100.txt";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw resource_error("cannot open output file: " + out_path);
    out << text;
}

std::vector<Rational> parse_x_list(const std::vector<std::string>& raw,
                                   std::vector<Rational> fallback) {
    if (raw.empty()) return fallback;
    std::vector<Rational> xs;
    xs.reserve(raw.size());
    for (const std::string& s : raw) xs.push_back(parse_rational(s));
    return xs;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = std::stoll(s);
        return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- sieve ----

int cmd_sieve(const std::string& fn, std::int64_t limit, const std::string& out_path) {
    TableCache cache;
    const FnTable& t = cache.table(fn_from_name(fn), limit);
    std::string text = "n,f\n";
    for (std::int64_t n = 1; n <= limit; ++n) text += std::to_string(n) + ',' + fmtg(t.at(n)) + '\n';
    emit(text, out_path);
    return kExitPass;
}

// --------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string identity;
    std::string fn = "moebius";
    std::vector<std::string> xs;
    std::int64_t n_max = 1000000;
    int k_max = 80;
    std::string zeros;
    std::string sum_method = "direct";
    std::int64_t cesaro_block = 1000;
    int n = 3, m = 4;        // lemma31 n,m; eq34 m
    int N34 = 2;             // eq34 (shares --m with lemma31)
    std::string phi = "square";
    double a = 0.0, b = 3.0; // lemma32
    std::string format = "json";
    std::string out;
    std::string csv;         // custom table source
    bool csv_cm = false;
};

PhiSpec::Kind phi_kind(const std::string& name) {
    if (name == "square") return PhiSpec::Kind::square;
    if (name == "sine") return PhiSpec::Kind::sine;
    if (name == "cubic") return PhiSpec::Kind::cubic;
    throw domain_error("unknown phi: " + name + " (expected square|sine|cubic)");
}

int cmd_verify(const VerifyArgs& args) {
    TableCache cache;
    if (!args.csv.empty()) cache.put_custom(load_custom_csv(args.csv, args.csv_cm));
    VerifyConfig cfg;
    cfg.n_max = args.n_max;
    cfg.k_max = args.k_max;
    cfg.cesaro_block = args.cesaro_block;
    cfg.method = args.sum_method == "cesaro" ? SumMethod::cesaro : SumMethod::direct;

    ZeroTable zeros;
    const bool needs_zeros = args.identity == "popov" || args.identity == "cross";
    if (needs_zeros) {
        zeros = load_zeros(resolve_zeros_path(args.zeros));
        cfg.zeros = &zeros;
    }
    const FnId fn = fn_from_name(args.fn);

    std::vector<IdentityReport> reports;
    if (args.identity == "popov") {
        for (const Rational& x : parse_x_list(args.xs, {Rational(2, 1), Rational(5, 1), Rational(10, 1)}))
            reports.push_back(verify_popov(cache, x, cfg));
    } else if (args.identity == "thm11") {
        for (const Rational& x : parse_x_list(
                 args.xs, {Rational(2, 1), Rational(5, 2), Rational(7, 3), Rational(15, 2)}))
            reports.push_back(verify_theorem11(cache, fn, x, cfg));
    } else if (args.identity == "thm12") {
        for (const Rational& x :
             parse_x_list(args.xs, {Rational(1, 3), Rational(1, 2), Rational(5, 2)}))
            reports.push_back(verify_theorem12(cache, fn, x, cfg));
    } else if (args.identity == "thm31") {
        for (const Rational& x :
             parse_x_list(args.xs, {Rational(1, 10), Rational(3, 10), Rational(7, 10)}))
            reports.push_back(verify_theorem31(cache, fn, x, cfg));
    } else if (args.identity == "cross") {
        for (const Rational& x : parse_x_list(args.xs, {Rational(2, 1), Rational(5, 1), Rational(10, 1)}))
            reports.push_back(cross_check_popov_thm11(cache, x, cfg));
    } else if (args.identity == "lemma31") {
        reports.push_back(verify_lemma31(args.n, args.m));
    } else if (args.identity == "eq34") {
        reports.push_back(verify_eq34(args.N34, args.m));
    } else if (args.identity == "lemma32") {
        reports.push_back(verify_lemma32(phi_kind(args.phi), args.a, args.b));
    } else {
        throw domain_error("unknown identity: " + args.identity +
                           " (expected popov|thm11|thm12|thm31|lemma31|lemma32|eq34|cross)");
    }

    std::string text;
    if (args.format == "json") text = reports_json(reports);
    else if (args.format == "csv") text = reports_csv(reports);
    else text = reports_table(reports);
    emit(text, args.out);

    for (const IdentityReport& rep : reports)
        if (!rep.pass) return kExitResidualFailure;
    return kExitPass;
}

// ----------------------------------------------------------------- fine ----

struct FineArgs {
    std::string family = "d2";
    std::string fn = "liouville";
    int power = 1;
    std::int64_t m = 4, l = 2;
    std::string chi = "corrected";
    std::string frequency = "two_pi";
    std::string range = "3..11";
    std::string method = "collapsed";
    std::int64_t n_max = 1000000;
    std::string sum_method = "direct";
    std::int64_t cesaro_block = 1000;
    std::string format = "csv";
    std::string out;
    std::string csv;
    bool csv_cm = false;
};

FineSpec make_fine_spec(const FineArgs& args) {
    FineSpec spec;
    if (args.family == "cos_power") spec.family = FineSpec::Family::cos_power;
    else if (args.family == "sin_even_power") spec.family = FineSpec::Family::sin_even_power;
    else if (args.family == "d1") spec.family = FineSpec::Family::d1;
    else if (args.family == "d2") spec.family = FineSpec::Family::d2;
    else throw domain_error("unknown family: " + args.family);
    spec.base_fn = fn_from_name(args.fn);
    spec.power = args.power;
    spec.chi.m = args.m;
    spec.chi.l = args.l;
    spec.chi.convention =
        args.chi == "literal" ? ChiVariant::Convention::literal : ChiVariant::Convention::corrected;
    spec.frequency = args.frequency == "pi_literal" ? FineSpec::Frequency::pi_literal
                                                    : FineSpec::Frequency::two_pi;
    return spec;
}

int cmd_fine(const FineArgs& args) {
    TableCache cache;
    if (!args.csv.empty()) cache.put_custom(load_custom_csv(args.csv, args.csv_cm));
    const FineSpec spec = make_fine_spec(args);
    const FnTable& table = cache.table(spec.base_fn, args.n_max);
    TruncationSpec t;
    t.n_max = args.n_max;
    t.method = args.sum_method == "cesaro" ? SumMethod::cesaro : SumMethod::direct;
    t.cesaro_block = args.cesaro_block;
    const auto [lo, hi] = parse_range(args.range);
    const FineScan scan = fine_scan(spec, table, lo, hi, t, args.method);
    std::string text;
    if (args.format == "json") text = fine_json(scan);
    else if (args.format == "table") text = fine_table(scan);
    else text = fine_csv(scan);
    emit(text, args.out);
    return kExitPass;
}

// ----------------------------------------------------------- asymptotic ----

int cmd_asymptotic(const std::string& fn, const std::vector<std::string>& xs,
                   const std::string& model_name, std::int64_t n_max, const std::string& format,
                   const std::string& out_path) {
    TableCache cache;
    VerifyConfig cfg;
    cfg.n_max = n_max;
    AsymptoticModel model;
    model.applies_to = fn_from_name(fn);
    model.delta_kind = model_name == "constant" ? AsymptoticModel::Delta::constant
                                                : AsymptoticModel::Delta::linear;
    const std::vector<Rational> grid = parse_x_list(
        xs, {Rational(100, 1), Rational(1000, 1), Rational(10000, 1)});
    const std::vector<ProbeRow> rows = asymptotic_probe(cache, model.applies_to, grid, model, cfg);
    std::string text;
    if (format == "json") text = probe_json(rows);
    else if (format == "table") text = probe_table(rows);
    else text = probe_csv(rows);
    emit(text, out_path);
    return kExitPass;
}

// ------------------------------------------------------------- selftest ----

struct JobResult {
    std::string text;
    bool pass = true;
};

std::vector<JobResult> run_jobs(const std::vector<std::function<JobResult()>>& jobs, int threads) {
    std::vector<JobResult> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            try {
                results[i] = jobs[i]();
            } catch (const std::exception& e) {
                results[i] = JobResult{std::string("ERROR ") + e.what() + "\n", false};
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return results;
}

JobResult report_job(const IdentityReport& rep, bool extra_ok = true) {
    JobResult r;
    r.text = reports_table({rep});
    r.pass = rep.pass && extra_ok;
    return r;
}

int cmd_selftest(const std::string& zeros_flag, const std::string& out_path, int threads) {
    TableCache cache;
    const ZeroTable zeros = load_zeros(resolve_zeros_path(zeros_flag));

    VerifyConfig big;
    big.n_max = 10000000;
    big.zeros = &zeros;
    big.k_max = 80;

    // Deterministic random trial inputs, generated up front so thread
    // scheduling cannot reorder draws.
    std::mt19937 rng(0x5eed1e55);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    struct Trial {
        FnTable F;
        Rational x{1, 4};
    };
    std::vector<Trial> trials(100);
    for (Trial& tr : trials) {
        tr.F.fn_id = FnId::custom;
        tr.F.limit = 512;
        tr.F.values.assign(513, 0.0);
        for (std::int64_t n = 1; n <= 512; ++n)
            tr.F.values[static_cast<std::size_t>(n)] = dist(rng);
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 64);
        std::int64_t p = static_cast<std::int64_t>(rng() % static_cast<unsigned long>(4 * q + 1)) -
                         2 * q;
        tr.x = Rational(p, q);
    }

    std::vector<std::function<JobResult()>> jobs;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> groups; // criterion -> job span

    auto begin_group = [&](int criterion) { groups.push_back({criterion, {jobs.size(), 0}}); };
    auto end_group = [&] { groups.back().second.second = jobs.size(); };

    // Criterion 1: explicit formula at x in {2, 5, 10}.
    begin_group(1);
    {
        const double tols[3] = {5e-3, 1e-3, 5e-4};
        const std::int64_t xs[3] = {2, 5, 10};
        for (int i = 0; i < 3; ++i) {
            const Rational x(xs[i], 1);
            const double tol = tols[i];
            jobs.push_back([&cache, &big, x, tol] {
                IdentityReport rep = verify_popov(cache, x, big);
                return report_job(rep, rep.residual <= tol);
            });
        }
    }
    end_group();

    // Criterion 2: series identity, three functions, four rationals, 10^7.
    begin_group(2);
    for (const FnId fn : {FnId::von_mangoldt, FnId::moebius, FnId::liouville}) {
        const double tol = fn == FnId::von_mangoldt ? 1e-5 : 1e-6;
        for (const Rational x : {Rational(2, 1), Rational(5, 2), Rational(7, 3), Rational(15, 2)}) {
            jobs.push_back([&cache, &big, fn, x, tol] {
                IdentityReport rep = verify_theorem11(cache, fn, x, big);
                // The combined bound is rigorous here; both gates must hold.
                return report_job(rep, rep.residual <= tol && !rep.bound_is_heuristic);
            });
        }
    }
    end_group();

    // Criterion 3: cross-check against half the explicit-formula side,
    // residual within the zero-sum tail estimate alone.
    begin_group(3);
    for (const std::int64_t xi : {2, 5, 10}) {
        jobs.push_back([&cache, &big, &zeros, xi] {
            const Rational x(xi, 1);
            IdentityReport rep = cross_check_popov_thm11(cache, x, big);
            const double zero_tail = popov_zero_sum(x.to_double(), zeros).tail_bound;
            return report_job(rep, rep.residual <= zero_tail);
        });
    }
    end_group();

    // Criterion 4: sawtooth-square identity plus the exact integer collapse.
    begin_group(4);
    for (const FnId fn : {FnId::moebius, FnId::liouville}) {
        for (const Rational x : {Rational(1, 3), Rational(1, 2), Rational(5, 2)}) {
            jobs.push_back([&cache, &big, fn, x] {
                IdentityReport rep = verify_theorem12(cache, fn, x, big);
                return report_job(rep, rep.residual <= 1e-6);
            });
        }
    }
    jobs.push_back([&cache, &big] {
        IdentityReport rep = verify_theorem12(cache, FnId::moebius, Rational(7, 1), big);
        return report_job(rep, rep.lhs == 0.0 && rep.rhs == 0.0);
    });
    end_group();

    // Criterion 5: double-angle structural agreement on random tables, and
    // the delta_1 collapse of the Moebius sawtooth series with (C,1) means.
    begin_group(5);
    jobs.push_back([&trials] {
        double worst = 0.0;
        for (const Trial& tr : trials) {
            TruncationSpec t;
            t.n_max = tr.F.limit;
            const SeriesValue a = davenport_sine(tr.F, tr.x, t);
            const SeriesValue b = sincos_series(tr.F, tr.x, t);
            const double rel =
                std::fabs(a.value - b.value) / std::max({std::fabs(a.value), std::fabs(b.value), 1e-15});
            worst = std::max(worst, rel);
        }
        JobResult r;
        r.pass = worst <= 1e-12;
        r.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " structural sincos-vs-sine max_rel_diff=" + fmtg(worst) + " over 100 trials\n";
        return r;
    });
    for (const Rational x : {Rational(1, 10), Rational(3, 10), Rational(7, 10)}) {
        jobs.push_back([&cache, x] {
            const FnTable& mu = cache.table(FnId::moebius, 1000000);
            const double target = -sin2pi(x) / M_PI;
            double prev = 0.0;
            bool monotone = true;
            double err = 0.0;
            std::string errs;
            for (const std::int64_t n_max : {10000, 100000, 1000000}) {
                TruncationSpec t;
                t.n_max = n_max;
                t.method = SumMethod::cesaro;
                t.cesaro_block = n_max; // full-prefix (C,1) mean
                err = std::fabs(frac_series_lhs(mu, x, t).value - target);
                if (!errs.empty() && err > prev) monotone = false;
                errs += (errs.empty() ? "" : " -> ") + fmtg(err);
                prev = err;
            }
            JobResult r;
            r.pass = monotone && err <= 1e-2;
            r.text = std::string(r.pass ? "PASS" : "FAIL") + " mu-collapse x=" + x.str() +
                     " |lhs + sin(2 pi x)/pi| = " + errs + "\n";
            return r;
        });
    }
    end_group();

    // Criterion 6: quadrature orthogonality, the weighted sine-cosine
    // integral, and the two closed-form trigonometric sums.
    begin_group(6);
    jobs.push_back([] {
        double worst = 0.0;
        for (int n = 1; n <= 8; ++n)
            for (int m = 1; m <= 8; ++m)
                worst = std::max(worst, verify_lemma31(n, m).residual);
        JobResult r;
        r.pass = worst <= 1e-10;
        r.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " orthogonality n,m<=8 max_residual=" + fmtg(worst) + "\n";
        return r;
    });
    jobs.push_back([] {
        double worst = 0.0;
        for (int N = 1; N <= 6; ++N)
            for (int m = 1; m <= 24; ++m)
                worst = std::max(worst, verify_eq34(N, m).residual);
        JobResult r;
        r.pass = worst <= 1e-9;
        r.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " sawtooth-sincos integral N<=6,m<=24 max_residual=" + fmtg(worst) + "\n";
        return r;
    });
    jobs.push_back([] {
        double worst = 0.0;
        for (std::int64_t N = 1; N <= 100; ++N)
            for (std::int64_t n = 1; n <= 300; ++n) {
                const double closed = (n % N == 0) ? static_cast<double>(N) : 0.0;
                worst = std::max(worst, std::fabs(ramanujan_cos_sum(N, n) - closed));
            }
        JobResult r;
        r.pass = worst <= 1e-9;
        r.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " cosine sum N<=100,n<=300 max_err=" + fmtg(worst) + "\n";
        return r;
    });
    jobs.push_back([] {
        double worst = 0.0;
        for (std::int64_t N = 1; N <= 100; ++N)
            for (std::int64_t m = 1; m <= 300; ++m) {
                const double closed = (m % N == 0) ? 0.0 : static_cast<double>(N) / 2.0;
                worst = std::max(worst, std::fabs(sin2_sum(N, m) - closed));
            }
        JobResult r;
        r.pass = worst <= 1e-9;
        r.text = std::string(r.pass ? "PASS" : "FAIL") +
                 " sine-square sum N<=100,m<=300 max_err=" + fmtg(worst) + "\n";
        return r;
    });
    end_group();

    // Criterion 7: summation-by-parts residual for the three built-in phi.
    begin_group(7);
    for (const auto kind : {PhiSpec::Kind::square, PhiSpec::Kind::sine, PhiSpec::Kind::cubic}) {
        for (const auto& [a, b] : {std::pair<double, double>{0, 3}, {0.5, 2.5}, {0, 10}}) {
            jobs.push_back([kind, a, b] {
                IdentityReport rep = verify_lemma32(kind, a, b);
                return report_job(rep, rep.residual <= 1e-9);
            });
        }
    }
    end_group();

    // Criterion 8: vanishing family sums.
    begin_group(8);
    {
        FineSpec d2spec;
        d2spec.family = FineSpec::Family::d2;
        d2spec.base_fn = FnId::liouville;
        d2spec.chi.m = 4;
        d2spec.chi.l = 2;
        for (const std::int64_t N : {3, 5, 7, 9, 11}) {
            jobs.push_back([&cache, d2spec, N] {
                const FnTable& lam = cache.table(FnId::liouville, 10000000);
                TruncationSpec t;
                t.n_max = 10000000;
                FineReport rep = fine_sum(d2spec, lam, N, t, "collapsed");
                JobResult r;
                r.pass = std::fabs(rep.value) <= 1e-5;
                r.text = (r.pass ? "PASS " : "FAIL ") + fine_table(FineScan{{rep}, 1, r.pass ? 1 : 0, 0, 0});
                return r;
            });
        }
        jobs.push_back([&cache, d2spec] {
            const FnTable& lam = cache.table(FnId::liouville, 1000000);
            TruncationSpec t;
            t.n_max = 1000000;
            const FineReport br = fine_sum(d2spec, lam, 3, t, "brute");
            const FineReport co = fine_sum(d2spec, lam, 3, t, "collapsed");
            const double diff = std::fabs(br.value - co.value);
            JobResult r;
            r.pass = diff <= br.bound + co.bound;
            r.text = std::string(r.pass ? "PASS" : "FAIL") + " d2 brute-vs-collapsed N=3 diff=" +
                     fmtg(diff) + " combined_bound=" + fmtg(br.bound + co.bound) + "\n";
            return r;
        });
        FineSpec d1spec;
        d1spec.family = FineSpec::Family::d1;
        d1spec.base_fn = FnId::liouville;
        d1spec.chi.m = 2;
        d1spec.chi.l = 2;
        for (const std::int64_t N : {3, 5, 7, 9, 11}) {
            jobs.push_back([&cache, d1spec, N] {
                const FnTable& lam = cache.table(FnId::liouville, 10000000);
                TruncationSpec t;
                t.n_max = 10000000;
                FineReport rep = fine_sum(d1spec, lam, N, t, "collapsed");
                JobResult r;
                r.pass = std::fabs(rep.value) <= 1e-5;
                r.text = (r.pass ? "PASS " : "FAIL ") + fine_table(FineScan{{rep}, 1, r.pass ? 1 : 0, 0, 0});
                return r;
            });
        }
        for (const FnId fn : {FnId::moebius, FnId::liouville}) {
            for (const int m : {1, 2, 3}) {
                jobs.push_back([&cache, fn, m] {
                    FineSpec spec;
                    spec.family = FineSpec::Family::cos_power;
                    spec.base_fn = fn;
                    spec.power = m;
                    const FnTable& table = cache.table(fn, 1000000);
                    double prev = 0.0;
                    bool monotone = true;
                    double last = 0.0;
                    std::string vals;
                    for (const std::int64_t n_max : {10000, 100000, 1000000}) {
                        TruncationSpec t;
                        t.n_max = n_max;
                        t.method = SumMethod::cesaro;
                        t.cesaro_block = n_max;
                        last = std::fabs(fine_sum(spec, table, 5, t, "collapsed").value);
                        if (!vals.empty() && last > prev) monotone = false;
                        vals += (vals.empty() ? "" : " -> ") + fmtg(last);
                        prev = last;
                    }
                    JobResult r;
                    r.pass = monotone && last <= 5e-2;
                    r.text = std::string(r.pass ? "PASS" : "FAIL") + " cos_power m=" +
                             std::to_string(m) + " f=" + fn_name(fn) + " N=5 |sum| = " + vals + "\n";
                    return r;
                });
            }
        }
        for (const std::int64_t N : {4, 8}) { // non-coprime controls: reported only
            jobs.push_back([&cache, d2spec, N] {
                const FnTable& lam = cache.table(FnId::liouville, 1000000);
                TruncationSpec t;
                t.n_max = 1000000;
                FineReport rep = fine_sum(d2spec, lam, N, t, "collapsed");
                const int small = std::fabs(rep.value) <= std::max(rep.bound, 1e-14) ? 1 : 0;
                JobResult r;
                r.pass = true;
                r.text = "INFO " + fine_table(FineScan{{rep}, 0, 0, 1, small});
                return r;
            });
        }
    }
    end_group();

    // Criterion 9: audits. Reported, never asserted.
    begin_group(9);
    jobs.push_back([&cache] {
        FineSpec spec;
        spec.family = FineSpec::Family::d1;
        spec.base_fn = FnId::moebius;
        spec.chi.m = 5;
        spec.chi.l = 2;
        const FnTable& mu = cache.table(FnId::moebius, 10000000);
        TruncationSpec t;
        t.n_max = 10000000;
        const FineScan scan = fine_scan(spec, mu, 1, 6, t, "collapsed");
        return JobResult{"audit d1(moebius,5,2) scan N=1..6 (base not completely multiplicative):\n" +
                             fine_table(scan),
                         true};
    });
    jobs.push_back([&cache] {
        FineSpec spec;
        spec.family = FineSpec::Family::d2;
        spec.base_fn = FnId::liouville;
        spec.chi.m = 4;
        spec.chi.l = 2;
        const FnTable& lam = cache.table(FnId::liouville, 1000000);
        TruncationSpec t;
        t.n_max = 1000000;
        const FineReport corr = fine_sum(spec, lam, 3, t, "collapsed");
        spec.chi.convention = ChiVariant::Convention::literal;
        const FineReport lit = fine_sum(spec, lam, 3, t, "collapsed");
        return JobResult{"audit chi convention d2(liouville,4,2) N=3: corrected=" + fmtg(corr.value) +
                             " literal=" + fmtg(lit.value) + "\n",
                         true};
    });
    jobs.push_back([&cache] {
        FineSpec spec;
        spec.family = FineSpec::Family::cos_power;
        spec.base_fn = FnId::moebius;
        spec.power = 1;
        const FnTable& mu = cache.table(FnId::moebius, 100000);
        TruncationSpec t;
        t.n_max = 100000;
        t.method = SumMethod::cesaro;
        t.cesaro_block = 100000;
        const FineReport two = fine_sum(spec, mu, 5, t, "brute");
        spec.frequency = FineSpec::Frequency::pi_literal;
        const FineReport lit = fine_sum(spec, mu, 5, t, "brute");
        return JobResult{"audit frequency cos_power(moebius,m=1) N=5 brute: two_pi=" +
                             fmtg(two.value) + " pi_literal=" + fmtg(lit.value) + "\n",
                         true};
    });
    jobs.push_back([&cache, &big] {
        const std::vector<ProbeRow> rows =
            asymptotic_probe(cache, FnId::von_mangoldt,
                             {Rational(100, 1), Rational(1000, 1), Rational(10000, 1)},
                             AsymptoticModel{}, big);
        return JobResult{"audit asymptotic probe f=von_mangoldt:\n" + probe_table(rows), true};
    });
    end_group();

    const std::vector<JobResult> results = run_jobs(jobs, threads);

    std::ostringstream out;
    int asserted = 0, passed = 0;
    for (const auto& [criterion, span] : groups) {
        out << "== criterion " << criterion << " ==\n";
        bool group_pass = true;
        for (std::size_t i = span.first; i < span.second; ++i) {
            out << results[i].text;
            group_pass = group_pass && results[i].pass;
        }
        if (criterion == 9) {
            out << "criterion 9: REPORTED (audit, no assertion)\n";
        } else {
            ++asserted;
            if (group_pass) ++passed;
            out << "criterion " << criterion << ": " << (group_pass ? "PASS" : "FAIL") << "\n";
        }
    }
    out << "selftest: " << passed << "/" << asserted << " asserted criteria passed\n";
    emit(out.str(), out_path);
    return passed == asserted ? kExitPass : kExitResidualFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of Davenport-expansion and explicit-formula identities"};
    app.require_subcommand(1);

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "emit a sieved function table as CSV");
    std::string sieve_fn = "moebius";
    std::int64_t sieve_limit = 1000;
    std::string sieve_out;
    sieve_cmd->add_option("--fn", sieve_fn, "function: von_mangoldt|moebius|liouville|unit");
    sieve_cmd->add_option("--limit", sieve_limit, "table limit")->check(CLI::PositiveNumber);
    sieve_cmd->add_option("--out", sieve_out, "output file (default stdout)");

    // verify
    VerifyArgs v;
    auto* verify_cmd = app.add_subcommand("verify", "verify an identity on an x grid");
    verify_cmd->add_option("identity", v.identity,
                           "popov|thm11|thm12|thm31|lemma31|lemma32|eq34|cross")
        ->required();
    verify_cmd->add_option("--fn", v.fn, "base function");
    verify_cmd->add_option("--x", v.xs, "evaluation points, rational p/q or decimal (repeatable)");
    verify_cmd->add_option("--nmax", v.n_max, "series truncation");
    verify_cmd->add_option("--kmax", v.k_max, "trivial-series depth");
    verify_cmd->add_option("--zeros", v.zeros, "zero-table path (default $DAVENPORT_ZEROS or bundled)");
    verify_cmd->add_option("--method", v.sum_method, "summation: direct|cesaro");
    verify_cmd->add_option("--cesaro-block", v.cesaro_block, "(C,1) averaging window");
    verify_cmd->add_option("--n", v.n, "lemma31 first index");
    verify_cmd->add_option("--m", v.m, "lemma31 second index / eq34 trig frequency");
    verify_cmd->add_option("--N", v.N34, "eq34 sawtooth frequency");
    verify_cmd->add_option("--phi", v.phi, "lemma32 test function: square|sine|cubic");
    verify_cmd->add_option("--a", v.a, "lemma32 interval start");
    verify_cmd->add_option("--b", v.b, "lemma32 interval end");
    verify_cmd->add_option("--format", v.format, "json|csv|table");
    verify_cmd->add_option("--out", v.out, "output file (default stdout)");
    verify_cmd->add_option("--csv", v.csv, "custom function table CSV (fn=custom)");
    verify_cmd->add_flag("--cm", v.csv_cm, "declare the custom table completely multiplicative");

    // fine
    FineArgs f;
    auto* fine_cmd = app.add_subcommand("fine", "scan a vanishing-sum family over N");
    fine_cmd->add_option("--family", f.family, "cos_power|sin_even_power|d1|d2");
    fine_cmd->add_option("--f", f.fn, "base function");
    fine_cmd->add_option("--power", f.power, "trig power (cos/sin families)");
    fine_cmd->add_option("--m", f.m, "modulus (d1/d2)");
    fine_cmd->add_option("--l", f.l, "exponent (d1/d2)");
    fine_cmd->add_option("--chi", f.chi, "weight convention: corrected|literal");
    fine_cmd->add_option("--frequency", f.frequency, "two_pi|pi_literal");
    fine_cmd->add_option("--N", f.range, "N or N_lo..N_hi");
    fine_cmd->add_option("--method", f.method, "brute|collapsed");
    fine_cmd->add_option("--nmax", f.n_max, "series truncation");
    fine_cmd->add_option("--sum", f.sum_method, "summation: direct|cesaro");
    fine_cmd->add_option("--cesaro-block", f.cesaro_block, "(C,1) averaging window");
    fine_cmd->add_option("--format", f.format, "json|csv|table");
    fine_cmd->add_option("--out", f.out, "output file (default stdout)");
    fine_cmd->add_option("--csv", f.csv, "custom function table CSV (fn=custom)");
    fine_cmd->add_flag("--cm", f.csv_cm, "declare the custom table completely multiplicative");

    // asymptotic
    std::string as_fn = "von_mangoldt", as_model = "linear", as_format = "csv", as_out;
    std::vector<std::string> as_xs;
    std::int64_t as_nmax = 10000000;
    auto* asym_cmd = app.add_subcommand("asymptotic", "emit the normalization probe table");
    asym_cmd->add_option("--fn", as_fn, "base function");
    asym_cmd->add_option("--x", as_xs, "grid points (repeatable)");
    asym_cmd->add_option("--model", as_model, "linear|constant");
    asym_cmd->add_option("--nmax", as_nmax, "series truncation");
    asym_cmd->add_option("--format", as_format, "json|csv|table");
    asym_cmd->add_option("--out", as_out, "output file (default stdout)");

    // selftest
    std::string st_zeros, st_out;
    int st_threads = 1;
    auto* self_cmd = app.add_subcommand("selftest", "run the full verification grid");
    self_cmd->add_option("--zeros", st_zeros, "zero-table path");
    self_cmd->add_option("--out", st_out, "output file (default stdout)");
    self_cmd->add_option("--threads", st_threads, "worker threads (output is order-stable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*sieve_cmd) return cmd_sieve(sieve_fn, sieve_limit, sieve_out);
        if (*verify_cmd) return cmd_verify(v);
        if (*fine_cmd) return cmd_fine(f);
        if (*asym_cmd) return cmd_asymptotic(as_fn, as_xs, as_model, as_nmax, as_format, as_out);
        if (*self_cmd) return cmd_selftest(st_zeros, st_out, st_threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
