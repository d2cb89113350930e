#include <benchmark/benchmark.h>

#include <cstdint>

#include "davenport/fine.hpp"
#include "davenport/fn_table.hpp"
#include "davenport/rational.hpp"
#include "davenport/series.hpp"
#include "davenport/zeros.hpp"

using namespace davenport;

namespace {

// Shared fixtures built once; benchmarks time evaluation, not table setup.
const FnTable& moebius_table(std::int64_t limit) {
    static const FnTable t = sieve(FnId::moebius, 10000000);
    (void)limit;
    return t;
}

const FnTable& von_mangoldt_F(std::int64_t limit) {
    static const FnTable t = divisor_sum_table(sieve(FnId::von_mangoldt, 10000000));
    (void)limit;
    return t;
}

const ZeroTable& zeros100() {
    static const ZeroTable z = load_zeros(DAVENPORT_DATA_DIR "/zeros100.txt");
    return z;
}

} // namespace

static void BM_sieve_moebius(benchmark::State& state) {
    const std::int64_t limit = state.range(0);
    for (auto _ : state) {
        FnTable t = sieve(FnId::moebius, limit);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_sieve_moebius)->Arg(100000)->Arg(1000000);

static void BM_sieve_von_mangoldt(benchmark::State& state) {
    const std::int64_t limit = state.range(0);
    for (auto _ : state) {
        FnTable t = sieve(FnId::von_mangoldt, limit);
        benchmark::DoNotOptimize(t.values.data());
    }
    state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_sieve_von_mangoldt)->Arg(100000)->Arg(1000000);

static void BM_divisor_sum(benchmark::State& state) {
    const std::int64_t limit = state.range(0);
    const FnTable base = sieve(FnId::moebius, limit);
    for (auto _ : state) {
        FnTable F = divisor_sum_table(base);
        benchmark::DoNotOptimize(F.values.data());
    }
    state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_divisor_sum)->Arg(100000)->Arg(1000000);

static void BM_theorem11_lhs(benchmark::State& state) {
    const FnTable& f = moebius_table(state.range(0));
    TruncationSpec t;
    t.n_max = state.range(0);
    const Rational x(5, 2);
    for (auto _ : state) {
        const SeriesValue v = theorem11_lhs(f, x, t);
        benchmark::DoNotOptimize(v.value);
    }
    state.SetItemsProcessed(state.iterations() * t.n_max);
}
BENCHMARK(BM_theorem11_lhs)->Arg(1000000)->Arg(10000000);

static void BM_cosine_term(benchmark::State& state) {
    const FnTable& F = von_mangoldt_F(state.range(0));
    TruncationSpec t;
    t.n_max = state.range(0);
    const Rational x(5, 2);
    for (auto _ : state) {
        const SeriesValue v = cosine_term(F, x, t);
        benchmark::DoNotOptimize(v.value);
    }
    state.SetItemsProcessed(state.iterations() * t.n_max);
}
BENCHMARK(BM_cosine_term)->Arg(1000000)->Arg(10000000);

static void BM_frac_series_cesaro(benchmark::State& state) {
    const FnTable& f = moebius_table(state.range(0));
    TruncationSpec t;
    t.n_max = state.range(0);
    t.method = SumMethod::cesaro;
    t.cesaro_block = t.n_max;
    const Rational x(3, 10);
    for (auto _ : state) {
        const SeriesValue v = frac_series_lhs(f, x, t);
        benchmark::DoNotOptimize(v.value);
    }
    state.SetItemsProcessed(state.iterations() * t.n_max);
}
BENCHMARK(BM_frac_series_cesaro)->Arg(1000000);

static void BM_popov_zero_sum(benchmark::State& state) {
    const ZeroTable& z = zeros100();
    for (auto _ : state) {
        const SeriesValue v = popov_zero_sum(10.0, z);
        benchmark::DoNotOptimize(v.value);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(z.ordinates.size()));
}
BENCHMARK(BM_popov_zero_sum);

static void BM_popov_trivial_sum(benchmark::State& state) {
    const int k_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const SeriesValue v = popov_trivial_sum(10.0, k_max);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(BM_popov_trivial_sum)->Arg(20)->Arg(80);

static void BM_dirichlet_partial(benchmark::State& state) {
    const FnTable& f = moebius_table(state.range(0));
    const std::int64_t n_max = state.range(0);
    for (auto _ : state) {
        const SeriesValue v = dirichlet_partial(f, 2.0, n_max);
        benchmark::DoNotOptimize(v.value);
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(BM_dirichlet_partial)->Arg(1000000);

static void BM_fine_sum_collapsed(benchmark::State& state) {
    static const FnTable lam = sieve(FnId::liouville, 10000000);
    FineSpec d2;
    d2.family = FineSpec::Family::d2;
    d2.base_fn = FnId::liouville;
    d2.chi.m = 4;
    d2.chi.l = 2;
    TruncationSpec t;
    t.n_max = state.range(0);
    for (auto _ : state) {
        const FineReport rep = fine_sum(d2, lam, 3, t, "collapsed");
        benchmark::DoNotOptimize(rep.value);
    }
}
BENCHMARK(BM_fine_sum_collapsed)->Arg(1000000)->Arg(10000000);

BENCHMARK_MAIN();
