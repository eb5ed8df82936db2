#include <benchmark/benchmark.h>

#include <ppower/delsarte.hpp>
#include <ppower/krawtchouk.hpp>
#include <ppower/power.hpp>
#include <ppower/ramsey.hpp>
#include <ppower/search.hpp>
#include <ppower/spectral.hpp>

using namespace ppower;

namespace {

void BM_materialize_power(benchmark::State& state) {
    Graph k3 = Graph::complete(3);
    unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Graph power = p_power(k3, {k, 3});
        benchmark::DoNotOptimize(power.edge_count());
    }
}
BENCHMARK(BM_materialize_power)->Arg(4)->Arg(6)->Arg(8);

void BM_max_independent_set(benchmark::State& state) {
    Graph power = p_power(Graph::complete(3), {static_cast<unsigned>(state.range(0)), 3});
    for (auto _ : state) {
        auto result = max_independent_set(power);
        benchmark::DoNotOptimize(result.optimum);
    }
}
BENCHMARK(BM_max_independent_set)->Arg(4)->Arg(5);

void BM_divisible_code_search(benchmark::State& state) {
    for (auto _ : state) {
        auto result = divisible_code_search(2, static_cast<unsigned>(state.range(0)), 3);
        benchmark::DoNotOptimize(result.optimum);
    }
}
BENCHMARK(BM_divisible_code_search)->Arg(8)->Arg(10);

void BM_krawtchouk_table(benchmark::State& state) {
    for (auto _ : state) {
        auto table = KrawtchoukTable::build(3, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(table.values.size());
    }
}
BENCHMARK(BM_krawtchouk_table)->Arg(16)->Arg(64);

void BM_lp_bound(benchmark::State& state) {
    unsigned k = static_cast<unsigned>(state.range(0));
    std::set<unsigned> allowed;
    for (unsigned d = 3; d <= k; d += 3) allowed.insert(d);
    for (auto _ : state) {
        Rat bound = lp_bound(2, k, allowed);
        benchmark::DoNotOptimize(bound);
    }
}
BENCHMARK(BM_lp_bound)->Arg(12)->Arg(18);

void BM_power_spectrum(benchmark::State& state) {
    auto base = base_spectral_data(Graph::petersen());
    for (auto _ : state) {
        auto spec = power_spectrum(base, static_cast<unsigned>(state.range(0)), 3);
        benchmark::DoNotOptimize(spec.entries.size());
    }
}
BENCHMARK(BM_power_spectrum)->Arg(3)->Arg(5);

void BM_rank_certificate(benchmark::State& state) {
    Graph k3 = Graph::complete(3);
    Graph power = p_power(k3, {4, 3});
    auto mis = max_independent_set(power);
    TupleCodec codec(3, 4);
    std::vector<VertexTuple> tuples;
    for (auto idx : mis.witness) tuples.push_back(codec.decode(idx));
    for (auto _ : state) {
        auto gram = gram_from_power(k3, 4, 3, tuples, 0);
        auto cert = rank_certificate(gram, {EntrywiseFilter::independence, 4, 3});
        benchmark::DoNotOptimize(cert.full_rank);
    }
}
BENCHMARK(BM_rank_certificate);

}  // namespace

BENCHMARK_MAIN();
