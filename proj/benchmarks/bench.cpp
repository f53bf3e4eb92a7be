#include <benchmark/benchmark.h>

#include "blockers/cardinality.hpp"
#include "blockers/oracle.hpp"
#include "blockers/permutation.hpp"
#include "blockers/position_set.hpp"
#include "blockers/rank.hpp"
#include "blockers/search.hpp"

namespace {

void BM_enumerate_avoiders(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto list = blockers::enumerate_avoiders(n);
        benchmark::DoNotOptimize(list);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(blockers::catalan(n)));
}
BENCHMARK(BM_enumerate_avoiders)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_is_blocker(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const blockers::PositionSet B =
        blockers::flag_positions(blockers::FlagSpec{n, (n + 1) / 2, (n - 1) / 2});
    blockers::avoider_list(n); // pay memoization outside the loop
    for (auto _ : state) {
        auto verdict = blockers::is_blocker(B);
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_is_blocker)->Arg(6)->Arg(8)->Arg(10);

void BM_is_minimum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const blockers::PositionSet B =
        blockers::flag_positions(blockers::FlagSpec{n, (n + 1) / 2, (n - 1) / 2});
    blockers::avoider_list(n);
    for (auto _ : state) {
        bool minimum = blockers::is_minimum(B);
        benchmark::DoNotOptimize(minimum);
    }
}
BENCHMARK(BM_is_minimum)->Arg(6)->Arg(8);

void BM_face_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const blockers::FlagSpec spec{n, (n + 1) / 2, (n - 1) / 2};
    blockers::avoider_list(n);
    for (auto _ : state) {
        auto report = blockers::face_rank(spec);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_face_rank)->Arg(5)->Arg(6)->Arg(7);

void BM_ambient_rank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& list = blockers::avoider_list(n);
    for (auto _ : state) {
        int rank = blockers::rank_of_matrices(list, n);
        benchmark::DoNotOptimize(rank);
    }
}
BENCHMARK(BM_ambient_rank)->Arg(6)->Arg(7)->Arg(8);

void BM_search(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    blockers::avoider_list(n);
    for (auto _ : state) {
        blockers::SearchConfig cfg;
        cfg.n = n;
        auto outcome = blockers::enumerate_minimum_blockers(cfg);
        benchmark::DoNotOptimize(outcome);
        state.counters["nodes"] = static_cast<double>(outcome.nodes_expanded);
    }
}
BENCHMARK(BM_search)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_conjecture_probe(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    blockers::avoider_list(n);
    for (auto _ : state) {
        auto report = blockers::conjecture_probe(n);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_conjecture_probe)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
