#include <benchmark/benchmark.h>

#include <cstdint>

#include "fibtree/navigation.hpp"
#include "fibtree/numeration.hpp"
#include "fibtree/tiling.hpp"
#include "fibtree/tree.hpp"

namespace {

using namespace fibtree;

void bm_zeck_encode(benchmark::State& state) {
    const Integer value = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zeck_encode(value));
}
BENCHMARK(bm_zeck_encode)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void bm_zeck_decode(benchmark::State& state) {
    const FibCode code = zeck_encode(Integer(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(zeck_decode(code));
}
BENCHMARK(bm_zeck_decode)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void bm_zeck_increment_walk(benchmark::State& state) {
    const std::int64_t steps = state.range(0);
    for (auto _ : state) {
        FibCode code = zeck_encode(1);
        for (std::int64_t i = 0; i < steps; ++i) code = zeck_increment(code);
        benchmark::DoNotOptimize(code);
    }
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(bm_zeck_increment_walk)->Arg(1000)->Arg(100000);

void bm_golden_encode(benchmark::State& state) {
    const Integer value = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(golden_encode(value));
}
BENCHMARK(bm_golden_encode)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void bm_tree_build(benchmark::State& state) {
    const auto depth = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            TreeTable::build(TreeKind::white, depth, BuildLimits{depth}));
}
BENCHMARK(bm_tree_build)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_strip_index(benchmark::State& state) {
    const TreeTable table = TreeTable::build(TreeKind::white, 10);
    const Integer node = table.node_count() - 3;
    for (auto _ : state) benchmark::DoNotOptimize(strip_index(table, node));
}
BENCHMARK(bm_strip_index);

void bm_verify_theorems(benchmark::State& state) {
    const auto depth = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorems(depth, BuildLimits{depth}));
}
BENCHMARK(bm_verify_theorems)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
