#include <benchmark/benchmark.h>

#include "biscornu/decoration.hpp"
#include "biscornu/designer.hpp"
#include "biscornu/relax.hpp"
#include "biscornu/subgroups.hpp"

using namespace biscornu;

static void BM_ElementMul(benchmark::State& state) {
    const auto& els = all_elements();
    std::size_t i = 0;
    for (auto _ : state) {
        GroupElement g = element_mul(els[i % 16], els[(i * 7 + 3) % 16]);
        benchmark::DoNotOptimize(g);
        ++i;
    }
}
BENCHMARK(BM_ElementMul);

static void BM_Stabilizer(benchmark::State& state) {
    BiscornuDecoration d{random_chart(8, 0.5, 11), random_chart(8, 0.5, 12)};
    for (auto _ : state) {
        auto stab = stabilizer(d);
        benchmark::DoNotOptimize(stab);
    }
}
BENCHMARK(BM_Stabilizer);

static void BM_SubgroupEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        auto subgroups = enumerate_subgroups();
        benchmark::DoNotOptimize(subgroups);
    }
}
BENCHMARK(BM_SubgroupEnumeration);

static void BM_Hitomezashi(benchmark::State& state) {
    SeedPair seeds;
    seeds.rowSeeds.assign(33, 0);
    seeds.colSeeds.assign(33, 1);
    for (auto _ : state) {
        StitchChart c = hitomezashi(seeds, 32);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_Hitomezashi);

static void BM_RelaxDisks(benchmark::State& state) {
    BoundarySpec disk = boundary_disk(1.0);
    SeamSetup setup = build_dform_sheets(disk, disk, 0.3, 0.25);
    RelaxParams params;
    params.iterations = static_cast<int>(state.range(0));
    for (auto _ : state) {
        EmbeddingResult r = relax(setup.sheets, setup.pairing, params);
        benchmark::DoNotOptimize(r.bendingEnergy);
    }
}
BENCHMARK(BM_RelaxDisks)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
