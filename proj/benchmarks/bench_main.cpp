#include <benchmark/benchmark.h>

#include "edgering/canonical.hpp"
#include "edgering/cycles.hpp"
#include "edgering/ear_decomposition.hpp"
#include "edgering/families.hpp"
#include "edgering/generate.hpp"
#include "edgering/hilbert.hpp"
#include "edgering/matching.hpp"

using namespace edgering;

static void BM_DilatePoints(benchmark::State& state) {
    EdgePolytope p = EdgePolytope::build(petersen_graph());
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto pts = dilate_points(p, k);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_DilatePoints)->Arg(2)->Arg(4)->Arg(6);

static void BM_InteriorPoints(benchmark::State& state) {
    EdgePolytope p = EdgePolytope::build(wheel_graph(9));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto pts = interior_points(p, k);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_InteriorPoints)->Arg(5)->Arg(7)->Arg(10);

static void BM_SemigroupLevels(benchmark::State& state) {
    EdgePolytope p = EdgePolytope::build(complete_bipartite_graph(4, 4));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SemigroupLevels levels(p);
        benchmark::DoNotOptimize(levels.level(k));
    }
}
BENCHMARK(BM_SemigroupLevels)->Arg(3)->Arg(5);

static void BM_HilbertSummary(benchmark::State& state) {
    Graph g = complete_bipartite_graph(5, 5);
    for (auto _ : state) {
        HilbertSummary s = hilbert_summary(g);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_HilbertSummary);

static void BM_CanonicalSummary(benchmark::State& state) {
    Graph g = wheel_graph(9);
    EdgePolytope p = EdgePolytope::build(g);
    HilbertSummary s = hilbert_summary(p);
    for (auto _ : state) {
        CanonicalSummary c = canonical_summary(p, s);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CanonicalSummary);

static void BM_PhiSearch(benchmark::State& state) {
    Graph g = frak_g_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_bruteforce(g));
    }
}
BENCHMARK(BM_PhiSearch)->Arg(2)->Arg(3);

static void BM_MatchingCovered(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_matching_covered(g));
    }
}
BENCHMARK(BM_MatchingCovered);

static void BM_OddCycleCondition(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(odd_cycle_condition(g));
    }
}
BENCHMARK(BM_OddCycleCondition);

static void BM_ExhaustiveBipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto graphs = connected_bipartite_graphs_up_to(n);
        benchmark::DoNotOptimize(graphs);
    }
}
BENCHMARK(BM_ExhaustiveBipartite)->Arg(6)->Arg(8);

static void BM_FullClassification(benchmark::State& state) {
    Graph g = petersen_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(g));
    }
}
BENCHMARK(BM_FullClassification);

BENCHMARK_MAIN();
