#include <benchmark/benchmark.h>

#include <sstream>

#include "netstruct/conductance.hpp"
#include "netstruct/edge_list.hpp"
#include "netstruct/entropy.hpp"
#include "netstruct/generators.hpp"
#include "netstruct/modularity.hpp"

namespace {

using namespace netstruct;

GenSpec er_spec(NodeId n, double p) {
    GenSpec s;
    s.model = Model::er;
    s.n = n;
    s.p = p;
    s.seed = 1;
    return s;
}

GenSpec pa_spec(NodeId n, NodeId d) {
    GenSpec s;
    s.model = Model::pa;
    s.n = n;
    s.d = d;
    s.seed = 1;
    return s;
}

void BM_GenerateEr(benchmark::State& state) {
    GenSpec spec = er_spec(static_cast<NodeId>(state.range(0)), 0.001);
    for (auto _ : state) {
        benchmark::DoNotOptimize(er_graph(spec));
    }
}
BENCHMARK(BM_GenerateEr)->Arg(10000)->Arg(50000);

void BM_GeneratePa(benchmark::State& state) {
    GenSpec spec = pa_spec(static_cast<NodeId>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pa_graph(spec));
    }
}
BENCHMARK(BM_GeneratePa)->Arg(10000)->Arg(50000);

void BM_ParseEdgeList(benchmark::State& state) {
    std::string text = serialize_edge_list(pa_graph(pa_spec(10000, 4)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_edge_list(text));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseEdgeList);

void BM_Modularity(benchmark::State& state) {
    Graph g = pa_graph(pa_spec(10000, 4));
    Partition p = maximize_modularity(g, {1, 1, 1}).partition;
    for (auto _ : state) {
        benchmark::DoNotOptimize(modularity(g, p));
    }
}
BENCHMARK(BM_Modularity);

void BM_MaximizeModularity(benchmark::State& state) {
    Graph g = er_graph(er_spec(static_cast<NodeId>(state.range(0)), 8.0 / state.range(0)));
    OptimizeOptions opts;
    opts.restarts = 1;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_modularity(g, opts));
    }
}
BENCHMARK(BM_MaximizeModularity)->Arg(2000)->Arg(10000);

void BM_MaximizeEntropyRatio(benchmark::State& state) {
    Graph g = er_graph(er_spec(static_cast<NodeId>(state.range(0)), 8.0 / state.range(0)));
    OptimizeOptions opts;
    opts.restarts = 1;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximize_entropy_ratio(g, opts));
    }
}
BENCHMARK(BM_MaximizeEntropyRatio)->Arg(2000)->Arg(10000);

void BM_DiscoverCommunities(benchmark::State& state) {
    Graph g = pa_graph(pa_spec(static_cast<NodeId>(state.range(0)), 3));
    CommunityBounds b = CommunityBounds::defaults_for(g.node_count());
    DiscoveryOptions opts;
    opts.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(discover_communities(g, b, opts));
    }
}
BENCHMARK(BM_DiscoverCommunities)->Arg(2000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
