#include "local_moving.hpp"

#include <algorithm>

namespace netstruct::detail {

AggGraph AggGraph::from_graph(const Graph& g) {
    AggGraph agg;
    const NodeId n = g.node_count();
    agg.offsets.assign(n + 1, 0);
    agg.links.reserve(g.volume());
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId w : g.neighbors(v)) agg.links.emplace_back(w, 1.0);
        agg.offsets[v + 1] = agg.links.size();
    }
    agg.self_loop.assign(n, 0.0);
    agg.volume.resize(n);
    for (NodeId v = 0; v < n; ++v) agg.volume[v] = g.degree(v);
    return agg;
}

AggGraph AggGraph::contract(const std::vector<std::uint32_t>& comm,
                            std::uint32_t comm_count) const {
    AggGraph out;
    out.self_loop.assign(comm_count, 0.0);
    out.volume.assign(comm_count, 0.0);

    std::vector<std::vector<std::uint32_t>> members(comm_count);
    for (std::uint32_t u = 0; u < node_count(); ++u) {
        members[comm[u]].push_back(u);
        out.volume[comm[u]] += volume[u];
        out.self_loop[comm[u]] += self_loop[u];
    }

    out.offsets.assign(comm_count + 1, 0);
    std::vector<double> acc(comm_count, 0.0);
    std::vector<std::uint32_t> touched;
    for (std::uint32_t c = 0; c < comm_count; ++c) {
        touched.clear();
        double internal = 0.0;
        for (std::uint32_t u : members[c]) {
            for (const auto& [v, w] : neighbors(u)) {
                std::uint32_t d = comm[v];
                if (d == c) {
                    internal += w;  // both directions, halved below
                } else {
                    if (acc[d] == 0.0) touched.push_back(d);
                    acc[d] += w;
                }
            }
        }
        out.self_loop[c] += internal / 2.0;
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t d : touched) {
            out.links.emplace_back(d, acc[d]);
            acc[d] = 0.0;
        }
        out.offsets[c + 1] = out.links.size();
    }
    return out;
}

}  // namespace netstruct::detail
