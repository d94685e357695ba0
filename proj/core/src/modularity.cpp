#include "netstruct/modularity.hpp"

#include <span>
#include <stdexcept>

#include "optimizer_support.hpp"

namespace netstruct {

namespace detail {

Partition merge_zero_volume_modules(const Graph& g, Partition p) {
    PartitionStats stats = compute_stats(g, p);
    bool any_zero = false;
    for (EdgeCount vol : stats.module_volume) {
        if (vol == 0) {
            any_zero = true;
            break;
        }
    }
    if (!any_zero) return p;
    std::uint32_t target = 0xffffffffu;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) > 0) {
            target = p.module_of(v);
            break;
        }
    }
    std::vector<std::uint32_t> assignment = p.assignment();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (stats.module_volume[assignment[v]] == 0) assignment[v] = target;
    }
    return Partition(std::move(assignment));
}

double modularity_impl(const Graph& g, std::span<const std::uint32_t> assign,
                       std::uint32_t module_count) {
    const double m = static_cast<double>(g.edge_count());
    const double two_m = 2.0 * m;
    std::vector<double> internal(module_count, 0.0);
    std::vector<double> vol(module_count, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        vol[assign[v]] += g.degree(v);
        for (NodeId w : g.neighbors(v)) {
            if (v < w && assign[v] == assign[w]) internal[assign[v]] += 1.0;
        }
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < module_count; ++c) {
        double share = vol[c] / two_m;
        q += internal[c] / m - share * share;
    }
    return q;
}

}  // namespace detail

double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0) {
        throw std::domain_error("modularity requires at least one edge");
    }
    if (p.node_count() != g.node_count()) {
        throw std::invalid_argument("partition size does not match graph");
    }
    return detail::modularity_impl(g, p.assignment(), p.module_count());
}

PartitionResult maximize_modularity(const Graph& g,
                                    const OptimizeOptions& opts) {
    return detail::best_over_restarts<detail::ModularityObjective>(
        g, opts, /*objective_tag=*/0x6d6f64ULL,
        [](const Graph& gr, const Partition& p) { return modularity(gr, p); });
}

PartitionResult exact_modularity_small(const Graph& g) {
    if (g.node_count() > 10) {
        throw std::domain_error("exact search refuses graphs with n > 10");
    }
    if (g.edge_count() == 0) {
        throw std::domain_error("modularity requires at least one edge");
    }
    std::vector<std::uint32_t> best_assign;
    double best = -2.0;
    detail::for_each_set_partition(
        g.node_count(),
        [&](std::span<const std::uint32_t> assign, std::uint32_t blocks) {
            double q = detail::modularity_impl(g, assign, blocks);
            if (q > best) {
                best = q;
                best_assign.assign(assign.begin(), assign.end());
            }
        });
    return {Partition(std::move(best_assign)), best};
}

}  // namespace netstruct
