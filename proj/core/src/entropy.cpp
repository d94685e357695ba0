#include "netstruct/entropy.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>

#include "optimizer_support.hpp"

namespace netstruct {

namespace detail {

// Returns nullopt when some module has zero volume.
std::optional<double> module_code_length_impl(const Graph& g,
                                              std::span<const std::uint32_t> assign,
                                              std::uint32_t module_count,
                                              ModuleDegree convention) {
    const double m = static_cast<double>(g.edge_count());
    const double two_m = 2.0 * m;

    std::vector<double> vol(module_count, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) vol[assign[v]] += g.degree(v);
    for (double v : vol) {
        if (v == 0.0) return std::nullopt;
    }

    double crossing = 0.0;
    std::vector<std::uint32_t> within;
    if (convention == ModuleDegree::within) within.assign(g.node_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (NodeId w : g.neighbors(v)) {
            if (assign[v] != assign[w]) {
                if (v < w) crossing += 1.0;
            } else if (convention == ModuleDegree::within) {
                ++within[v];
            }
        }
    }

    double node_term = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double d = convention == ModuleDegree::full
                       ? static_cast<double>(g.degree(v))
                       : static_cast<double>(within[v]);
        if (d > 0.0) node_term -= (d / two_m) * std::log2(d / vol[assign[v]]);
    }

    double module_term = 0.0;
    for (std::uint32_t c = 0; c < module_count; ++c) {
        double share = vol[c] / two_m;
        module_term += share * std::log2(share);
    }
    return node_term - (crossing / m) * module_term;
}

std::optional<double> entropy_ratio_impl(const Graph& g,
                                         std::span<const std::uint32_t> assign,
                                         std::uint32_t module_count,
                                         ModuleDegree convention) {
    auto lp = module_code_length_impl(g, assign, module_count, convention);
    if (!lp) return std::nullopt;
    return 1.0 - *lp / uniform_code_length(g);
}

}  // namespace detail

double uniform_code_length(const Graph& g) {
    if (g.edge_count() == 0) {
        throw std::domain_error("code length requires at least one edge");
    }
    const double two_m = static_cast<double>(g.volume());
    double bits = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double d = g.degree(v);
        if (d > 0.0) bits -= (d / two_m) * std::log2(d / two_m);
    }
    return bits;
}

double module_code_length(const Graph& g, const Partition& p,
                          ModuleDegree convention) {
    if (g.edge_count() == 0) {
        throw std::domain_error("code length requires at least one edge");
    }
    if (p.node_count() != g.node_count()) {
        throw std::invalid_argument("partition size does not match graph");
    }
    auto bits = detail::module_code_length_impl(g, p.assignment(),
                                                p.module_count(), convention);
    if (!bits) throw std::domain_error("module with zero volume");
    return *bits;
}

double entropy_ratio(const Graph& g, const Partition& p,
                     ModuleDegree convention) {
    return 1.0 - module_code_length(g, p, convention) / uniform_code_length(g);
}

CodeLengths code_lengths(const Graph& g, const Partition& p,
                         ModuleDegree convention) {
    CodeLengths out;
    out.uniform = uniform_code_length(g);
    out.modular = module_code_length(g, p, convention);
    out.ratio = 1.0 - out.modular / out.uniform;
    return out;
}

PartitionResult maximize_entropy_ratio(const Graph& g,
                                       const OptimizeOptions& opts,
                                       const Partition& modularity_partition) {
    PartitionResult best = detail::best_over_restarts<detail::EntropyObjective>(
        g, opts, /*objective_tag=*/0x656e74ULL,
        [](const Graph& gr, const Partition& p) { return entropy_ratio(gr, p); });
    double on_modularity = entropy_ratio(g, modularity_partition);
    if (on_modularity > best.score) {
        return {modularity_partition, on_modularity};
    }
    return best;
}

PartitionResult maximize_entropy_ratio(const Graph& g,
                                       const OptimizeOptions& opts) {
    return maximize_entropy_ratio(g, opts, maximize_modularity(g, opts).partition);
}

PartitionResult exact_entropy_small(const Graph& g) {
    if (g.node_count() > 10) {
        throw std::domain_error("exact search refuses graphs with n > 10");
    }
    if (g.edge_count() == 0) {
        throw std::domain_error("code length requires at least one edge");
    }
    std::vector<std::uint32_t> best_assign;
    double best = -1e300;
    detail::for_each_set_partition(
        g.node_count(),
        [&](std::span<const std::uint32_t> assign, std::uint32_t blocks) {
            auto tau = detail::entropy_ratio_impl(g, assign, blocks,
                                                  ModuleDegree::full);
            if (tau && *tau > best) {
                best = *tau;
                best_assign.assign(assign.begin(), assign.end());
            }
        });
    if (best_assign.empty()) {
        throw std::domain_error("no partition without zero-volume modules");
    }
    return {Partition(std::move(best_assign)), best};
}

}  // namespace netstruct
