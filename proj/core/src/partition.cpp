#include "netstruct/partition.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace netstruct {

Partition::Partition(std::vector<std::uint32_t> assignment)
    : assignment_(std::move(assignment)) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (auto& a : assignment_) {
        auto [it, inserted] = remap.try_emplace(a, static_cast<std::uint32_t>(remap.size()));
        a = it->second;
    }
    module_count_ = static_cast<std::uint32_t>(remap.size());
}

Partition Partition::single_module(NodeId n) {
    return Partition(std::vector<std::uint32_t>(n, 0));
}

Partition Partition::singletons(NodeId n) {
    std::vector<std::uint32_t> a(n);
    for (NodeId v = 0; v < n; ++v) a[v] = v;
    return Partition(std::move(a));
}

std::vector<std::vector<NodeId>> Partition::modules() const {
    std::vector<std::vector<NodeId>> out(module_count_);
    for (NodeId v = 0; v < node_count(); ++v) {
        out[assignment_[v]].push_back(v);
    }
    return out;
}

PartitionStats compute_stats(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count()) {
        throw std::invalid_argument("partition size does not match graph");
    }
    PartitionStats stats;
    stats.internal_edges.assign(p.module_count(), 0);
    stats.module_volume.assign(p.module_count(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        stats.module_volume[p.module_of(v)] += g.degree(v);
        for (NodeId w : g.neighbors(v)) {
            if (v < w) {
                if (p.module_of(v) == p.module_of(w)) {
                    ++stats.internal_edges[p.module_of(v)];
                } else {
                    ++stats.crossing_edges;
                }
            }
        }
    }
    return stats;
}

void write_partition(const Partition& p, std::ostream& out) {
    for (NodeId v = 0; v < p.node_count(); ++v) {
        out << v << ' ' << p.module_of(v) << '\n';
    }
}

std::string write_partition(const Partition& p) {
    std::ostringstream out;
    write_partition(p, out);
    return out.str();
}

Partition read_partition(std::istream& in) {
    std::vector<std::pair<NodeId, std::uint32_t>> rows;
    NodeId node;
    std::uint32_t module;
    while (in >> node >> module) rows.emplace_back(node, module);
    std::vector<std::uint32_t> assignment(rows.size(), 0);
    for (const auto& [v, c] : rows) {
        if (v >= rows.size()) {
            throw std::runtime_error("partition file: node id out of range");
        }
        assignment[v] = c;
    }
    return Partition(std::move(assignment));
}

}  // namespace netstruct
