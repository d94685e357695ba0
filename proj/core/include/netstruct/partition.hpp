#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netstruct/graph.hpp"

namespace netstruct {

/// Total assignment of nodes to disjoint modules. Module ids are always
/// dense 0..L-1 with no empty module; arbitrary input labels are normalized
/// in first-seen order, which makes construction deterministic.
class Partition {
public:
    Partition() = default;

    /// Normalizes an arbitrary per-node module assignment.
    explicit Partition(std::vector<std::uint32_t> assignment);

    static Partition single_module(NodeId n);
    static Partition singletons(NodeId n);

    NodeId node_count() const noexcept {
        return static_cast<NodeId>(assignment_.size());
    }
    std::uint32_t module_count() const noexcept { return module_count_; }
    std::uint32_t module_of(NodeId v) const { return assignment_[v]; }
    const std::vector<std::uint32_t>& assignment() const noexcept {
        return assignment_;
    }

    /// Nodes grouped per module, ids ascending within each module.
    std::vector<std::vector<NodeId>> modules() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> assignment_;
    std::uint32_t module_count_ = 0;
};

/// Per-module aggregates of a partition against a graph:
/// internal edge counts e_c, volumes V_c, and the crossing edge count m_g.
/// Always satisfies sum(V_c) == 2m and sum(e_c) + crossing == m.
struct PartitionStats {
    std::vector<EdgeCount> internal_edges;
    std::vector<EdgeCount> module_volume;
    EdgeCount crossing_edges = 0;
};

/// Throws std::invalid_argument when partition size != node count.
PartitionStats compute_stats(const Graph& g, const Partition& p);

/// Text format: one "node_id module_id" line per node, sorted by node id.
void write_partition(const Partition& p, std::ostream& out);
std::string write_partition(const Partition& p);
Partition read_partition(std::istream& in);

}  // namespace netstruct
