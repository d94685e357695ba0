#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netstruct {

using NodeId = std::uint32_t;
using EdgeCount = std::uint64_t;

/// Immutable undirected simple graph with dense node ids 0..n-1.
///
/// Adjacency is stored in CSR form with sorted neighbor lists. Construction
/// drops self-loops and collapses duplicate edges, so every instance
/// satisfies: symmetric adjacency, no self-loops, no parallel edges,
/// sum(degree) == 2m. Instances are immutable and safe to share across
/// threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n nodes from an arbitrary edge list (both endpoint
    /// ids must be < n). Self-loops are dropped, duplicates and reversed
    /// pairs collapse to one undirected edge. `labels`, when non-empty, maps
    /// each dense id back to the external id it came from (size must be n).
    static Graph build(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                       std::vector<std::string> labels = {});

    NodeId node_count() const noexcept { return n_; }
    EdgeCount edge_count() const noexcept { return m_; }

    NodeId degree(NodeId v) const {
        return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    /// Total degree over all nodes; equals 2m.
    EdgeCount volume() const noexcept { return 2 * m_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::string& label(NodeId v) const { return labels_[v]; }

private:
    NodeId n_ = 0;
    EdgeCount m_ = 0;
    std::vector<std::uint64_t> offsets_ = {0};
    std::vector<NodeId> adj_;
    std::vector<std::string> labels_;
};

/// Set of node ids kept sorted and unique.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(NodeId v) const;

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    const std::vector<NodeId>& ids() const noexcept { return ids_; }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;
    friend auto operator<=>(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<NodeId> ids_;
};

/// Sum of degrees over S. Ids must be < node_count.
EdgeCount volume(const Graph& g, const NodeSet& s);

/// Number of edges with exactly one endpoint in S.
/// Throws std::domain_error when S is empty or S == V.
EdgeCount cut_size(const Graph& g, const NodeSet& s);

/// True iff the subgraph induced by X is connected. X must be nonempty.
bool is_connected_induced(const Graph& g, const NodeSet& x);

/// Maximal connected node sets, ordered by smallest contained id.
std::vector<NodeSet> connected_components(const Graph& g);

}  // namespace netstruct
