#include "netstruct/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace netstruct {

Graph Graph::build(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n) {
        throw std::invalid_argument("label map size does not match node count");
    }
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.labels_ = std::move(labels);

    std::vector<std::uint64_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];

    g.adj_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // edges were processed in sorted order, so every neighbor list is sorted
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

namespace {

void check_in_range(const Graph& g, const NodeSet& s) {
    if (!s.empty() && s.ids().back() >= g.node_count()) {
        throw std::invalid_argument("node id out of range for this graph");
    }
}

}  // namespace

EdgeCount volume(const Graph& g, const NodeSet& s) {
    check_in_range(g, s);
    EdgeCount vol = 0;
    for (NodeId v : s) vol += g.degree(v);
    return vol;
}

EdgeCount cut_size(const Graph& g, const NodeSet& s) {
    check_in_range(g, s);
    if (s.empty() || s.size() == g.node_count()) {
        throw std::domain_error("cut requires a nonempty proper subset");
    }
    EdgeCount cut = 0;
    for (NodeId v : s) {
        for (NodeId w : g.neighbors(v)) {
            if (!s.contains(w)) ++cut;
        }
    }
    return cut;
}

bool is_connected_induced(const Graph& g, const NodeSet& x) {
    check_in_range(g, x);
    if (x.empty()) {
        throw std::domain_error("connectivity of the empty set is undefined");
    }
    std::vector<NodeId> stack = {x.ids().front()};
    std::vector<bool> seen(g.node_count(), false);
    seen[stack.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w] && x.contains(w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == x.size();
}

std::vector<NodeSet> connected_components(const Graph& g) {
    std::vector<NodeSet> components;
    std::vector<bool> seen(g.node_count(), false);
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < g.node_count(); ++start) {
        if (seen[start]) continue;
        std::vector<NodeId> members;
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        components.emplace_back(std::move(members));
    }
    return components;
}

}  // namespace netstruct
