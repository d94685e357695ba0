#pragma once

#include <cstdint>
#include <string>

#include "netstruct/graph.hpp"

namespace netstruct {

enum class Model { er, pa };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

/// Parameters of one seeded random-graph generation.
///   er: every unordered pair becomes an edge independently with
///       probability p.
///   pa: growth from an initial clique on d+1 nodes; every new node attaches
///       d edges to d distinct existing nodes, sampled proportionally to
///       current degree.
struct GenSpec {
    Model model = Model::er;
    NodeId n = 0;
    double p = 0.0;      // er only, 0 <= p <= 1
    NodeId d = 0;        // pa only, 1 <= d < n
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;

    /// Key of the generation stream; distinct specs give independent,
    /// individually reproducible streams.
    std::uint64_t stream() const;

    /// Flat textual form, e.g. "er n=100 p=0.1 seed=7".
    std::string describe() const;
};

/// Erdos-Renyi G(n, p). Deterministic for a fixed spec. Uses geometric
/// skips between accepted pairs, so the cost is O(n + m) rather than O(n^2).
Graph er_graph(const GenSpec& spec);

/// Preferential attachment. The initial graph is the complete graph on d+1
/// nodes; targets for each new node are drawn without replacement by
/// repeated degree-proportional draws. Deterministic for a fixed spec.
/// Final edge count is always (d+1)d/2 + d*(n-d-1).
Graph pa_graph(const GenSpec& spec);

/// Dispatches on spec.model.
Graph generate(const GenSpec& spec);

}  // namespace netstruct
