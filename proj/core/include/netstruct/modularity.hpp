#pragma once

#include <cstdint>

#include "netstruct/graph.hpp"
#include "netstruct/partition.hpp"

namespace netstruct {

/// Options shared by the partition optimizers. `restarts` seeded node
/// orderings are explored and the best partition wins; ties resolve to the
/// lowest restart index, so results do not depend on thread scheduling.
struct OptimizeOptions {
    std::uint32_t restarts = 8;
    std::uint64_t seed = 0;
    std::uint32_t threads = 0;  // 0 = one per restart, capped by hardware
};

struct PartitionResult {
    Partition partition;
    double score = 0.0;
};

/// Newman-Girvan modularity of a partition under the degree-preserving null
/// model: sum over modules of e_c/m - (V_c/2m)^2. Throws std::domain_error
/// when the graph has no edges.
double modularity(const Graph& g, const Partition& p);

/// Louvain-style heuristic maximization: greedy local moving to the
/// neighbor module with the best gain (ties to the lowest module id),
/// followed by graph aggregation, repeated to a fixed point; best result
/// over seeded restarts. The score is a lower bound on the true maximum.
PartitionResult maximize_modularity(const Graph& g,
                                    const OptimizeOptions& opts = {});

/// Exhaustive search over all set partitions; the true maximum.
/// Refuses graphs with more than 10 nodes (throws std::domain_error).
PartitionResult exact_modularity_small(const Graph& g);

}  // namespace netstruct
