#pragma once

#include "netstruct/graph.hpp"
#include "netstruct/modularity.hpp"
#include "netstruct/partition.hpp"

namespace netstruct {

/// Which per-node degree enters the module term of the two-level code
/// length. `full` (the default used everywhere) takes the node's whole
/// degree, so each within-module distribution d_i/V_j normalizes and the
/// single-module code length reduces exactly to the one-level code.
/// `within` counts only neighbors inside the node's own module; kept as an
/// explicitly selectable alternative reading.
enum class ModuleDegree { full, within };

struct CodeLengths {
    double uniform = 0.0;  // one-level code, bits per step
    double modular = 0.0;  // two-level code for the given partition
    double ratio = 0.0;    // 1 - modular/uniform
};

/// Entropy of the degree-stationary node distribution:
/// -sum_i (d_i/2m) log2(d_i/2m), with 0 log 0 = 0 for isolated nodes.
/// Throws std::domain_error when m == 0.
double uniform_code_length(const Graph& g);

/// Two-level code length for a partition: per-module node codes plus a
/// module code paid at the crossing rate m_g/m,
///   -sum_j sum_{i in j} (d_i/2m) log2(d_i/V_j)
///   - (m_g/m) * sum_j (V_j/2m) log2(V_j/2m).
/// Throws std::domain_error when m == 0 or some module has zero volume.
double module_code_length(const Graph& g, const Partition& p,
                          ModuleDegree convention = ModuleDegree::full);

/// 1 - module_code_length/uniform_code_length. Zero for the single-module
/// partition by construction.
double entropy_ratio(const Graph& g, const Partition& p,
                     ModuleDegree convention = ModuleDegree::full);

CodeLengths code_lengths(const Graph& g, const Partition& p,
                         ModuleDegree convention = ModuleDegree::full);

/// Greedy local-moving maximization of the entropy ratio (same two-phase
/// skeleton as the modularity optimizer, scoring incremental code-length
/// changes), with seeded restarts. Additionally evaluates the ratio on the
/// best modularity partition and returns the best candidate overall.
PartitionResult maximize_entropy_ratio(const Graph& g,
                                       const OptimizeOptions& opts = {});

/// Same search, reusing an already computed modularity partition as the
/// extra candidate instead of rerunning that optimizer.
PartitionResult maximize_entropy_ratio(const Graph& g,
                                       const OptimizeOptions& opts,
                                       const Partition& modularity_partition);

/// Exhaustive enumeration of partitions (skipping those with a zero-volume
/// module); the true maximum. Refuses graphs with more than 10 nodes.
PartitionResult exact_entropy_small(const Graph& g);

}  // namespace netstruct
