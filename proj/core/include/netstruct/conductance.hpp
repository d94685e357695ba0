#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netstruct/graph.hpp"

namespace netstruct {

/// Admissible community sizes. The defaults follow the size window
/// [ceil(log2 n), ceil(sqrt n) - 1]; for small n (<= 16) that window is
/// empty, which callers must treat as "not evaluable" rather than an error.
struct CommunityBounds {
    std::uint32_t min_size = 1;
    std::uint32_t max_size = 0xffffffffu;

    static CommunityBounds defaults_for(NodeId n);

    /// True when no size can satisfy the bounds.
    bool vacuous() const noexcept { return max_size < min_size; }

    friend bool operator==(const CommunityBounds&,
                           const CommunityBounds&) = default;
};

/// Phi(S) = cut(S) / min(vol(S), vol(V\S)), in [0, 1].
/// Throws std::domain_error when S is empty, S == V, or the smaller side
/// has zero volume.
double conductance(const Graph& g, const NodeSet& s);

/// True iff X induces a connected subgraph and its size lies within bounds.
bool is_possible_community(const Graph& g, const NodeSet& x,
                           const CommunityBounds& b);

/// A family of possibly overlapping node sets, each cached with its quality
/// score 1 - Phi. Kept sorted by id sequence with exact-set deduplication.
class CommunitySet {
public:
    CommunitySet() = default;

    /// Inserts a community, computing its score. Returns false when an
    /// equal set is already present. Throws std::domain_error when the
    /// conductance of the set is undefined.
    bool insert(const Graph& g, NodeSet nodes);

    std::size_t size() const noexcept { return sets_.size(); }
    bool empty() const noexcept { return sets_.empty(); }
    const NodeSet& nodes(std::size_t i) const { return sets_[i]; }
    double score(std::size_t i) const { return scores_[i]; }

    /// Union of all member sets.
    NodeSet coverage() const;

private:
    friend CommunitySet make_community_set(std::vector<NodeSet> sets,
                                           std::vector<double> scores);
    std::vector<NodeSet> sets_;
    std::vector<double> scores_;
};

/// Community-quality ratio: for every covered node the mean score of the
/// communities containing it, summed and divided by the total node count.
/// Uncovered nodes contribute zero. Always in [0, 1].
double c_ratio(const Graph& g, const CommunitySet& cs);

struct DiscoveryOptions {
    /// Fraction of nodes used as expansion seeds. 0 selects the default
    /// policy: every node, or a degree-stratified n/10 sample when
    /// n > 50000.
    double seed_fraction = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t threads = 0;  // 0 = hardware concurrency
};

/// Greedy seeded expansion: from each seed, repeatedly absorb the frontier
/// node that minimizes the resulting conductance and remember the best
/// admissible prefix. Results are deduplicated; low-scoring communities
/// (score <= 0.5) are then dropped when doing so keeps coverage intact and
/// raises the ratio. Fully deterministic.
CommunitySet discover_communities(const Graph& g, const CommunityBounds& b,
                                  const DiscoveryOptions& opts = {});

struct CommunitySetResult {
    CommunitySet communities;
    double theta = 0.0;
};

/// Restricted brute force: enumerates every admissible subset (refusing
/// graphs with n > 12 or more than 64 admissible subsets), then searches
/// all collections of at most k_max of them for the best ratio.
CommunitySetResult c_ratio_oracle_small(const Graph& g,
                                        const CommunityBounds& b,
                                        std::uint32_t k_max);

/// One community per line: space-separated sorted node ids; lines sorted.
void write_communities(const CommunitySet& cs, std::ostream& out);
std::string write_communities(const CommunitySet& cs);

}  // namespace netstruct
