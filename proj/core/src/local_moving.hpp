#pragma once

// Internal two-phase local-moving engine shared by the modularity and
// entropy-ratio optimizers: greedy node moves to the best neighbor
// community (ties to the lowest community id), then contraction of
// communities into super-nodes, repeated until no move improves the
// objective. Deterministic given the restart key.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "netstruct/graph.hpp"
#include "netstruct/random.hpp"

namespace netstruct::detail {

/// Weighted aggregate of the input graph. Edge weights count original
/// edges, self_loop counts the original edges internal to a super-node, and
/// volume is the original degree mass. All values are integer-valued, which
/// keeps double arithmetic on them exact.
struct AggGraph {
    std::vector<std::size_t> offsets;
    std::vector<std::pair<std::uint32_t, double>> links;  // no self entries
    std::vector<double> self_loop;
    std::vector<double> volume;

    std::uint32_t node_count() const {
        return static_cast<std::uint32_t>(self_loop.size());
    }

    std::span<const std::pair<std::uint32_t, double>> neighbors(
        std::uint32_t u) const {
        return {links.data() + offsets[u], links.data() + offsets[u + 1]};
    }

    static AggGraph from_graph(const Graph& g);
    AggGraph contract(const std::vector<std::uint32_t>& comm,
                      std::uint32_t comm_count) const;
};

/// Scores moves by the Newman-Girvan modularity change, scaled by 4m^2 so
/// every quantity stays integer-valued and comparisons are exact.
class ModularityObjective {
public:
    ModularityObjective(const AggGraph& agg, double total_edges)
        : m_(total_edges), comm_volume_(agg.volume) {}

    double improvement(double node_volume, double k_from, double from_volume,
                       double k_to, double to_volume) const {
        // from_volume/to_volume exclude the moving node
        return 4.0 * m_ * (k_to - k_from) -
               2.0 * node_volume * (to_volume - from_volume);
    }

    double volume_of(std::uint32_t c) const { return comm_volume_[c]; }

    void apply(std::uint32_t from, std::uint32_t to, double node_volume,
               double /*k_from*/, double /*k_to*/) {
        comm_volume_[from] -= node_volume;
        comm_volume_[to] += node_volume;
    }

    static constexpr double kEps = 0.0;  // gains are exact integers

private:
    double m_;
    std::vector<double> comm_volume_;
};

/// Scores moves by the decrease of the two-level code length. With F the
/// volume-weighted sum of log-volumes and m_g the crossing edge weight, the
/// partition-dependent part of the code length is
///   F * (1 - m_g/m) + (m_g/m) * log2(2m),
/// so a move only needs the volume change of the two touched modules and
/// the change of m_g.
class EntropyObjective {
public:
    EntropyObjective(const AggGraph& agg, double total_edges)
        : m_(total_edges),
          log2_2m_(std::log2(2.0 * total_edges)),
          comm_volume_(agg.volume) {
        crossing_ = 0.0;
        for (std::uint32_t u = 0; u < agg.node_count(); ++u) {
            for (const auto& [v, w] : agg.neighbors(u)) {
                (void)v;
                crossing_ += w;
            }
        }
        crossing_ /= 2.0;
        f_sum_ = 0.0;
        for (double vol : comm_volume_) f_sum_ += f(vol);
    }

    double improvement(double node_volume, double k_from, double from_volume,
                       double k_to, double to_volume) const {
        // from_volume/to_volume exclude the moving node
        double f_delta = f(from_volume) + f(to_volume + node_volume) -
                         f(from_volume + node_volume) - f(to_volume);
        double new_f = f_sum_ + f_delta;
        double new_crossing = crossing_ + k_from - k_to;
        return code_cost(f_sum_, crossing_) - code_cost(new_f, new_crossing);
    }

    double volume_of(std::uint32_t c) const { return comm_volume_[c]; }

    void apply(std::uint32_t from, std::uint32_t to, double node_volume,
               double k_from, double k_to) {
        double from_rest = comm_volume_[from] - node_volume;
        f_sum_ += f(from_rest) + f(comm_volume_[to] + node_volume) -
                  f(comm_volume_[from]) - f(comm_volume_[to]);
        crossing_ += k_from - k_to;
        comm_volume_[from] = from_rest;
        comm_volume_[to] += node_volume;
    }

    static constexpr double kEps = 1e-12;

private:
    double f(double volume) const {
        return volume > 0.0 ? (volume / (2.0 * m_)) * std::log2(volume) : 0.0;
    }
    double code_cost(double f_sum, double crossing) const {
        double rate = crossing / m_;
        return f_sum * (1.0 - rate) + rate * log2_2m_;
    }

    double m_;
    double log2_2m_;
    double crossing_;
    double f_sum_;
    std::vector<double> comm_volume_;
};

/// One full optimization run: local moving plus contraction until a fixed
/// point. Returns the per-original-node assignment (not yet normalized).
template <class Objective>
std::vector<std::uint32_t> optimize_partition(const Graph& g,
                                              std::uint64_t restart_key) {
    const double m = static_cast<double>(g.edge_count());
    AggGraph agg = AggGraph::from_graph(g);
    std::vector<std::uint32_t> node_to_super(g.node_count());
    std::iota(node_to_super.begin(), node_to_super.end(), 0u);
    Rng rng(restart_key);

    while (true) {
        const std::uint32_t nn = agg.node_count();
        Objective obj(agg, m);
        std::vector<std::uint32_t> comm(nn);
        std::iota(comm.begin(), comm.end(), 0u);
        std::vector<std::uint32_t> order(comm);
        rng.shuffle(order);

        std::vector<double> k_to(nn, 0.0);
        std::vector<std::uint32_t> touched;
        bool any_move = false;
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::uint32_t u : order) {
                const std::uint32_t from = comm[u];
                touched.clear();
                for (const auto& [v, w] : agg.neighbors(u)) {
                    std::uint32_t c = comm[v];
                    if (k_to[c] == 0.0) touched.push_back(c);
                    k_to[c] += w;
                }
                if (k_to[from] == 0.0) touched.push_back(from);
                std::sort(touched.begin(), touched.end());

                const double w_u = agg.volume[u];
                const double k_from = k_to[from];
                const double from_rest = obj.volume_of(from) - w_u;
                double best_gain = Objective::kEps;
                std::uint32_t best_c = from;
                for (std::uint32_t c : touched) {
                    if (c == from) continue;
                    double gain = obj.improvement(w_u, k_from, from_rest,
                                                  k_to[c], obj.volume_of(c));
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_c = c;
                    }
                }
                if (best_c != from) {
                    obj.apply(from, best_c, w_u, k_from, k_to[best_c]);
                    comm[u] = best_c;
                    moved = true;
                    any_move = true;
                }
                for (std::uint32_t c : touched) k_to[c] = 0.0;
            }
        }
        if (!any_move) break;

        // dense renumbering in ascending slot order keeps runs reproducible
        std::vector<std::uint32_t> dense(nn, 0xffffffffu);
        std::uint32_t comm_count = 0;
        for (std::uint32_t slot = 0; slot < nn; ++slot) {
            std::uint32_t& d = dense[comm[slot]];
            if (d == 0xffffffffu) d = comm_count++;
        }
        for (auto& c : comm) c = dense[c];
        for (auto& s : node_to_super) s = comm[s];
        if (comm_count == nn) break;
        agg = agg.contract(comm, comm_count);
    }
    return node_to_super;
}

}  // namespace netstruct::detail
