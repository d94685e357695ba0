#pragma once

// Internal helpers shared by the modularity and entropy optimizers: the
// seeded restart driver and the set-partition enumerator behind the exact
// small-graph searches.

#include <algorithm>
#include <atomic>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "local_moving.hpp"
#include "netstruct/modularity.hpp"
#include "netstruct/partition.hpp"
#include "netstruct/random.hpp"

namespace netstruct::detail {

/// Folds modules whose volume is zero (possible when isolated nodes end up
/// alone) into the module of the lowest-id positive-degree node. Neither
/// objective is affected by where zero-degree nodes live, but downstream
/// code-length evaluation requires every module to have positive volume.
Partition merge_zero_volume_modules(const Graph& g, Partition p);

template <class Objective, class ScoreFn>
PartitionResult best_over_restarts(const Graph& g, const OptimizeOptions& opts,
                                   std::uint64_t objective_tag,
                                   ScoreFn&& score) {
    if (g.edge_count() == 0) {
        throw std::domain_error("optimization requires at least one edge");
    }
    const std::uint32_t restarts = std::max(1u, opts.restarts);
    std::vector<Partition> parts(restarts);
    std::vector<double> scores(restarts);

    std::atomic<std::uint32_t> next{0};
    auto run = [&] {
        for (std::uint32_t r; (r = next.fetch_add(1)) < restarts;) {
            auto assignment = optimize_partition<Objective>(
                g, stream_key({opts.seed, objective_tag, r}));
            Partition p = merge_zero_volume_modules(g, Partition(std::move(assignment)));
            scores[r] = score(g, p);
            parts[r] = std::move(p);
        }
    };

    std::uint32_t workers =
        opts.threads ? opts.threads : std::thread::hardware_concurrency();
    workers = std::clamp(workers, 1u, restarts);
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    // ties resolve to the lowest restart index
    std::uint32_t best = 0;
    for (std::uint32_t r = 1; r < restarts; ++r) {
        if (scores[r] > scores[best]) best = r;
    }
    return {std::move(parts[best]), scores[best]};
}

/// Visits every set partition of {0..n-1} in restricted-growth-string
/// order; f receives the assignment and its block count.
template <class F>
void for_each_set_partition(std::uint32_t n, F&& f) {
    if (n == 0) return;
    std::vector<std::uint32_t> a(n, 0);
    std::vector<std::uint32_t> b(n, 1);  // b[i] = 1 + max(a[0..i-1])
    while (true) {
        std::uint32_t blocks = *std::max_element(a.begin(), a.end()) + 1;
        f(std::span<const std::uint32_t>(a), blocks);
        std::uint32_t i = n - 1;
        while (i > 0 && a[i] == b[i]) --i;
        if (i == 0) return;
        ++a[i];
        std::uint32_t nb = std::max(b[i], a[i] + 1);
        for (std::uint32_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            b[j] = nb;
        }
    }
}

}  // namespace netstruct::detail
