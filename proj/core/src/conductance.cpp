#include "netstruct/conductance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace netstruct {

CommunityBounds CommunityBounds::defaults_for(NodeId n) {
    CommunityBounds b;
    std::uint32_t log2_ceil = 0;
    while ((1ull << log2_ceil) < n) ++log2_ceil;
    b.min_size = std::max(1u, log2_ceil);
    auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(n)));
    while (static_cast<std::uint64_t>(root) * root < n) ++root;
    while (root > 0 && static_cast<std::uint64_t>(root - 1) * (root - 1) >= n) --root;
    b.max_size = root - 1;  // strictly below sqrt(n)
    return b;
}

double conductance(const Graph& g, const NodeSet& s) {
    if (s.empty() || s.size() >= g.node_count()) {
        throw std::domain_error("conductance requires a nonempty proper subset");
    }
    if (s.ids().back() >= g.node_count()) {
        throw std::invalid_argument("node id out of range for this graph");
    }
    EdgeCount cut = 0;
    EdgeCount vol = 0;
    for (NodeId v : s) {
        vol += g.degree(v);
        for (NodeId w : g.neighbors(v)) {
            if (!s.contains(w)) ++cut;
        }
    }
    EdgeCount rest = g.volume() - vol;
    EdgeCount denom = std::min(vol, rest);
    if (denom == 0) {
        throw std::domain_error("conductance undefined: zero volume side");
    }
    return static_cast<double>(cut) / static_cast<double>(denom);
}

bool is_possible_community(const Graph& g, const NodeSet& x,
                           const CommunityBounds& b) {
    if (x.empty()) return false;
    if (x.size() < b.min_size || x.size() > b.max_size) return false;
    return is_connected_induced(g, x);
}

CommunitySet make_community_set(std::vector<NodeSet> sets,
                                std::vector<double> scores) {
    CommunitySet cs;
    cs.sets_ = std::move(sets);
    cs.scores_ = std::move(scores);
    return cs;
}

bool CommunitySet::insert(const Graph& g, NodeSet nodes) {
    double score = 1.0 - conductance(g, nodes);
    auto pos = std::lower_bound(sets_.begin(), sets_.end(), nodes);
    if (pos != sets_.end() && *pos == nodes) return false;
    scores_.insert(scores_.begin() + (pos - sets_.begin()), score);
    sets_.insert(pos, std::move(nodes));
    return true;
}

NodeSet CommunitySet::coverage() const {
    std::vector<NodeId> all;
    for (const auto& s : sets_) {
        all.insert(all.end(), s.begin(), s.end());
    }
    return NodeSet(std::move(all));
}

double c_ratio(const Graph& g, const CommunitySet& cs) {
    const NodeId n = g.node_count();
    std::vector<double> score_sum(n, 0.0);
    std::vector<std::uint32_t> count(n, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (NodeId v : cs.nodes(i)) {
            score_sum[v] += cs.score(i);
            ++count[v];
        }
    }
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        if (count[v] > 0) total += score_sum[v] / count[v];
    }
    return total / static_cast<double>(n);
}

namespace {

struct Candidate {
    std::vector<NodeId> ids;  // sorted
    double phi = 0.0;
};

// Greedy expansion from one seed. Scratch arrays are owned by the caller
// and reset via the epoch counter, so one worker reuses them across seeds.
struct Expander {
    const Graph& g;
    const CommunityBounds& bounds;
    std::vector<std::uint32_t> epoch_in_set;
    std::vector<std::uint32_t> epoch_frontier;
    std::vector<std::uint32_t> links;  // edges into the current set
    std::vector<NodeId> frontier;
    std::uint32_t epoch = 0;

    explicit Expander(const Graph& graph, const CommunityBounds& b)
        : g(graph),
          bounds(b),
          epoch_in_set(graph.node_count(), 0),
          epoch_frontier(graph.node_count(), 0),
          links(graph.node_count(), 0) {}

    bool in_set(NodeId v) const { return epoch_in_set[v] == epoch; }
    bool in_frontier(NodeId v) const { return epoch_frontier[v] == epoch; }

    std::optional<Candidate> grow(NodeId seed) {
        if (g.degree(seed) == 0) return std::nullopt;
        ++epoch;
        frontier.clear();

        const double two_m = static_cast<double>(g.volume());
        std::vector<NodeId> members;
        double vol = 0.0;
        double cut = 0.0;

        auto absorb = [&](NodeId x) {
            epoch_in_set[x] = epoch;
            members.push_back(x);
            vol += g.degree(x);
            cut += static_cast<double>(g.degree(x)) - 2.0 * links[x];
            for (NodeId y : g.neighbors(x)) {
                if (in_set(y)) continue;
                if (!in_frontier(y)) {
                    epoch_frontier[y] = epoch;
                    links[y] = 0;
                    frontier.push_back(y);
                }
                ++links[y];
            }
        };

        links[seed] = 0;
        absorb(seed);

        double best_phi = std::numeric_limits<double>::infinity();
        std::vector<NodeId> best_members;

        auto consider_current = [&] {
            if (members.size() < bounds.min_size || members.size() > bounds.max_size)
                return;
            if (members.size() >= g.node_count()) return;
            double denom = std::min(vol, two_m - vol);
            if (denom <= 0.0) return;
            double phi = cut / denom;
            if (phi < best_phi) {
                best_phi = phi;
                best_members = members;
            }
        };
        consider_current();

        while (members.size() < bounds.max_size && members.size() + 1 < g.node_count()) {
            NodeId pick = 0;
            double pick_phi = std::numeric_limits<double>::infinity();
            bool found = false;
            for (NodeId x : frontier) {
                if (in_set(x)) continue;  // lazily deleted entries
                double nvol = vol + g.degree(x);
                double denom = std::min(nvol, two_m - nvol);
                if (denom <= 0.0) continue;
                double phi = (cut + g.degree(x) - 2.0 * links[x]) / denom;
                if (phi < pick_phi || (phi == pick_phi && found && x < pick)) {
                    pick_phi = phi;
                    pick = x;
                    found = true;
                }
            }
            if (!found) break;
            absorb(pick);
            consider_current();
        }

        if (best_members.empty()) return std::nullopt;
        std::sort(best_members.begin(), best_members.end());
        return Candidate{std::move(best_members), best_phi};
    }
};

std::vector<NodeId> pick_seeds(const Graph& g, const DiscoveryOptions& opts) {
    const NodeId n = g.node_count();
    std::vector<NodeId> ranked(n);
    for (NodeId v = 0; v < n; ++v) ranked[v] = v;
    std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::uint64_t want = n;
    if (opts.seed_fraction > 0.0) {
        want = static_cast<std::uint64_t>(
            std::ceil(opts.seed_fraction * static_cast<double>(n)));
    } else if (n > 50000) {
        want = (n + 9) / 10;
    }
    want = std::clamp<std::uint64_t>(want, 1, n);
    if (want == n) return ranked;
    // evenly spaced picks across the degree ranking
    std::vector<NodeId> seeds;
    seeds.reserve(want);
    for (std::uint64_t i = 0; i < want; ++i) {
        seeds.push_back(ranked[(i * n) / want]);
    }
    return seeds;
}

}  // namespace

CommunitySet discover_communities(const Graph& g, const CommunityBounds& b,
                                  const DiscoveryOptions& opts) {
    if (g.node_count() < 2 || g.edge_count() < 1) {
        throw std::domain_error("discovery requires n >= 2 and m >= 1");
    }
    if (b.vacuous()) return {};

    const std::vector<NodeId> seeds = pick_seeds(g, opts);
    std::uint32_t workers =
        opts.threads ? opts.threads : std::thread::hardware_concurrency();
    workers = std::clamp<std::uint32_t>(workers, 1,
                                        static_cast<std::uint32_t>(seeds.size()));

    // one candidate slot per seed keeps the merge order independent of
    // thread scheduling
    std::vector<std::optional<Candidate>> found(seeds.size());
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        Expander expander(g, b);
        for (std::size_t i; (i = next.fetch_add(1)) < seeds.size();) {
            found[i] = expander.grow(seeds[i]);
        }
    };
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    std::vector<Candidate> candidates;
    candidates.reserve(seeds.size());
    for (auto& c : found) {
        if (c) candidates.push_back(std::move(*c));
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b_) { return a.ids < b_.ids; });
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](const Candidate& a, const Candidate& b_) {
                                     return a.ids == b_.ids;
                                 }),
                     candidates.end());

    // Low-score communities are dropped only when every node they cover is
    // still covered by another community and the ratio improves; uncovered
    // nodes contribute zero, so coverage is never sacrificed.
    const NodeId n = g.node_count();
    std::vector<double> score_sum(n, 0.0);
    std::vector<std::uint32_t> count(n, 0);
    std::vector<double> score(candidates.size());
    std::vector<bool> kept(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        score[i] = 1.0 - candidates[i].phi;
        for (NodeId v : candidates[i].ids) {
            score_sum[v] += score[i];
            ++count[v];
        }
    }
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b_) {
        return score[a] < score[b_];
    });

    bool dropped = true;
    while (dropped) {
        dropped = false;
        for (std::size_t i : order) {
            if (!kept[i] || score[i] > 0.5) continue;
            bool coverage_safe = true;
            for (NodeId v : candidates[i].ids) {
                if (count[v] < 2) {
                    coverage_safe = false;
                    break;
                }
            }
            if (!coverage_safe) continue;
            double delta = 0.0;
            for (NodeId v : candidates[i].ids) {
                delta += (score_sum[v] - score[i]) / (count[v] - 1) -
                         score_sum[v] / count[v];
            }
            if (delta > 0.0) {
                kept[i] = false;
                dropped = true;
                for (NodeId v : candidates[i].ids) {
                    score_sum[v] -= score[i];
                    --count[v];
                }
            }
        }
    }

    std::vector<NodeSet> sets;
    std::vector<double> scores;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!kept[i]) continue;
        sets.emplace_back(std::move(candidates[i].ids));
        scores.push_back(score[i]);
    }
    return make_community_set(std::move(sets), std::move(scores));
}

CommunitySetResult c_ratio_oracle_small(const Graph& g,
                                        const CommunityBounds& b,
                                        std::uint32_t k_max) {
    const NodeId n = g.node_count();
    if (n > 12) {
        throw std::domain_error("oracle refuses graphs with n > 12");
    }
    if (k_max == 0) throw std::invalid_argument("k_max must be positive");

    std::vector<NodeSet> valid;
    std::vector<double> scores;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<NodeId> ids;
        for (NodeId v = 0; v < n; ++v) {
            if (mask & (1u << v)) ids.push_back(v);
        }
        NodeSet s(std::move(ids));
        if (!is_possible_community(g, s, b)) continue;
        EdgeCount vol = volume(g, s);
        if (vol == 0 || vol == g.volume()) continue;  // conductance undefined
        scores.push_back(1.0 - conductance(g, s));
        valid.push_back(std::move(s));
        if (valid.size() > 64) {
            throw std::domain_error("oracle refuses more than 64 admissible sets");
        }
    }

    // bail out before a combinatorial explosion
    double combos = 0.0;
    double binom = 1.0;
    for (std::uint32_t k = 1; k <= std::min<std::uint32_t>(k_max, valid.size()); ++k) {
        binom = binom * (valid.size() - k + 1) / k;
        combos += binom;
        if (combos > 5e6) {
            throw std::domain_error("oracle refuses: too many collections");
        }
    }

    std::vector<double> score_sum(n, 0.0);
    std::vector<std::uint32_t> count(n, 0);
    auto ratio_of_current = [&] {
        double total = 0.0;
        for (NodeId v = 0; v < n; ++v) {
            if (count[v] > 0) total += score_sum[v] / count[v];
        }
        return total / static_cast<double>(n);
    };

    double best_theta = 0.0;
    std::vector<std::size_t> best_pick;
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty()) {
            double theta = ratio_of_current();
            if (theta > best_theta) {
                best_theta = theta;
                best_pick = pick;
            }
        }
        if (pick.size() == k_max) return;
        for (std::size_t i = from; i < valid.size(); ++i) {
            pick.push_back(i);
            for (NodeId v : valid[i]) {
                score_sum[v] += scores[i];
                ++count[v];
            }
            self(self, i + 1);
            for (NodeId v : valid[i]) {
                score_sum[v] -= scores[i];
                --count[v];
            }
            pick.pop_back();
        }
    };
    search(search, 0);

    std::vector<NodeSet> chosen;
    std::vector<double> chosen_scores;
    for (std::size_t i : best_pick) {
        chosen.push_back(valid[i]);
        chosen_scores.push_back(scores[i]);
    }
    // members of `valid` are generated in ascending mask order, which is not
    // id-lexicographic; normalize for the canonical set order
    std::vector<std::size_t> perm(chosen.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b_) {
        return chosen[a].ids() < chosen[b_].ids();
    });
    std::vector<NodeSet> sorted_sets;
    std::vector<double> sorted_scores;
    for (std::size_t i : perm) {
        sorted_sets.push_back(std::move(chosen[i]));
        sorted_scores.push_back(chosen_scores[i]);
    }
    return {make_community_set(std::move(sorted_sets), std::move(sorted_scores)),
            best_theta};
}

void write_communities(const CommunitySet& cs, std::ostream& out) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool first = true;
        for (NodeId v : cs.nodes(i)) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
}

std::string write_communities(const CommunitySet& cs) {
    std::ostringstream out;
    write_communities(cs, out);
    return out.str();
}

}  // namespace netstruct
