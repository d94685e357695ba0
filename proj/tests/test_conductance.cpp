#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "netstruct/conductance.hpp"
#include "netstruct/generators.hpp"
#include "netstruct/random.hpp"
#include "oracles.hpp"

using namespace netstruct;
namespace nt = netstruct::testing;

namespace {

Graph seeded_er(NodeId n, double p, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::er;
    s.n = n;
    s.p = p;
    s.seed = seed;
    return er_graph(s);
}

CommunityBounds bounds_of(std::uint32_t lo, std::uint32_t hi) {
    CommunityBounds b;
    b.min_size = lo;
    b.max_size = hi;
    return b;
}

}  // namespace

TEST_CASE("default bounds follow the size window") {
    auto b = CommunityBounds::defaults_for(10000);
    CHECK(b.min_size == 14);
    CHECK(b.max_size == 99);
    CHECK_FALSE(b.vacuous());

    auto small = CommunityBounds::defaults_for(16);
    CHECK(small.min_size == 4);
    CHECK(small.max_size == 3);
    CHECK(small.vacuous());

    auto n49 = CommunityBounds::defaults_for(49);
    CHECK(n49.min_size == 6);
    CHECK(n49.max_size == 6);

    auto n2 = CommunityBounds::defaults_for(2);
    CHECK(n2.min_size == 1);
    CHECK(n2.max_size == 1);
}

TEST_CASE("conductance of canonical sets") {
    Graph two_tri = nt::disjoint_cliques(3, 3);
    CHECK(conductance(two_tri, NodeSet({0, 1, 2})) == 0.0);

    Graph c8 = nt::cycle_graph(8);
    CHECK(conductance(c8, NodeSet({0, 1, 2})) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    Graph bridged = nt::bridged_cliques(3, 3);
    CHECK(conductance(bridged, NodeSet({0, 1, 2})) ==
          doctest::Approx(1.0 / 7).epsilon(1e-12));
}

TEST_CASE("conductance error cases") {
    Graph k4 = nt::complete_graph(4);
    CHECK_THROWS_AS(conductance(k4, NodeSet(std::vector<NodeId>{})), std::domain_error);
    CHECK_THROWS_AS(conductance(k4, NodeSet({0, 1, 2, 3})), std::domain_error);
    // triangle plus isolate: the complement of the triangle has zero volume
    Graph iso = Graph::build(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(conductance(iso, NodeSet({0, 1, 2})), std::domain_error);
    CHECK_THROWS_AS(conductance(iso, NodeSet({3})), std::domain_error);
}

TEST_CASE("conductance stays within [0,1] and matches the edge-enumeration oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = seeded_er(40, 0.15, seed);
        if (g.edge_count() == 0) continue;
        Rng rng(seed);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<NodeId> ids;
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (rng.uniform() < 0.4) ids.push_back(v);
            }
            if (ids.empty() || ids.size() == g.node_count()) continue;
            NodeSet s(std::move(ids));
            EdgeCount vol = volume(g, s);
            if (vol == 0 || vol == g.volume()) continue;
            double phi = conductance(g, s);
            CHECK(phi >= 0.0);
            CHECK(phi <= 1.0);
            CHECK(phi == doctest::Approx(nt::conductance_direct(g, s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("possible-community predicate") {
    Graph path = nt::path_graph(6);
    CHECK(is_possible_community(path, NodeSet({1, 2, 3}), bounds_of(2, 4)));
    CHECK_FALSE(is_possible_community(path, NodeSet({1, 2, 3}), bounds_of(4, 5)));
    CHECK_FALSE(is_possible_community(path, NodeSet({1, 2, 3}), bounds_of(1, 2)));
    CHECK_FALSE(is_possible_community(path, NodeSet({0, 2}), bounds_of(1, 4)));
    CHECK_FALSE(is_possible_community(path, NodeSet(std::vector<NodeId>{}), bounds_of(1, 4)));
    // vacuous bounds admit no set
    CHECK_FALSE(is_possible_community(path, NodeSet({1, 2}), bounds_of(3, 2)));
}

TEST_CASE("community set: dedup and quality caching") {
    Graph g = nt::disjoint_cliques(3, 3);
    CommunitySet cs;
    CHECK(cs.empty());
    CHECK(cs.insert(g, NodeSet({0, 1, 2})));
    CHECK_FALSE(cs.insert(g, NodeSet({0, 1, 2})));
    CHECK(cs.insert(g, NodeSet({3, 4, 5})));
    CHECK(cs.size() == 2);
    CHECK(cs.score(0) == 1.0);
    CHECK(cs.coverage().size() == 6);
}

TEST_CASE("community ratio on canonical families") {
    Graph two_tri = nt::disjoint_cliques(3, 3);
    CommunitySet cs;
    CHECK(c_ratio(two_tri, cs) == 0.0);
    cs.insert(two_tri, NodeSet({0, 1, 2}));
    cs.insert(two_tri, NodeSet({3, 4, 5}));
    CHECK(c_ratio(two_tri, cs) == doctest::Approx(1.0).epsilon(1e-12));

    Graph bridged = nt::bridged_cliques(3, 3);
    CommunitySet both;
    both.insert(bridged, NodeSet({0, 1, 2}));
    both.insert(bridged, NodeSet({3, 4, 5}));
    CHECK(c_ratio(bridged, both) == doctest::Approx(6.0 / 7).epsilon(1e-12));
}

TEST_CASE("ratio never drops when a dominating community joins") {
    Graph g = nt::ring_of_cliques(4, 4);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        CommunitySet cs;
        double worst = 1.0;
        for (int c = 0; c < 3; ++c) {
            NodeId base = static_cast<NodeId>(rng.below(4)) * 4;
            std::vector<NodeId> ids;
            for (NodeId v = base; v < base + 2 + rng.below(3); ++v) ids.push_back(v);
            NodeSet s(std::move(ids));
            if (volume(g, s) == 0 || s.size() >= g.node_count()) continue;
            if (cs.insert(g, s)) {
                worst = std::min(worst, 1.0 - conductance(g, s));
            }
        }
        double before = c_ratio(g, cs);
        // a whole clique has conductance 2/14, far above any partial set
        NodeId base = static_cast<NodeId>(rng.below(4)) * 4;
        NodeSet clique({base, base + 1, base + 2, base + 3});
        double clique_score = 1.0 - conductance(g, clique);
        if (clique_score >= worst) {
            cs.insert(g, clique);
            CHECK(c_ratio(g, cs) >= before - 1e-12);
        }
    }
}

TEST_CASE("discovery recovers planted structure") {
    Graph two_tri = nt::disjoint_cliques(3, 3);
    CommunitySet cs = discover_communities(two_tri, bounds_of(3, 3));
    REQUIRE(cs.size() == 2);
    CHECK(cs.nodes(0) == NodeSet({0, 1, 2}));
    CHECK(cs.nodes(1) == NodeSet({3, 4, 5}));
    CHECK(c_ratio(two_tri, cs) == doctest::Approx(1.0).epsilon(1e-12));

    Graph ring = nt::ring_of_cliques(8, 5);
    CommunitySet cliques = discover_communities(ring, bounds_of(5, 5));
    CHECK(cliques.size() == 8);
    double theta = c_ratio(ring, cliques);
    CHECK(theta == doctest::Approx(1.0 - 2.0 / 22.0).epsilon(1e-12));
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        CHECK(is_possible_community(ring, cliques.nodes(i), bounds_of(5, 5)));
    }
}

TEST_CASE("discovery respects bounds, determinism, and thread counts") {
    Graph g = seeded_er(150, 0.06, 3);
    CommunityBounds b = bounds_of(4, 12);
    DiscoveryOptions opts;
    CommunitySet a = discover_communities(g, b, opts);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(is_possible_community(g, a.nodes(i), b));
    }
    opts.threads = 2;
    CommunitySet c = discover_communities(g, b, opts);
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.nodes(i) == c.nodes(i));

    // vacuous bounds yield nothing
    CHECK(discover_communities(g, bounds_of(5, 4)).empty());
    // seed subsampling still returns valid communities
    opts.seed_fraction = 0.2;
    CommunitySet sub = discover_communities(g, b, opts);
    for (std::size_t i = 0; i < sub.size(); ++i) {
        CHECK(is_possible_community(g, sub.nodes(i), b));
    }
    CHECK_THROWS_AS(discover_communities(Graph::build(4, {}), b),
                    std::domain_error);
}

TEST_CASE("oracle: exhaustive collections on tiny graphs") {
    Graph two_tri = nt::disjoint_cliques(3, 3);
    auto best = c_ratio_oracle_small(two_tri, bounds_of(3, 3), 2);
    CHECK(best.theta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(best.communities.size() == 2);

    // path of six: the best three admissible pairs
    Graph p6 = nt::path_graph(6);
    auto pairs = c_ratio_oracle_small(p6, bounds_of(2, 2), 3);
    CHECK(pairs.theta == doctest::Approx(11.0 / 18.0).epsilon(1e-12));

    // discovery never beats the oracle
    CommunitySet found = discover_communities(p6, bounds_of(2, 2));
    CHECK(c_ratio(p6, found) <= pairs.theta + 1e-12);

    CHECK_THROWS_AS(c_ratio_oracle_small(seeded_er(13, 0.5, 1), bounds_of(2, 5), 2),
                    std::domain_error);
    // complete graph on 8 nodes: every proper subset is admissible -> too many
    CHECK_THROWS_AS(c_ratio_oracle_small(nt::complete_graph(8), bounds_of(1, 7), 2),
                    std::domain_error);
}

TEST_CASE("serialization lists sorted communities") {
    Graph g = nt::disjoint_cliques(3, 3);
    CommunitySet cs = discover_communities(g, bounds_of(3, 3));
    CHECK(write_communities(cs) == "0 1 2\n3 4 5\n");
}
