#include "netstruct/generators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "netstruct/random.hpp"

namespace netstruct {

std::string to_string(Model m) { return m == Model::er ? "er" : "pa"; }

Model model_from_string(const std::string& s) {
    if (s == "er") return Model::er;
    if (s == "pa") return Model::pa;
    throw std::invalid_argument("unknown model: " + s);
}

void GenSpec::validate() const {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (model == Model::er) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("p must lie in [0, 1]");
        }
    } else {
        if (d < 1 || d >= n) throw std::invalid_argument("d must satisfy 1 <= d < n");
    }
}

std::uint64_t GenSpec::stream() const {
    std::uint64_t param_bits;
    if (model == Model::er) {
        double param = p;
        static_assert(sizeof(param) == sizeof(param_bits));
        __builtin_memcpy(&param_bits, &param, sizeof(param));
    } else {
        param_bits = d;
    }
    return stream_key({static_cast<std::uint64_t>(model), n, param_bits, seed});
}

std::string GenSpec::describe() const {
    std::ostringstream out;
    out << to_string(model) << " n=" << n;
    if (model == Model::er) {
        out << " p=" << p;
    } else {
        out << " d=" << d;
    }
    out << " seed=" << seed;
    return out.str();
}

Graph er_graph(const GenSpec& spec) {
    if (spec.model != Model::er) throw std::invalid_argument("spec is not er");
    spec.validate();
    const NodeId n = spec.n;
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (spec.p >= 1.0) {
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        }
    } else if (spec.p > 0.0) {
        // Geometric skips between accepted pairs (Batagelj-Brandes): each of
        // the n(n-1)/2 unordered pairs is still included independently with
        // probability p, but the cost is O(n + m).
        Rng rng(spec.stream());
        const double log_q = std::log1p(-spec.p);
        std::uint64_t v = 1;
        long long w = -1;
        while (v < n) {
            double skip = std::floor(std::log1p(-rng.uniform()) / log_q);
            if (skip > 4e18) break;  // beyond every remaining pair
            w += 1 + static_cast<long long>(skip);
            while (v < n && w >= static_cast<long long>(v)) {
                w -= static_cast<long long>(v);
                ++v;
            }
            if (v < n) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
        }
    }
    return Graph::build(n, std::move(edges));
}

Graph pa_graph(const GenSpec& spec) {
    if (spec.model != Model::pa) throw std::invalid_argument("spec is not pa");
    spec.validate();
    const NodeId n = spec.n;
    const NodeId d = spec.d;
    Rng rng(spec.stream());

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(d + 1) * d / 2 +
                  static_cast<std::size_t>(d) * (n - d - 1));

    // degree-proportional urn: every node appears once per incident edge
    std::vector<NodeId> urn;
    urn.reserve(2 * edges.capacity());
    for (NodeId u = 0; u <= d; ++u) {
        for (NodeId v = u + 1; v <= d; ++v) {
            edges.emplace_back(u, v);
            urn.push_back(u);
            urn.push_back(v);
        }
    }

    std::vector<NodeId> targets;
    targets.reserve(d);
    for (NodeId v = d + 1; v < n; ++v) {
        targets.clear();
        // distinct targets via repeated draws, discarding repeats; the urn
        // reflects degrees before v arrived
        while (targets.size() < d) {
            NodeId t = urn[rng.below(urn.size())];
            bool dup = false;
            for (NodeId s : targets) {
                if (s == t) {
                    dup = true;
                    break;
                }
            }
            if (!dup) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(t, v);
            urn.push_back(t);
            urn.push_back(v);
        }
    }
    return Graph::build(n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
    return spec.model == Model::er ? er_graph(spec) : pa_graph(spec);
}

}  // namespace netstruct
