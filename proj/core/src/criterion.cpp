#include "netstruct/criterion.hpp"

#include <charconv>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include "netstruct/text.hpp"

namespace netstruct {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::has_structure: return "has_structure";
        case Verdict::no_structure: return "no_structure";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "has_structure") return Verdict::has_structure;
    if (s == "no_structure") return Verdict::no_structure;
    if (s == "indeterminate") return Verdict::indeterminate;
    throw std::invalid_argument("unknown verdict: " + s);
}

Verdict decide(double tau, double sigma, double theta, bool theta_evaluable,
               const Thresholds& t) {
    if (!theta_evaluable) return Verdict::indeterminate;
    return (tau > t.tau && sigma > t.sigma && theta > t.theta)
               ? Verdict::has_structure
               : Verdict::no_structure;
}

RatioReport evaluate(const Graph& g, const EvaluateOptions& opts) {
    if (g.edge_count() == 0) {
        throw std::domain_error("evaluation requires at least one edge");
    }
    RatioReport r;
    r.source = opts.source;
    r.nodes = g.node_count();
    r.edges = g.edge_count();
    r.seed = opts.optimize.seed;
    r.restarts = opts.optimize.restarts;
    r.thresholds = opts.thresholds;
    r.bounds = opts.bounds ? *opts.bounds
                           : CommunityBounds::defaults_for(g.node_count());
    r.theta_evaluable = !r.bounds.vacuous();

    using clock = std::chrono::steady_clock;
    auto seconds_since = [](clock::time_point start) {
        return std::chrono::duration<double>(clock::now() - start).count();
    };

    auto run_theta = [&]() -> std::pair<double, double> {
        auto start = clock::now();
        CommunitySet cs = discover_communities(g, r.bounds, opts.discovery);
        return {c_ratio(g, cs), seconds_since(start)};
    };

    std::future<std::pair<double, double>> theta_task;
    if (r.theta_evaluable && opts.concurrent) {
        theta_task = std::async(std::launch::async, run_theta);
    }

    auto t0 = clock::now();
    PartitionResult sigma = maximize_modularity(g, opts.optimize);
    double wall_sigma = seconds_since(t0);

    auto t1 = clock::now();
    PartitionResult tau = maximize_entropy_ratio(g, opts.optimize, sigma.partition);
    double wall_tau = seconds_since(t1);

    r.sigma = sigma.score;
    r.tau = tau.score;
    if (r.theta_evaluable) {
        auto [theta, wall_theta] = theta_task.valid() ? theta_task.get() : run_theta();
        r.theta = theta;
        if (opts.record_timings) r.wall_theta = wall_theta;
    }
    if (opts.record_timings) {
        r.wall_sigma = wall_sigma;
        r.wall_tau = wall_tau;
    }
    r.verdict = decide(r.tau, r.sigma, r.theta, r.theta_evaluable, r.thresholds);
    return r;
}

std::string format_report(const RatioReport& r) {
    std::ostringstream out;
    out << "schema=ratio-report/v1\n";
    out << "source=" << r.source << '\n';
    out << "nodes=" << r.nodes << '\n';
    out << "edges=" << r.edges << '\n';
    out << "tau=" << format_double(r.tau) << '\n';
    out << "sigma=" << format_double(r.sigma) << '\n';
    out << "theta=" << format_double(r.theta) << '\n';
    out << "theta_evaluable=" << (r.theta_evaluable ? "true" : "false") << '\n';
    out << "verdict=" << to_string(r.verdict) << '\n';
    out << "threshold_tau=" << format_double(r.thresholds.tau) << '\n';
    out << "threshold_sigma=" << format_double(r.thresholds.sigma) << '\n';
    out << "threshold_theta=" << format_double(r.thresholds.theta) << '\n';
    out << "seed=" << r.seed << '\n';
    out << "restarts=" << r.restarts << '\n';
    out << "min_size=" << r.bounds.min_size << '\n';
    out << "max_size=" << r.bounds.max_size << '\n';
    if (r.wall_sigma >= 0) out << "wall_sigma_s=" << format_double(r.wall_sigma) << '\n';
    if (r.wall_tau >= 0) out << "wall_tau_s=" << format_double(r.wall_tau) << '\n';
    if (r.wall_theta >= 0) out << "wall_theta_s=" << format_double(r.wall_theta) << '\n';
    return out.str();
}

RatioReport parse_report(const std::string& text) {
    RatioReport r;
    bool schema_seen = false;
    for (std::string_view line : split(text, '\n')) {
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("report line without '='");
        }
        std::string_view key = line.substr(0, eq);
        std::string_view value = line.substr(eq + 1);
        if (key == "schema") {
            if (value != "ratio-report/v1") {
                throw std::invalid_argument("unsupported report schema");
            }
            schema_seen = true;
        } else if (key == "source") {
            r.source = std::string(value);
        } else if (key == "nodes") {
            r.nodes = static_cast<NodeId>(parse_uint(value));
        } else if (key == "edges") {
            r.edges = parse_uint(value);
        } else if (key == "tau") {
            r.tau = parse_double(value);
        } else if (key == "sigma") {
            r.sigma = parse_double(value);
        } else if (key == "theta") {
            r.theta = parse_double(value);
        } else if (key == "theta_evaluable") {
            r.theta_evaluable = value == "true";
        } else if (key == "verdict") {
            r.verdict = verdict_from_string(std::string(value));
        } else if (key == "threshold_tau") {
            r.thresholds.tau = parse_double(value);
        } else if (key == "threshold_sigma") {
            r.thresholds.sigma = parse_double(value);
        } else if (key == "threshold_theta") {
            r.thresholds.theta = parse_double(value);
        } else if (key == "seed") {
            r.seed = parse_uint(value);
        } else if (key == "restarts") {
            r.restarts = static_cast<std::uint32_t>(parse_uint(value));
        } else if (key == "min_size") {
            r.bounds.min_size = static_cast<std::uint32_t>(parse_uint(value));
        } else if (key == "max_size") {
            r.bounds.max_size = static_cast<std::uint32_t>(parse_uint(value));
        } else if (key == "wall_sigma_s") {
            r.wall_sigma = parse_double(value);
        } else if (key == "wall_tau_s") {
            r.wall_tau = parse_double(value);
        } else if (key == "wall_theta_s") {
            r.wall_theta = parse_double(value);
        } else {
            throw std::invalid_argument("unknown report key: " + std::string(key));
        }
    }
    if (!schema_seen) throw std::invalid_argument("missing report schema line");
    return r;
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

HypothesisSummary check_hypothesis(std::span<const RatioReport> reports) {
    HypothesisSummary s;
    for (std::size_t idx = 0; idx < reports.size(); ++idx) {
        const RatioReport& r = reports[idx];
        if (!r.theta_evaluable) {
            ++s.skipped;
            continue;
        }
        ++s.considered;
        bool bits[3] = {r.tau > r.thresholds.tau, r.sigma > r.thresholds.sigma,
                        r.theta > r.thresholds.theta};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (bits[i] == bits[j]) ++s.agree[i][j];
            }
        }
        if (bits[0] != bits[1] || bits[1] != bits[2]) {
            s.disagreements.push_back(idx);
        }
    }
    return s;
}

std::string HypothesisSummary::to_text() const {
    std::ostringstream out;
    out << "indicator agreement over " << considered << " reports";
    if (skipped > 0) out << " (" << skipped << " skipped: theta not evaluable)";
    out << '\n';
    static const char* names[3] = {"tau>thr", "sigma>thr", "theta>thr"};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            out << "  " << names[i] << " vs " << names[j] << ": " << agree[i][j]
                << '/' << considered << '\n';
        }
    }
    if (disagreements.empty()) {
        out << "  full agreement\n";
    } else {
        out << "  disagreeing instances:";
        for (std::size_t idx : disagreements) out << ' ' << idx;
        out << '\n';
    }
    return out.str();
}

}  // namespace netstruct
