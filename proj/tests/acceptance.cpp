// Acceptance suite: end-to-end checks of the analytic identities, the
// exact-search equivalences, the two model transitions, the real-network
// spot values, the ordering relation among the ratios, and byte-level
// determinism of the command line tool. Prints one PASS/FAIL line per
// criterion; the exit code is the number of failures.
//
// Usage: netstruct_acceptance [--cli PATH] [--data-dir PATH] [--only 1,2,...]
// The sweeps (criteria 3 and 4) take several minutes; their CSVs are written
// into the working directory and reused on reruns.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netstruct/conductance.hpp"
#include "netstruct/corpus.hpp"
#include "netstruct/criterion.hpp"
#include "netstruct/edge_list.hpp"
#include "netstruct/entropy.hpp"
#include "netstruct/generators.hpp"
#include "netstruct/modularity.hpp"
#include "netstruct/random.hpp"
#include "netstruct/sweep.hpp"
#include "oracles.hpp"

using namespace netstruct;
namespace nt = netstruct::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct CellAverage {
    double param = 0.0;
    double tau = 0.0;
    double sigma = 0.0;
    double theta = 0.0;
    int seeds = 0;
};

std::string cli_binary;
fs::path data_dir = "data";

Graph seeded_er(NodeId n, double p, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::er;
    s.n = n;
    s.p = p;
    s.seed = seed;
    return er_graph(s);
}

std::string fmt(double x, int digits = 4) {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
    std::vector<std::string> problems;

    // single-module partition scores zero for both ratios
    int graphs = 0;
    for (std::uint64_t seed = 0; graphs < 50 && seed < 500; ++seed) {
        NodeId n = static_cast<NodeId>(10 + (seed * 37) % 191);  // 10..200
        Graph g = seeded_er(n, 0.08, seed);
        if (g.edge_count() == 0) continue;
        ++graphs;
        Partition whole = Partition::single_module(n);
        if (std::abs(modularity(g, whole)) > 1e-12) {
            problems.push_back("q(single) != 0 at seed " + std::to_string(seed));
        }
        if (std::abs(entropy_ratio(g, whole)) > 1e-12) {
            problems.push_back("tau(single) != 0 at seed " + std::to_string(seed));
        }
    }
    if (graphs < 50) problems.push_back("could not draw 50 graphs");

    // conductance stays in [0, 1] on admissible sets
    int sets = 0;
    Rng rng(1234);
    for (std::uint64_t seed = 0; sets < 10000 && seed < 300; ++seed) {
        Graph g = seeded_er(80, 0.07, 5000 + seed);
        if (g.edge_count() == 0) continue;
        for (int trial = 0; trial < 60 && sets < 10000; ++trial) {
            std::vector<NodeId> ids;
            double keep = 0.05 + 0.9 * rng.uniform();
            for (NodeId v = 0; v < g.node_count(); ++v) {
                if (rng.uniform() < keep) ids.push_back(v);
            }
            if (ids.empty() || ids.size() == g.node_count()) continue;
            NodeSet s(std::move(ids));
            EdgeCount vol = volume(g, s);
            if (vol == 0 || vol == g.volume()) continue;
            double phi = conductance(g, s);
            ++sets;
            if (!(phi >= 0.0 && phi <= 1.0)) {
                problems.push_back("phi out of range: " + fmt(phi, 9));
            }
        }
    }
    if (sets < 10000) problems.push_back("drew only " + std::to_string(sets) + " sets");

    // one-level code of regular graphs is exactly log2 n
    int regulars = 0;
    auto check_regular = [&](const Graph& g, const std::string& name) {
        ++regulars;
        double expect = std::log2(static_cast<double>(g.node_count()));
        if (std::abs(uniform_code_length(g) - expect) > 1e-12) {
            problems.push_back("L_U != log2 n on " + name);
        }
    };
    for (NodeId n = 3; n <= 30; ++n) check_regular(nt::cycle_graph(n), "C" + std::to_string(n));
    for (NodeId n = 2; n <= 10; ++n) check_regular(nt::complete_graph(n), "K" + std::to_string(n));
    for (NodeId n = 10; n <= 20; ++n) {
        check_regular(nt::circulant_graph(n, {1, 2}), "circulant" + std::to_string(n));
    }

    Outcome o;
    o.pass = problems.empty();
    o.detail = o.pass ? "50 graphs, " + std::to_string(sets) + " sets, " +
                            std::to_string(regulars) + " regular graphs"
                      : problems.front() + " (+" +
                            std::to_string(problems.size() - 1) + " more)";
    return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
    struct SuiteGraph {
        std::string name;
        Graph graph;
        bool equality_required;  // clique and bridge instances
    };
    std::vector<SuiteGraph> suite;
    suite.push_back({"cliques 3+3", nt::disjoint_cliques(3, 3), true});
    suite.push_back({"cliques 3+4", nt::disjoint_cliques(3, 4), true});
    suite.push_back({"cliques 4+4", nt::disjoint_cliques(4, 4), true});
    suite.push_back({"cliques 2+3", nt::disjoint_cliques(2, 3), true});
    suite.push_back({"bridge 3-3", nt::bridged_cliques(3, 3), true});
    suite.push_back({"bridge 3-4", nt::bridged_cliques(3, 4), true});
    suite.push_back({"bridge 4-4", nt::bridged_cliques(4, 4), true});
    for (NodeId k = 4; k <= 8; ++k) {
        suite.push_back({"cycle " + std::to_string(k), nt::cycle_graph(k), false});
    }
    std::uint64_t seed = 0;
    while (suite.size() < 30) {
        NodeId n = static_cast<NodeId>(4 + seed % 5);
        Graph g = seeded_er(n, seed % 2 ? 0.45 : 0.65, 900 + seed);
        ++seed;
        if (g.edge_count() == 0) continue;
        suite.push_back({"random " + std::to_string(seed), std::move(g), false});
    }

    std::vector<std::string> problems;
    Rng rng(77);
    for (const SuiteGraph& sg : suite) {
        const Graph& g = sg.graph;
        OptimizeOptions opts;
        opts.seed = 1;

        auto sigma_exact = exact_modularity_small(g);
        auto tau_exact = exact_entropy_small(g);
        auto sigma_heur = maximize_modularity(g, opts);
        auto tau_heur = maximize_entropy_ratio(g, opts);

        if (sigma_heur.score > sigma_exact.score + 1e-12) {
            problems.push_back(sg.name + ": sigma_heur above optimum");
        }
        if (tau_heur.score > tau_exact.score + 1e-12) {
            problems.push_back(sg.name + ": tau_heur above optimum");
        }
        if (sg.equality_required) {
            if (std::abs(sigma_heur.score - sigma_exact.score) > 1e-12) {
                problems.push_back(sg.name + ": sigma mismatch " +
                                   fmt(sigma_heur.score, 9) + " vs " +
                                   fmt(sigma_exact.score, 9));
            }
            if (std::abs(tau_heur.score - tau_exact.score) > 1e-12) {
                problems.push_back(sg.name + ": tau mismatch " +
                                   fmt(tau_heur.score, 9) + " vs " +
                                   fmt(tau_exact.score, 9));
            }
        }

        // literal pairwise sum against the aggregated implementation
        std::vector<Partition> partitions = {
            sigma_exact.partition, Partition::single_module(g.node_count()),
            Partition::singletons(g.node_count())};
        for (int extra = 0; extra < 2; ++extra) {
            std::vector<std::uint32_t> a(g.node_count());
            for (auto& c : a) c = static_cast<std::uint32_t>(rng.below(3));
            partitions.emplace_back(std::move(a));
        }
        for (const Partition& p : partitions) {
            if (std::abs(modularity(g, p) - nt::modularity_pairwise(g, p)) > 1e-10) {
                problems.push_back(sg.name + ": pairwise/aggregated divergence");
            }
        }
    }

    Outcome o;
    o.pass = problems.empty();
    o.detail = o.pass ? std::to_string(suite.size()) + " graphs checked"
                      : problems.front() + " (+" +
                            std::to_string(problems.size() - 1) + " more)";
    return o;
}

// ------------------------------------------------------------- sweeps (3, 4)

std::vector<CellAverage> averaged_cells(const std::vector<SweepRow>& rows) {
    std::map<double, CellAverage> cells;
    for (const SweepRow& row : rows) {
        if (row.status != CellStatus::ok) continue;
        CellAverage& c = cells[row.param];
        c.param = row.param;
        c.tau += row.tau;
        c.sigma += row.sigma;
        c.theta += row.theta;
        c.seeds += 1;
    }
    std::vector<CellAverage> out;
    for (auto& [param, cell] : cells) {
        cell.tau /= cell.seeds;
        cell.sigma /= cell.seeds;
        cell.theta /= cell.seeds;
        out.push_back(cell);
    }
    return out;
}

std::vector<SweepRow> run_acceptance_sweep(Model model, const std::string& csv) {
    SweepSpec spec;
    spec.model = model;
    spec.n = 10000;
    spec.grid = SweepSpec::default_grid(model);
    spec.seeds_per_cell = 3;
    spec.base_seed = 1;
    spec.output_path = csv;
    spec.eval.optimize.restarts = 8;
    spec.eval.optimize.threads = 1;
    spec.eval.discovery.threads = 1;
    std::cerr << "  [sweep] " << to_string(model) << " n=10000, "
              << spec.grid.size() << " cells x 3 seeds -> " << csv << '\n';
    SweepResult result = run_sweep(spec);
    std::cerr << "  [sweep] done: computed=" << result.computed
              << " resumed=" << result.resumed << '\n';
    return result.rows;
}

Outcome criterion3(std::vector<CellAverage>& er_cells_out) {
    auto rows = run_acceptance_sweep(Model::er, "acceptance_er_sweep.csv");
    auto cells = averaged_cells(rows);
    er_cells_out = cells;
    std::vector<std::string> problems;
    if (cells.size() != 15) problems.push_back("incomplete sweep");

    // first downward crossing of the averaged sigma curve through 0.3
    std::optional<double> p_star;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (cells[i].sigma > 0.3 && cells[i + 1].sigma <= 0.3) {
            double run = cells[i].sigma - cells[i + 1].sigma;
            double t = run > 0 ? (cells[i].sigma - 0.3) / run : 0.0;
            p_star = cells[i].param + t * (cells[i + 1].param - cells[i].param);
            break;
        }
    }
    if (!p_star) {
        problems.push_back("sigma curve never crosses 0.3");
    } else if (!(*p_star >= 2.5e-4 && *p_star <= 1.5e-3)) {
        problems.push_back("crossing p*=" + fmt(*p_star, 6) + " outside [2.5e-4, 1.5e-3]");
    }

    // indicator agreement outside the transition window
    for (const CellAverage& c : cells) {
        if (c.param >= 2.5e-4 && c.param <= 1.5e-3) continue;
        bool b1 = c.tau > 0.0, b2 = c.sigma > 0.3, b3 = c.theta > 0.3;
        if (b1 != b2 || b2 != b3) {
            problems.push_back("bits disagree at p=" + fmt(c.param, 6) + " (tau=" +
                               fmt(c.tau) + " sigma=" + fmt(c.sigma) + " theta=" +
                               fmt(c.theta) + ")");
        }
    }

    Outcome o;
    o.pass = problems.empty();
    std::string crossing = p_star ? "p*=" + fmt(*p_star, 6) : "no crossing";
    if (o.pass) {
        o.detail = crossing + ", bits agree outside the window";
    } else {
        o.detail = crossing + "; " + problems.front();
        if (problems.size() > 1) {
            o.detail += " (+" + std::to_string(problems.size() - 1) + " more)";
        }
    }
    return o;
}

Outcome criterion4(std::vector<CellAverage>& pa_cells_out) {
    auto rows = run_acceptance_sweep(Model::pa, "acceptance_pa_sweep.csv");
    auto cells = averaged_cells(rows);
    pa_cells_out = cells;
    std::vector<std::string> problems;
    if (cells.size() != 12) problems.push_back("incomplete sweep");

    // per-indicator flip point: true for d < d*, false for d >= d*
    auto flip_of = [&](auto&& bit) -> std::optional<int> {
        std::optional<int> flip;
        for (const CellAverage& c : cells) {
            bool b = bit(c);
            if (!flip && !b) flip = static_cast<int>(c.param);
            if (flip && b) return std::nullopt;  // re-entrant, not a clean step
        }
        return flip;
    };
    auto tau_flip = flip_of([](const CellAverage& c) { return c.tau > 0.0; });
    auto sigma_flip = flip_of([](const CellAverage& c) { return c.sigma > 0.3; });
    auto theta_flip = flip_of([](const CellAverage& c) { return c.theta > 0.3; });

    auto show = [](const char* name, const std::optional<int>& flip) {
        return std::string(name) + "=" +
               (flip ? std::to_string(*flip) : std::string("none"));
    };
    std::string flips = show("tau", tau_flip) + " " + show("sigma", sigma_flip) +
                        " " + show("theta", theta_flip);

    if (!tau_flip || !sigma_flip || !theta_flip) {
        problems.push_back("missing or unclean flip (" + flips + ")");
    } else if (*tau_flip != *sigma_flip || *sigma_flip != *theta_flip) {
        problems.push_back("flips differ (" + flips + ")");
    } else if (*sigma_flip < 4 || *sigma_flip > 7) {
        problems.push_back("flip d*=" + std::to_string(*sigma_flip) +
                           " outside {4..7}");
    }

    Outcome o;
    o.pass = problems.empty();
    o.detail = o.pass ? "verdict flips at d*=" + std::to_string(*sigma_flip)
                      : problems.front();
    return o;
}

// ---------------------------------------------------------------- criterion 5

struct RealNetwork {
    std::string name;
    std::vector<std::string> file_names;
    NodeId nodes;
    EdgeCount edges;
    double tau_lo, tau_hi, sigma_lo, sigma_hi, theta_lo, theta_hi;
};

Outcome criterion5(std::vector<RatioReport>& real_reports) {
    const std::vector<RealNetwork> networks = {
        {"ca-GrQc",
         {"ca-GrQc.txt", "CA-GrQc.txt", "ca-GrQc.el"},
         5242, 14496, 0.36, 0.52, 0.71, 0.87, 0.70, 1.00},
        {"p2p-Gnutella04",
         {"p2p-Gnutella04.txt", "p2p-Gnutella04.el"},
         10876, 39994, 0.05, 0.19, 0.30, 0.48, 0.25, 0.48},
    };
    std::vector<std::string> problems;
    for (const RealNetwork& net : networks) {
        fs::path found;
        for (const std::string& name : net.file_names) {
            if (fs::exists(data_dir / name)) {
                found = data_dir / name;
                break;
            }
        }
        if (found.empty()) {
            problems.push_back(net.name + " not found under " + data_dir.string() +
                               " (see data/README.md for the download steps)");
            continue;
        }
        try {
            Graph g = load_edge_list(found.string());
            if (g.node_count() != net.nodes || g.edge_count() != net.edges) {
                problems.push_back(net.name + ": parsed n=" +
                                   std::to_string(g.node_count()) + " m=" +
                                   std::to_string(g.edge_count()) + ", expected n=" +
                                   std::to_string(net.nodes) + " m=" +
                                   std::to_string(net.edges));
                continue;
            }
            EvaluateOptions opts;
            opts.optimize.seed = 1;
            opts.optimize.restarts = 8;
            opts.source = net.name;
            RatioReport r = evaluate(g, opts);
            real_reports.push_back(r);
            std::cerr << "  [real] " << net.name << ": tau=" << fmt(r.tau)
                      << " sigma=" << fmt(r.sigma) << " theta=" << fmt(r.theta)
                      << '\n';
            auto band = [&](const char* what, double x, double lo, double hi) {
                if (!(x >= lo && x <= hi)) {
                    problems.push_back(net.name + ": " + what + "=" + fmt(x) +
                                       " outside [" + fmt(lo, 2) + ", " + fmt(hi, 2) +
                                       "]");
                }
            };
            band("tau", r.tau, net.tau_lo, net.tau_hi);
            band("sigma", r.sigma, net.sigma_lo, net.sigma_hi);
            band("theta", r.theta, net.theta_lo, net.theta_hi);
            if (r.verdict != Verdict::has_structure) {
                problems.push_back(net.name + ": verdict " + to_string(r.verdict));
            }
        } catch (const std::exception& e) {
            problems.push_back(net.name + ": " + e.what());
        }
    }
    Outcome o;
    o.pass = problems.empty();
    o.detail = o.pass ? "both networks inside their bands, verdict has_structure"
                      : problems.front();
    if (!o.pass && problems.size() > 1) {
        o.detail += " (+" + std::to_string(problems.size() - 1) + " more)";
    }
    return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome criterion6(const std::vector<RatioReport>& real_reports,
                   const std::vector<CellAverage>& er_cells,
                   const std::vector<CellAverage>& pa_cells) {
    std::vector<std::string> problems;
    for (const RatioReport& r : real_reports) {
        if (r.tau > r.sigma + 1e-9 || r.tau > r.theta + 1e-9) {
            problems.push_back(r.source + ": tau above sigma or theta");
        }
    }
    int structured_cells = 0;
    auto check_cells = [&](const std::vector<CellAverage>& cells, const char* tag) {
        for (const CellAverage& c : cells) {
            if (decide(c.tau, c.sigma, c.theta, true, Thresholds{}) !=
                Verdict::has_structure) {
                continue;
            }
            ++structured_cells;
            if (c.tau > c.sigma + 1e-9 || c.tau > c.theta + 1e-9) {
                problems.push_back(std::string(tag) + " cell " + fmt(c.param, 6) +
                                   ": tau above sigma or theta");
            }
        }
    };
    check_cells(er_cells, "er");
    check_cells(pa_cells, "pa");

    Outcome o;
    o.pass = problems.empty();
    std::ostringstream detail;
    if (o.pass) {
        detail << "holds on " << real_reports.size() << " real networks and "
               << structured_cells << " structured sweep cells";
        if (real_reports.empty()) detail << " (real networks unavailable)";
    } else {
        detail << problems.front();
    }
    o.detail = detail.str();
    return o;
}

// ---------------------------------------------------------------- criterion 7

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = cli_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CommandResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion7() {
    Outcome o;
    if (cli_binary.empty()) {
        o.detail = "no --cli path given";
        return o;
    }
    fs::path tmp = fs::temp_directory_path() /
                   ("netstruct-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    std::vector<std::string> problems;

    auto compare_runs = [&](const std::string& name, const std::string& args_a,
                            const std::string& args_b, const fs::path& file_a,
                            const fs::path& file_b) {
        CommandResult a = run_cli(args_a);
        CommandResult b = run_cli(args_b);
        if (a.exit_code != b.exit_code) {
            problems.push_back(name + ": exit codes differ");
        }
        if (a.out != b.out) problems.push_back(name + ": stdout differs");
        if (!file_a.empty() && slurp(file_a) != slurp(file_b)) {
            problems.push_back(name + ": output files differ");
        }
    };

    compare_runs("generate er",
                 "generate --model er --n 400 --p 0.02 --seed 5 --out " +
                     (tmp / "er_a.el").string(),
                 "generate --model er --n 400 --p 0.02 --seed 5 --out " +
                     (tmp / "er_b.el").string(),
                 tmp / "er_a.el", tmp / "er_b.el");
    compare_runs("generate pa",
                 "generate --model pa --n 400 --d 2 --seed 5 --out " +
                     (tmp / "pa_a.el").string(),
                 "generate --model pa --n 400 --d 2 --seed 5 --out " +
                     (tmp / "pa_b.el").string(),
                 tmp / "pa_a.el", tmp / "pa_b.el");

    std::string ratios_args = "ratios " + (tmp / "er_a.el").string() +
                              " --min-size 4 --max-size 12 --seed 9";
    compare_runs("ratios", ratios_args, ratios_args, "", "");

    std::string sweep_common =
        "sweep --model er --n 60 --grid 0.05,0.12 --seeds-per-cell 2 "
        "--min-size 3 --max-size 7 --restarts 4 --out ";
    compare_runs("sweep", sweep_common + (tmp / "sw_a.csv").string(),
                 sweep_common + (tmp / "sw_b.csv").string(), tmp / "sw_a.csv",
                 tmp / "sw_b.csv");

    fs::create_directories(tmp / "corpus");
    run_cli("generate --model pa --n 60 --d 1 --seed 2 --out " +
            (tmp / "corpus" / "a.el").string());
    run_cli("generate --model er --n 60 --p 0.1 --seed 2 --out " +
            (tmp / "corpus" / "b.el").string());
    compare_runs("report",
                 "report " + (tmp / "corpus").string() + " --min-size 3 --max-size 7 --csv " +
                     (tmp / "rep_a.csv").string(),
                 "report " + (tmp / "corpus").string() + " --min-size 3 --max-size 7 --csv " +
                     (tmp / "rep_b.csv").string(),
                 tmp / "rep_a.csv", tmp / "rep_b.csv");

    run_cli("generate --model er --n 7 --p 0.6 --seed 4 --out " +
            (tmp / "tiny.el").string());
    std::string oracle_args = "oracle " + (tmp / "tiny.el").string() +
                              " --min-size 2 --max-size 4 --k-max 2";
    compare_runs("oracle", oracle_args, oracle_args, "", "");

    fs::remove_all(tmp);
    o.pass = problems.empty();
    o.detail = o.pass ? "six command pairs byte-identical" : problems.front();
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            cli_binary = argv[++i];
        } else if (arg == "--data-dir" && i + 1 < argc) {
            data_dir = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            std::istringstream in(argv[++i]);
            std::string tok;
            while (std::getline(in, tok, ',')) only.insert(std::stoi(tok));
        } else {
            std::cerr << "unknown argument: " << arg << '\n';
            return 99;
        }
    }
    if (cli_binary.empty()) {
        if (const char* env = std::getenv("NETSTRUCT_CLI")) cli_binary = env;
    }

    auto wanted = [&](int id) { return only.empty() || only.count(id) > 0; };

    std::vector<CellAverage> er_cells, pa_cells;
    std::vector<RatioReport> real_reports;
    std::vector<std::pair<std::string, Outcome>> results;

    if (wanted(1)) results.emplace_back("1 analytic identities", criterion1());
    if (wanted(2)) results.emplace_back("2 exact-search equivalence", criterion2());
    if (wanted(3)) results.emplace_back("3 er transition", criterion3(er_cells));
    if (wanted(4)) results.emplace_back("4 pa transition", criterion4(pa_cells));
    if (wanted(5)) results.emplace_back("5 real-network spot values", criterion5(real_reports));
    if (wanted(6)) {
        results.emplace_back("6 tau below sigma and theta",
                             criterion6(real_reports, er_cells, pa_cells));
    }
    if (wanted(7)) results.emplace_back("7 command determinism", criterion7());

    int failures = 0;
    for (const auto& [name, outcome] : results) {
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << name
                  << " - " << outcome.detail << '\n';
    }
    return failures;
}
