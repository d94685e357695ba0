// netstruct: community-structure analytics for undirected networks.
//
// Subcommands:
//   generate  write a seeded er/pa random graph as an edge list
//   ratios    evaluate the three community-structure ratios of a network
//   sweep     run a parameter sweep over a model grid, CSV output
//   report    evaluate every edge list in a directory, tabular output
//   oracle    exact brute-force maxima for small graphs (test tooling)

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "netstruct/conductance.hpp"
#include "netstruct/corpus.hpp"
#include "netstruct/criterion.hpp"
#include "netstruct/edge_list.hpp"
#include "netstruct/entropy.hpp"
#include "netstruct/generators.hpp"
#include "netstruct/modularity.hpp"
#include "netstruct/sweep.hpp"
#include "netstruct/text.hpp"

namespace {

constexpr int kExitError = 3;

struct RatioFlags {
    std::uint32_t restarts = 8;
    std::uint64_t seed = 1;
    std::uint32_t threads = 0;
    double seed_fraction = 0.0;
    std::optional<std::uint32_t> min_size;
    std::optional<std::uint32_t> max_size;
    netstruct::Thresholds thresholds;
    bool timings = false;

    void attach(CLI::App* cmd, bool with_seed = true) {
        cmd->add_option("--restarts", restarts, "optimizer restarts")
            ->capture_default_str();
        if (with_seed) {
            cmd->add_option("--seed", seed, "run seed")->capture_default_str();
        }
        cmd->add_option("--threads", threads, "worker threads (0 = auto)");
        cmd->add_option("--seed-fraction", seed_fraction,
                        "fraction of nodes used as expansion seeds (0 = default policy)");
        cmd->add_option("--min-size", min_size,
                        "community size lower bound (default ceil(log2 n))");
        cmd->add_option("--max-size", max_size,
                        "community size upper bound (default ceil(sqrt n)-1)");
        cmd->add_option("--tau-threshold", thresholds.tau, "tau cutoff")
            ->capture_default_str();
        cmd->add_option("--sigma-threshold", thresholds.sigma, "sigma cutoff")
            ->capture_default_str();
        cmd->add_option("--theta-threshold", thresholds.theta, "theta cutoff")
            ->capture_default_str();
        cmd->add_flag("--timings", timings,
                      "record wall times (off by default so outputs are "
                      "byte-reproducible)");
    }

    netstruct::EvaluateOptions evaluate_options(netstruct::NodeId n) const {
        netstruct::EvaluateOptions opts;
        opts.optimize.restarts = restarts;
        opts.optimize.seed = seed;
        opts.optimize.threads = threads;
        opts.discovery.seed = seed;
        opts.discovery.seed_fraction = seed_fraction;
        opts.discovery.threads = threads;
        opts.thresholds = thresholds;
        opts.record_timings = timings;
        netstruct::CommunityBounds b = netstruct::CommunityBounds::defaults_for(n);
        if (min_size) b.min_size = *min_size;
        if (max_size) b.max_size = *max_size;
        opts.bounds = b;
        return opts;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_generate(const netstruct::GenSpec& spec, const std::string& out_path) {
    netstruct::Graph g = netstruct::generate(spec);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    netstruct::serialize_edge_list(g, out);
    std::cout << "n=" << g.node_count() << " m=" << g.edge_count() << '\n';
    return 0;
}

int run_ratios(const std::string& input, const std::string& which,
               const RatioFlags& flags, bool reject_directed) {
    std::string bytes = read_file(input);
    netstruct::ParseOptions popts;
    popts.directed_as_undirected = !reject_directed;
    netstruct::Graph g = netstruct::parse_edge_list(bytes, popts);
    netstruct::EvaluateOptions opts = flags.evaluate_options(g.node_count());
    opts.source = std::filesystem::path(input).filename().string() +
                  " digest:" + netstruct::content_digest(bytes);

    if (which == "all") {
        if (opts.bounds->vacuous()) {
            std::cerr << "warning: community size bounds are vacuous at n="
                      << g.node_count()
                      << "; theta is not evaluable (override with "
                         "--min-size/--max-size)\n";
        }
        netstruct::RatioReport report = netstruct::evaluate(g, opts);
        std::cout << netstruct::format_report(report);
        switch (report.verdict) {
            case netstruct::Verdict::has_structure: return 0;
            case netstruct::Verdict::no_structure: return 1;
            case netstruct::Verdict::indeterminate: return 2;
        }
        return kExitError;
    }
    if (which == "modularity") {
        auto r = netstruct::maximize_modularity(g, opts.optimize);
        std::cout << "sigma=" << netstruct::format_double(r.score) << '\n';
        return 0;
    }
    if (which == "entropy") {
        auto r = netstruct::maximize_entropy_ratio(g, opts.optimize);
        std::cout << "tau=" << netstruct::format_double(r.score) << '\n';
        return 0;
    }
    // conductance
    if (opts.bounds->vacuous()) {
        std::cerr << "warning: community size bounds are vacuous at n="
                  << g.node_count() << "; no community can qualify\n";
    }
    netstruct::CommunitySet cs =
        netstruct::discover_communities(g, *opts.bounds, opts.discovery);
    std::cout << "theta=" << netstruct::format_double(netstruct::c_ratio(g, cs))
              << '\n'
              << "communities=" << cs.size() << '\n';
    return 0;
}

int run_sweep(netstruct::SweepSpec& spec, const std::string& aggregate) {
    netstruct::SweepResult result = netstruct::run_sweep(spec);
    std::cout << "rows=" << result.rows.size() << " computed=" << result.computed
              << " resumed=" << result.resumed << '\n';
    if (!aggregate.empty()) {
        netstruct::Aggregate how = aggregate == "median"
                                       ? netstruct::Aggregate::median
                                       : netstruct::Aggregate::mean;
        std::string agg_path = spec.output_path + "." + aggregate + ".csv";
        std::ofstream out(agg_path);
        if (!out) throw std::runtime_error("cannot write " + agg_path);
        out << netstruct::aggregate_csv(result.rows, how);
        std::cout << "aggregated=" << agg_path << '\n';
    }
    return 0;
}

int run_report(const std::string& directory, const std::string& csv_path,
               const RatioFlags& flags) {
    // bounds depend on each network's size, so pass only the shared options
    netstruct::EvaluateOptions opts = flags.evaluate_options(2);
    opts.bounds.reset();
    if (flags.min_size.has_value() != flags.max_size.has_value()) {
        throw std::invalid_argument(
            "report applies one window to graphs of different sizes; give "
            "both --min-size and --max-size or neither");
    }
    if (flags.min_size) {
        netstruct::CommunityBounds b;
        b.min_size = *flags.min_size;
        b.max_size = *flags.max_size;
        opts.bounds = b;
    }
    netstruct::CorpusReport report = netstruct::evaluate_corpus(directory, opts);
    std::cout << report.to_text();
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << report.to_csv();
    }
    return 0;
}

int run_oracle(const std::string& input, const std::string& which,
               std::uint32_t k_max, std::optional<std::uint32_t> min_size,
               std::optional<std::uint32_t> max_size) {
    netstruct::Graph g = netstruct::load_edge_list(input);
    if (which == "modularity" || which == "all") {
        auto r = netstruct::exact_modularity_small(g);
        std::cout << "sigma_exact=" << netstruct::format_double(r.score) << '\n';
        std::cout << "sigma_partition:\n" << netstruct::write_partition(r.partition);
    }
    if (which == "entropy" || which == "all") {
        auto r = netstruct::exact_entropy_small(g);
        std::cout << "tau_exact=" << netstruct::format_double(r.score) << '\n';
        std::cout << "tau_partition:\n" << netstruct::write_partition(r.partition);
    }
    if (which == "conductance" || which == "all") {
        netstruct::CommunityBounds b;
        b.min_size = min_size.value_or(1);
        b.max_size = max_size.value_or(g.node_count() > 0 ? g.node_count() - 1 : 1);
        auto r = netstruct::c_ratio_oracle_small(g, b, k_max);
        std::cout << "theta_exact=" << netstruct::format_double(r.theta) << '\n';
        std::cout << "theta_communities:\n"
                  << netstruct::write_communities(r.communities);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"community-structure ratios for undirected networks"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    // generate
    auto* generate = app.add_subcommand("generate", "write a seeded random graph");
    netstruct::GenSpec gen_spec;
    std::string gen_model = "er";
    std::string gen_out;
    generate->add_option("--model", gen_model, "er or pa")
        ->required()
        ->check(CLI::IsMember({"er", "pa"}));
    generate->add_option("--n", gen_spec.n, "node count")->required();
    generate->add_option("--p", gen_spec.p, "er edge probability");
    generate->add_option("--d", gen_spec.d, "pa edges per new node");
    generate->add_option("--seed", gen_spec.seed, "generation seed")
        ->capture_default_str();
    generate->add_option("--out", gen_out, "output edge-list path")->required();

    // ratios
    auto* ratios = app.add_subcommand(
        "ratios", "evaluate tau/sigma/theta of an edge-list file");
    std::string ratios_input, ratios_which = "all";
    bool ratios_reject_directed = false;
    RatioFlags ratios_flags;
    ratios->add_option("input", ratios_input, "edge-list file")->required();
    ratios->add_option("--which", ratios_which, "all|modularity|entropy|conductance")
        ->check(CLI::IsMember({"all", "modularity", "entropy", "conductance"}))
        ->capture_default_str();
    ratios->add_flag("--reject-directed", ratios_reject_directed,
                     "fail on duplicate or reciprocal edges instead of collapsing");
    ratios_flags.attach(ratios);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
    std::string sweep_model = "er";
    std::string sweep_grid, sweep_aggregate;
    netstruct::SweepSpec sweep_spec;
    RatioFlags sweep_flags;
    sweep->add_option("--model", sweep_model, "er or pa")
        ->required()
        ->check(CLI::IsMember({"er", "pa"}));
    sweep->add_option("--n", sweep_spec.n, "node count")->required();
    sweep->add_option("--grid", sweep_grid,
                      "comma-separated parameter values (default: model grid)");
    sweep->add_option("--seeds-per-cell", sweep_spec.seeds_per_cell,
                      "seeds per grid value")
        ->capture_default_str();
    sweep->add_option("--seed", sweep_spec.base_seed, "first cell seed")
        ->capture_default_str();
    sweep->add_option("--out", sweep_spec.output_path, "output CSV path")
        ->required();
    sweep->add_option("--cell-timeout", sweep_spec.cell_timeout_seconds,
                      "per-cell budget in seconds (0 = none)");
    sweep->add_option("--aggregate", sweep_aggregate,
                      "also write per-cell aggregation: mean or median")
        ->check(CLI::IsMember({"mean", "median"}));
    sweep_flags.attach(sweep, /*with_seed=*/false);  // cells seed themselves

    // report
    auto* report = app.add_subcommand(
        "report", "evaluate every edge list in a directory");
    std::string report_dir, report_csv;
    RatioFlags report_flags;
    report->add_option("directory", report_dir, "corpus directory")->required();
    report->add_option("--csv", report_csv, "also write rows as CSV");
    report_flags.attach(report);

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "exact brute-force maxima for small graphs");
    std::string oracle_input, oracle_which = "all";
    std::uint32_t oracle_kmax = 2;
    std::optional<std::uint32_t> oracle_min, oracle_max;
    oracle->add_option("input", oracle_input, "edge-list file")->required();
    oracle->add_option("--which", oracle_which,
                       "all|modularity|entropy|conductance")
        ->check(CLI::IsMember({"all", "modularity", "entropy", "conductance"}))
        ->capture_default_str();
    oracle->add_option("--k-max", oracle_kmax, "max communities per collection")
        ->capture_default_str();
    oracle->add_option("--min-size", oracle_min, "community size lower bound");
    oracle->add_option("--max-size", oracle_max, "community size upper bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // help = 0, usage errors > 2
    }

    try {
        if (generate->parsed()) {
            gen_spec.model = netstruct::model_from_string(gen_model);
            gen_spec.validate();
            return run_generate(gen_spec, gen_out);
        }
        if (ratios->parsed()) {
            return run_ratios(ratios_input, ratios_which, ratios_flags,
                              ratios_reject_directed);
        }
        if (sweep->parsed()) {
            sweep_spec.model = netstruct::model_from_string(sweep_model);
            if (sweep_grid.empty()) {
                sweep_spec.grid = netstruct::SweepSpec::default_grid(sweep_spec.model);
            } else {
                for (auto token : netstruct::split(sweep_grid, ',')) {
                    sweep_spec.grid.push_back(netstruct::parse_double(token));
                }
            }
            sweep_spec.eval = sweep_flags.evaluate_options(sweep_spec.n);
            if (!sweep_flags.min_size && !sweep_flags.max_size) {
                sweep_spec.eval.bounds.reset();  // per-graph defaults
            }
            sweep_spec.threads = sweep_flags.threads;
            sweep_spec.record_timings = sweep_flags.timings;
            // cells run in parallel; keep each cell single-threaded
            sweep_spec.eval.optimize.threads = 1;
            sweep_spec.eval.discovery.threads = 1;
            return run_sweep(sweep_spec, sweep_aggregate);
        }
        if (report->parsed()) {
            return run_report(report_dir, report_csv, report_flags);
        }
        if (oracle->parsed()) {
            return run_oracle(oracle_input, oracle_which, oracle_kmax, oracle_min,
                              oracle_max);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
