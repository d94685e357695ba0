#include "netstruct/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "netstruct/text.hpp"

namespace netstruct {

void SweepSpec::validate() const {
    if (n < 2) throw std::invalid_argument("sweep requires n >= 2");
    if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sweep grid must be strictly increasing");
        }
    }
    if (seeds_per_cell < 1) {
        throw std::invalid_argument("seeds_per_cell must be positive");
    }
    for (double v : grid) {
        if (model == Model::er) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("er grid values must lie in [0, 1]");
            }
        } else {
            if (!(v >= 1.0) || v != std::floor(v) || v >= static_cast<double>(n)) {
                throw std::invalid_argument(
                    "pa grid values must be integers in [1, n)");
            }
        }
    }
    if (output_path.empty()) throw std::invalid_argument("output path is empty");
}

std::vector<double> SweepSpec::default_grid(Model m) {
    std::vector<double> grid;
    if (m == Model::er) {
        const double lo = 1e-4, hi = 5e-3;
        const int points = 15;
        for (int i = 0; i < points; ++i) {
            grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
        }
    } else {
        for (int d = 1; d <= 12; ++d) grid.push_back(d);
    }
    return grid;
}

std::string to_string(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::timeout: return "timeout";
        case CellStatus::error: return "error";
    }
    return "error";
}

CellStatus cell_status_from_string(const std::string& s) {
    if (s == "ok") return CellStatus::ok;
    if (s == "timeout") return CellStatus::timeout;
    if (s == "error") return CellStatus::error;
    throw std::invalid_argument("unknown cell status: " + s);
}

std::string sweep_csv_header() {
    return "schema_version,model,n,param,seed,tau,sigma,theta,mean_degree,"
           "wall_time_seconds,status";
}

std::string to_csv(const SweepRow& row) {
    std::ostringstream out;
    out << kSweepSchemaVersion << ',' << to_string(row.model) << ',' << row.n
        << ',' << format_double(row.param) << ',' << row.seed << ','
        << format_double(row.tau) << ',' << format_double(row.sigma) << ','
        << format_double(row.theta) << ',' << format_double(row.mean_degree)
        << ',' << format_double(row.wall_time_seconds) << ','
        << to_string(row.status);
    return out.str();
}

SweepRow sweep_row_from_csv(const std::string& line) {
    auto fields = split(line, ',');
    if (fields.size() != 11) {
        throw std::invalid_argument("sweep row needs 11 fields");
    }
    if (parse_uint(fields[0]) != kSweepSchemaVersion) {
        throw std::invalid_argument("unsupported sweep schema version");
    }
    SweepRow row;
    row.model = model_from_string(std::string(fields[1]));
    row.n = static_cast<NodeId>(parse_uint(fields[2]));
    row.param = parse_double(fields[3]);
    row.seed = parse_uint(fields[4]);
    row.tau = parse_double(fields[5]);
    row.sigma = parse_double(fields[6]);
    row.theta = parse_double(fields[7]);
    row.mean_degree = parse_double(fields[8]);
    row.wall_time_seconds = parse_double(fields[9]);
    row.status = cell_status_from_string(std::string(fields[10]));
    return row;
}

namespace {

using CellKey = std::tuple<Model, NodeId, std::uint64_t, std::uint64_t>;

// params are positive, so ordering their IEEE bit patterns orders the values
CellKey key_of(Model model, NodeId n, double param, std::uint64_t seed) {
    std::uint64_t param_bits;
    static_assert(sizeof(param) == sizeof(param_bits));
    __builtin_memcpy(&param_bits, &param, sizeof(param));
    return {model, n, param_bits, seed};
}

SweepRow compute_cell(const SweepSpec& spec, double param, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const double limit = spec.cell_timeout_seconds;
    auto elapsed = [&] {
        return std::chrono::duration<double>(clock::now() - start).count();
    };
    auto out_of_time = [&] { return limit > 0.0 && elapsed() > limit; };

    SweepRow row;
    row.model = spec.model;
    row.n = spec.n;
    row.param = param;
    row.seed = seed;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.tau = row.sigma = row.theta = row.mean_degree = nan;
    row.wall_time_seconds = 0.0;

    try {
        GenSpec gen;
        gen.model = spec.model;
        gen.n = spec.n;
        if (spec.model == Model::er) {
            gen.p = param;
        } else {
            gen.d = static_cast<NodeId>(param);
        }
        gen.seed = seed;
        Graph g = generate(gen);
        row.mean_degree =
            static_cast<double>(g.volume()) / static_cast<double>(g.node_count());
        if (g.edge_count() == 0) {
            row.status = CellStatus::error;
            return row;
        }
        if (out_of_time()) {
            row.status = CellStatus::timeout;
            return row;
        }

        EvaluateOptions eval = spec.eval;
        eval.optimize.seed = seed;
        eval.discovery.seed = seed;
        eval.concurrent = false;  // cells are already parallel
        eval.source = gen.describe();

        CommunityBounds bounds =
            eval.bounds ? *eval.bounds : CommunityBounds::defaults_for(g.node_count());

        PartitionResult sigma = maximize_modularity(g, eval.optimize);
        row.sigma = sigma.score;
        if (out_of_time()) {
            row.status = CellStatus::timeout;
            return row;
        }
        PartitionResult tau = maximize_entropy_ratio(g, eval.optimize, sigma.partition);
        row.tau = tau.score;
        if (out_of_time()) {
            row.status = CellStatus::timeout;
            return row;
        }
        if (!bounds.vacuous()) {
            CommunitySet cs = discover_communities(g, bounds, eval.discovery);
            row.theta = c_ratio(g, cs);
        }
        row.status = CellStatus::ok;
    } catch (const std::exception&) {
        row.status = CellStatus::error;
    }
    if (spec.record_timings) row.wall_time_seconds = elapsed();
    return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    std::map<CellKey, SweepRow> rows;
    bool had_file = false;
    {
        std::ifstream in(spec.output_path);
        if (in) {
            had_file = true;
            std::string line;
            if (!std::getline(in, line) || line != sweep_csv_header()) {
                throw std::runtime_error(spec.output_path +
                                         ": existing file is not a sweep CSV");
            }
            std::size_t line_no = 1;
            while (std::getline(in, line)) {
                ++line_no;
                if (line.empty()) continue;
                SweepRow row;
                try {
                    row = sweep_row_from_csv(line);
                } catch (const std::exception& e) {
                    throw std::runtime_error(spec.output_path + ':' +
                                             std::to_string(line_no) + ": " + e.what());
                }
                rows[key_of(row.model, row.n, row.param, row.seed)] = row;
            }
        }
    }
    (void)had_file;

    // rows present with status ok are kept; timeout and error rows retry
    std::vector<std::pair<double, std::uint64_t>> todo;
    std::size_t resumed = 0;
    for (double param : spec.grid) {
        for (std::uint32_t s = 0; s < spec.seeds_per_cell; ++s) {
            std::uint64_t seed = spec.base_seed + s;
            auto it = rows.find(key_of(spec.model, spec.n, param, seed));
            if (it != rows.end() && it->second.status == CellStatus::ok) {
                ++resumed;
            } else {
                todo.emplace_back(param, seed);
            }
        }
    }

    SweepResult result;
    result.resumed = resumed;
    if (!todo.empty()) {
        std::vector<SweepRow> fresh(todo.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
                fresh[i] = compute_cell(spec, todo[i].first, todo[i].second);
            }
        };
        std::uint32_t threads =
            spec.threads ? spec.threads : std::thread::hardware_concurrency();
        threads = std::clamp<std::uint32_t>(
            threads, 1, static_cast<std::uint32_t>(todo.size()));
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        for (const SweepRow& row : fresh) {
            rows[key_of(row.model, row.n, row.param, row.seed)] = row;
        }
        result.computed = todo.size();

        // atomic-ish replace keeps a partially written file from clobbering
        // good rows
        std::filesystem::path out_path(spec.output_path);
        std::filesystem::path tmp_path = out_path;
        tmp_path += ".tmp";
        {
            std::ofstream out(tmp_path);
            if (!out) {
                throw std::runtime_error("cannot write " + tmp_path.string());
            }
            out << sweep_csv_header() << '\n';
            for (const auto& [key, row] : rows) out << to_csv(row) << '\n';
        }
        std::filesystem::rename(tmp_path, out_path);
    }

    result.rows.reserve(rows.size());
    for (const auto& [key, row] : rows) result.rows.push_back(row);
    return result;
}

std::string aggregate_csv(const std::vector<SweepRow>& rows, Aggregate how) {
    std::map<std::tuple<Model, NodeId, double>, std::vector<const SweepRow*>> cells;
    for (const SweepRow& row : rows) {
        if (row.status != CellStatus::ok) continue;
        cells[{row.model, row.n, row.param}].push_back(&row);
    }
    auto combine = [&](std::vector<double> values) {
        std::sort(values.begin(), values.end());
        if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
        if (how == Aggregate::median) {
            std::size_t mid = values.size() / 2;
            return values.size() % 2 ? values[mid]
                                     : 0.5 * (values[mid - 1] + values[mid]);
        }
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum / static_cast<double>(values.size());
    };

    std::ostringstream out;
    out << "schema_version,model,n,param,seeds,tau,sigma,theta,mean_degree\n";
    for (const auto& [key, cell] : cells) {
        const auto& [model, n, param] = key;
        std::vector<double> tau, sigma, theta, degree;
        for (const SweepRow* row : cell) {
            tau.push_back(row->tau);
            sigma.push_back(row->sigma);
            theta.push_back(row->theta);
            degree.push_back(row->mean_degree);
        }
        out << kSweepSchemaVersion << ',' << to_string(model) << ',' << n << ','
            << format_double(param) << ',' << cell.size() << ','
            << format_double(combine(tau)) << ',' << format_double(combine(sigma))
            << ',' << format_double(combine(theta)) << ','
            << format_double(combine(degree)) << '\n';
    }
    return out.str();
}

}  // namespace netstruct
