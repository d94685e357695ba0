#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netstruct/criterion.hpp"
#include "netstruct/generators.hpp"

namespace netstruct {

/// One parameter sweep: a grid of p (er) or d (pa) values, each cell
/// evaluated for `seeds_per_cell` seeds starting at base_seed.
struct SweepSpec {
    Model model = Model::er;
    NodeId n = 0;
    std::vector<double> grid;            // strictly increasing, nonempty
    std::uint32_t seeds_per_cell = 3;
    std::uint64_t base_seed = 1;
    EvaluateOptions eval;
    std::string output_path;
    double cell_timeout_seconds = 0.0;   // 0 = no limit
    std::uint32_t threads = 0;           // cell workers; 0 = hardware
    bool record_timings = false;

    /// Throws std::invalid_argument on an invalid grid or parameters.
    void validate() const;

    /// Default grids: er = 15-point geometric grid on [1e-4, 5e-3],
    /// pa = {1, 2, ..., 12}.
    static std::vector<double> default_grid(Model m);
};

enum class CellStatus { ok, timeout, error };

std::string to_string(CellStatus s);
CellStatus cell_status_from_string(const std::string& s);

/// One CSV row: a single (cell, seed) evaluation.
struct SweepRow {
    Model model = Model::er;
    NodeId n = 0;
    double param = 0.0;
    std::uint64_t seed = 0;
    double tau = 0.0;
    double sigma = 0.0;
    double theta = 0.0;
    double mean_degree = 0.0;
    double wall_time_seconds = 0.0;
    CellStatus status = CellStatus::ok;
};

inline constexpr int kSweepSchemaVersion = 1;

/// Fixed-order CSV schema, never silently reordered:
/// schema_version,model,n,param,seed,tau,sigma,theta,mean_degree,
/// wall_time_seconds,status
std::string sweep_csv_header();
std::string to_csv(const SweepRow& row);
SweepRow sweep_row_from_csv(const std::string& line);

struct SweepResult {
    std::vector<SweepRow> rows;   // sorted by (param, seed)
    std::size_t computed = 0;     // cells evaluated this run
    std::size_t resumed = 0;      // rows taken from an existing file
};

/// Runs the sweep with a pool of cell workers. Existing rows in the output
/// file are kept and their cells skipped; when nothing is missing the file
/// is left untouched, making reruns byte-identical no-ops. Rows are written
/// sorted regardless of completion order.
SweepResult run_sweep(const SweepSpec& spec);

enum class Aggregate { mean, median };

/// Per-cell aggregation over seeds of the ok rows.
/// Schema: schema_version,model,n,param,seeds,tau,sigma,theta,mean_degree
std::string aggregate_csv(const std::vector<SweepRow>& rows, Aggregate how);

}  // namespace netstruct
