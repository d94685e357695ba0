#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netstruct/conductance.hpp"
#include "netstruct/entropy.hpp"
#include "netstruct/graph.hpp"
#include "netstruct/modularity.hpp"

namespace netstruct {

/// Decision thresholds for the three ratios. Configurable, but the defaults
/// are the calibrated constants: structure requires tau > 0, sigma > 0.3
/// and theta > 0.3.
struct Thresholds {
    double tau = 0.0;
    double sigma = 0.3;
    double theta = 0.3;

    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

enum class Verdict { has_structure, no_structure, indeterminate };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct EvaluateOptions {
    OptimizeOptions optimize;                 // shared by sigma and tau
    std::optional<CommunityBounds> bounds;    // default: defaults_for(n)
    DiscoveryOptions discovery;
    Thresholds thresholds;
    bool record_timings = false;
    bool concurrent = true;                   // estimators may overlap
    std::string source;                       // provenance label
};

/// The ratio triple with verdict and provenance. Wall times are negative
/// when not recorded.
struct RatioReport {
    double tau = 0.0;
    double sigma = 0.0;
    double theta = 0.0;
    bool theta_evaluable = true;
    Verdict verdict = Verdict::indeterminate;
    Thresholds thresholds;
    std::string source;
    NodeId nodes = 0;
    EdgeCount edges = 0;
    std::uint64_t seed = 0;
    std::uint32_t restarts = 0;
    CommunityBounds bounds;
    double wall_sigma = -1.0;
    double wall_tau = -1.0;
    double wall_theta = -1.0;
};

/// Pure verdict function. Indeterminate when theta is not evaluable.
Verdict decide(double tau, double sigma, double theta, bool theta_evaluable,
               const Thresholds& t);

/// Runs all three estimators with shared options and assembles the report.
/// Deterministic given the options. When the community bounds are vacuous
/// (their default for small graphs) theta is flagged not evaluable and the
/// verdict is indeterminate. Throws std::domain_error when m == 0.
RatioReport evaluate(const Graph& g, const EvaluateOptions& opts = {});

/// Flat key=value record; parse(format(r)) == r.
std::string format_report(const RatioReport& r);
RatioReport parse_report(const std::string& text);

/// FNV-1a 64-bit digest used to fingerprint source files, as lowercase hex.
std::string content_digest(std::string_view bytes);

/// Agreement statistics of the three per-threshold indicator bits across a
/// collection of reports (reports with theta not evaluable are skipped).
struct HypothesisSummary {
    std::size_t considered = 0;
    std::size_t skipped = 0;
    /// agree[i][j]: reports where indicator i equals indicator j
    /// (0 = tau, 1 = sigma, 2 = theta).
    std::array<std::array<std::size_t, 3>, 3> agree{};
    /// Indices (into the input span) where the three bits are not uniform.
    std::vector<std::size_t> disagreements;

    std::string to_text() const;
};

HypothesisSummary check_hypothesis(std::span<const RatioReport> reports);

}  // namespace netstruct
