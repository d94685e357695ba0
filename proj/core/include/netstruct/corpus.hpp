#pragma once

#include <string>
#include <vector>

#include "netstruct/criterion.hpp"

namespace netstruct {

/// Evaluation of one edge-list file in a corpus directory. When parsing or
/// evaluation fails, ok is false and `error` holds the reason; the rest of
/// the corpus still runs.
struct CorpusEntry {
    std::string name;
    bool ok = false;
    std::string error;
    RatioReport report;
    double sigma_minus_tau = 0.0;
    bool alpha_band = false;  // sigma - tau within [0.2, 0.3]
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;   // sorted by file name
    HypothesisSummary hypothesis;       // over the successful entries

    /// Human-readable table plus the indicator agreement summary.
    std::string to_text() const;
    /// CSV: name,n,m,tau,sigma,theta,verdict,sigma_minus_tau,alpha_band
    std::string to_csv() const;
};

/// Evaluates every regular file in the directory as an edge list,
/// in file-name order.
CorpusReport evaluate_corpus(const std::string& directory,
                             const EvaluateOptions& opts);

}  // namespace netstruct
