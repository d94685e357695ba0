#include "netstruct/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "netstruct/edge_list.hpp"
#include "netstruct/text.hpp"

namespace netstruct {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

CorpusReport evaluate_corpus(const std::string& directory,
                             const EvaluateOptions& opts) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    CorpusReport report;
    for (const fs::path& path : files) {
        CorpusEntry entry;
        entry.name = path.filename().string();
        try {
            std::string bytes = read_file(path);
            Graph g = parse_edge_list(bytes);
            EvaluateOptions eval = opts;
            eval.source = entry.name + " digest:" + content_digest(bytes);
            entry.report = evaluate(g, eval);
            entry.sigma_minus_tau = entry.report.sigma - entry.report.tau;
            entry.alpha_band =
                entry.sigma_minus_tau >= 0.2 && entry.sigma_minus_tau <= 0.3;
            entry.ok = true;
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        report.entries.push_back(std::move(entry));
    }

    std::vector<RatioReport> good;
    for (const CorpusEntry& e : report.entries) {
        if (e.ok) good.push_back(e.report);
    }
    report.hypothesis = check_hypothesis(good);
    return report;
}

std::string CorpusReport::to_text() const {
    std::ostringstream out;
    out << std::left << std::setw(28) << "network" << std::right << std::setw(8)
        << "n" << std::setw(10) << "m" << std::setw(9) << "tau" << std::setw(9)
        << "sigma" << std::setw(9) << "theta" << std::setw(16) << "verdict"
        << std::setw(12) << "sigma-tau" << std::setw(7) << "band" << '\n';
    out << std::setprecision(4) << std::fixed;
    for (const CorpusEntry& e : entries) {
        if (!e.ok) continue;
        out << std::left << std::setw(28) << e.name << std::right << std::setw(8)
            << e.report.nodes << std::setw(10) << e.report.edges << std::setw(9)
            << e.report.tau << std::setw(9) << e.report.sigma << std::setw(9)
            << e.report.theta << std::setw(16) << to_string(e.report.verdict)
            << std::setw(12) << e.sigma_minus_tau << std::setw(7)
            << (e.alpha_band ? "yes" : "no") << '\n';
    }
    bool any_errors = false;
    for (const CorpusEntry& e : entries) {
        if (!e.ok) {
            if (!any_errors) out << "errors:\n";
            any_errors = true;
            out << "  " << e.name << ": " << e.error << '\n';
        }
    }
    out << hypothesis.to_text();
    return out.str();
}

std::string CorpusReport::to_csv() const {
    std::ostringstream out;
    out << "name,n,m,tau,sigma,theta,verdict,sigma_minus_tau,alpha_band\n";
    for (const CorpusEntry& e : entries) {
        if (!e.ok) continue;
        out << e.name << ',' << e.report.nodes << ',' << e.report.edges << ','
            << format_double(e.report.tau) << ',' << format_double(e.report.sigma)
            << ',' << format_double(e.report.theta) << ','
            << to_string(e.report.verdict) << ','
            << format_double(e.sigma_minus_tau) << ','
            << (e.alpha_band ? "yes" : "no") << '\n';
    }
    return out.str();
}

}  // namespace netstruct
