#include "netstruct/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace netstruct {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

EmptyGraphError::EmptyGraphError()
    : std::runtime_error("input contains no edges") {}

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

bool parse_int(std::string_view token, long long& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph parse_edge_list(std::istream& in, const ParseOptions& opts) {
    std::unordered_map<long long, NodeId> dense;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::unordered_map<std::uint64_t, bool> seen;  // canonical edge -> seen

    auto intern = [&](long long ext, std::string_view token) {
        auto [it, inserted] = dense.try_emplace(ext, static_cast<NodeId>(labels.size()));
        if (inserted) labels.emplace_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two integer tokens");
        }
        long long a = 0, b = 0;
        if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
            throw ParseError(line_no, "malformed integer token");
        }
        NodeId u = intern(a, tokens[0]);
        NodeId v = intern(b, tokens[1]);
        if (u == v) continue;  // self-loop dropped, id retained
        NodeId lo = std::min(u, v), hi = std::max(u, v);
        std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
        auto [it, inserted] = seen.try_emplace(key, true);
        if (!inserted) {
            if (!opts.directed_as_undirected) {
                throw ParseError(line_no, "duplicate or reciprocal edge");
            }
            continue;
        }
        edges.emplace_back(lo, hi);
    }
    if (edges.empty()) throw EmptyGraphError();
    const NodeId n = static_cast<NodeId>(labels.size());
    return Graph::build(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    return parse_edge_list(in, opts);
}

Graph load_edge_list(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in, opts);
}

void serialize_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        // isolated nodes are written as self-loops; the parser drops the
        // loop but keeps the id, so the node count survives a round trip
        if (g.degree(u) == 0) {
            out << u << ' ' << u << '\n';
            continue;
        }
        for (NodeId v : g.neighbors(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    serialize_edge_list(g, out);
    return out.str();
}

}  // namespace netstruct
