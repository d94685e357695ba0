#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "netstruct/graph.hpp"

namespace netstruct {

/// Raised on malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when the input contains no edges after cleanup.
class EmptyGraphError : public std::runtime_error {
public:
    EmptyGraphError();
};

struct ParseOptions {
    /// When true (default), directed inputs are symmetrized: a reversed or
    /// repeated pair collapses silently into one undirected edge. When
    /// false, any duplicate (including a reversed pair) is rejected.
    bool directed_as_undirected = true;
};

/// Parses edge-list text: '#'-prefixed comment lines, blank lines ignored,
/// otherwise exactly two whitespace-separated integer tokens per line.
/// External ids are relabeled densely in first-seen order; the original ids
/// are retained as labels. Self-loops are dropped but still introduce their
/// node id. Throws ParseError / EmptyGraphError.
Graph parse_edge_list(std::istream& in, const ParseOptions& opts = {});
Graph parse_edge_list(const std::string& text, const ParseOptions& opts = {});

/// Reads a file; throws std::runtime_error when it cannot be opened.
Graph load_edge_list(const std::string& path, const ParseOptions& opts = {});

/// Canonical serialization: one edge per line, "u v" with u < v in dense
/// ids, lines sorted; isolated nodes appear as self-loop lines so the node
/// count survives a round trip. Repeated parse/serialize cycles reach a
/// stable text after the relabeling settles.
void serialize_edge_list(const Graph& g, std::ostream& out);
std::string serialize_edge_list(const Graph& g);

}  // namespace netstruct
