#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

enum class GraphFormat { dimacs, edge_list };

GraphFormat parse_format(std::string_view name);
std::string_view format_name(GraphFormat format);

enum class ParseErrorKind { malformed_header, malformed_line, vertex_out_of_range, self_loop };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string &detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// Reads a graph in DIMACS clique format ("p edge n m", "e u v" with 1-based
/// ids, "c" comments) or as a plain edge list ("u v" per line, 0-based, '#'
/// comments). Edge lists take their vertex count from an optional
/// "# vertices: N" directive, otherwise from the largest id seen. Duplicate
/// edges collapse; self-loops are rejected.
Graph parse_graph(std::istream &in, GraphFormat format, GraphOptions options = {});

Graph read_graph_file(const std::string &path, GraphFormat format, GraphOptions options = {});

/// Writes edges sorted lexicographically so that output is byte-stable.
void write_graph(std::ostream &out, const Graph &g, GraphFormat format);

std::string serialize_graph(const Graph &g, GraphFormat format);

} // namespace turan
