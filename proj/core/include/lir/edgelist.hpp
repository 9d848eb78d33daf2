#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lir/multigraph.hpp"

namespace lir {

/// Parse failure; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct EdgeListDocument {
    SimpleGraph graph;
    std::optional<DoubledColoring> coloring;
};

/// Line-oriented ASCII format: header "n m", then m lines "u v" with
/// 0 <= u < v < n, then optionally m lines "u v R B" giving red and blue
/// multiplicities. Rejects loops, duplicates, multiplicity sums != 2 and
/// disconnected graphs.
EdgeListDocument parse_edge_list(const std::string& text);

std::string emit_edge_list(const SimpleGraph& g);
std::string emit_edge_list(const SimpleGraph& g, const DoubledColoring& c);

/// DOT rendering of 2G: two parallel strokes per multiedge, one per single
/// edge, colored red/blue. Vertex labels are annotated when provided.
std::string emit_dot(const SimpleGraph& g, const DoubledColoring* c = nullptr,
                     const std::vector<std::string>* vertex_notes = nullptr);

}  // namespace lir
