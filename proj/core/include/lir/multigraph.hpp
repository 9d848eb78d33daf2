#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lir {

enum class Color : uint8_t { red, blue };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }
inline const char* color_name(Color c) { return c == Color::red ? "red" : "blue"; }

/// Simple connected graph with dense vertex ids 0..n-1. Every edge is stored
/// once as the canonical pair (min,max); the doubling 2G is implicit since
/// every multiedge has multiplicity exactly 2.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<size_t>(n)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Returns the new edge id. Loops and repeated pairs are rejected.
    int add_edge(int u, int v);

    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    int edge_id(int u, int v) const;

    std::pair<int, int> edge(int e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Neighbors of v as (neighbor, edge id) pairs.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    bool is_connected() const;
    // Throws std::invalid_argument naming vertices from two components.
    void require_connected() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
    }

private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Red multiplicity of one doubled edge; the blue share is derived so the
/// decomposition always conserves multiplicity 2.
struct EdgeAssignment {
    uint8_t red_mult = 0;  // in {0,1,2}
    uint8_t blue_mult() const { return static_cast<uint8_t>(2 - red_mult); }
};

/// A red/blue decomposition of 2G: per-edge red multiplicity in {0,1,2}.
class DoubledColoring {
public:
    DoubledColoring() = default;
    explicit DoubledColoring(int edge_count) : red_(static_cast<size_t>(edge_count), 0) {}

    int edge_count() const { return static_cast<int>(red_.size()); }

    EdgeAssignment assignment(int e) const { return EdgeAssignment{red_[static_cast<size_t>(e)]}; }
    uint8_t red_mult(int e) const { return red_[static_cast<size_t>(e)]; }
    uint8_t blue_mult(int e) const { return static_cast<uint8_t>(2 - red_[static_cast<size_t>(e)]); }
    uint8_t mult(int e, Color c) const { return c == Color::red ? red_mult(e) : blue_mult(e); }

    void set_red_mult(int e, int red) {
        if (red < 0 || red > 2) throw std::invalid_argument("red multiplicity must be 0, 1 or 2");
        red_[static_cast<size_t>(e)] = static_cast<uint8_t>(red);
    }

    bool operator==(const DoubledColoring&) const = default;

private:
    std::vector<uint8_t> red_;
};

struct VerificationReport {
    bool ok = true;
    std::vector<int> red_conflicts;   // edge ids whose red endpoints tie
    std::vector<int> blue_conflicts;  // edge ids whose blue endpoints tie
};

/// d-hat of v restricted to one color: the number of single edges of that
/// color incident to v.
int color_degree(const SimpleGraph& g, const DoubledColoring& c, int v, Color color);

/// Per-vertex (red, blue) degrees in one scan.
std::vector<std::pair<int, int>> color_degrees(const SimpleGraph& g, const DoubledColoring& c);

/// Checks that each color class is locally irregular: for every edge with a
/// red share the endpoints' red degrees differ, and likewise for blue.
VerificationReport verify(const SimpleGraph& g, const DoubledColoring& c);

/// 0 for an empty edge set, 1 if one color carries everything, else 2.
int color_count(const DoubledColoring& c);

}  // namespace lir
