#include "lir/multigraph.hpp"

#include <algorithm>

namespace lir {

int SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw std::invalid_argument("repeated edge " + std::to_string(u) + " " + std::to_string(v));
    int id = edge_count();
    edges_.emplace_back(u, v);
    adj_[static_cast<size_t>(u)].emplace_back(v, id);
    adj_[static_cast<size_t>(v)].emplace_back(u, id);
    return id;
}

int SimpleGraph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<size_t>(u)];
    const auto& b = adj_[static_cast<size_t>(v)];
    const auto& shorter = a.size() <= b.size() ? a : b;
    int target = a.size() <= b.size() ? v : u;
    for (auto [w, e] : shorter)
        if (w == target) return e;
    return -1;
}

bool SimpleGraph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : incident(v)) {
            (void)e;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

void SimpleGraph::require_connected() const {
    int n = vertex_count();
    if (n <= 1) return;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : incident(v)) {
            (void)e;
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)])
            throw std::invalid_argument("graph is disconnected: vertex 0 and vertex " +
                                        std::to_string(v) + " lie in different components");
}

int color_degree(const SimpleGraph& g, const DoubledColoring& c, int v, Color color) {
    g.check_vertex(v);
    if (c.edge_count() != g.edge_count())
        throw std::invalid_argument("coloring does not match graph edge set");
    int d = 0;
    for (auto [w, e] : g.incident(v)) {
        (void)w;
        d += c.mult(e, color);
    }
    return d;
}

std::vector<std::pair<int, int>> color_degrees(const SimpleGraph& g, const DoubledColoring& c) {
    if (c.edge_count() != g.edge_count())
        throw std::invalid_argument("coloring does not match graph edge set");
    std::vector<std::pair<int, int>> deg(static_cast<size_t>(g.vertex_count()), {0, 0});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int r = c.red_mult(e);
        deg[static_cast<size_t>(u)].first += r;
        deg[static_cast<size_t>(v)].first += r;
        deg[static_cast<size_t>(u)].second += 2 - r;
        deg[static_cast<size_t>(v)].second += 2 - r;
    }
    return deg;
}

VerificationReport verify(const SimpleGraph& g, const DoubledColoring& c) {
    auto deg = color_degrees(g, c);
    VerificationReport rep;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (c.red_mult(e) >= 1 && deg[static_cast<size_t>(u)].first == deg[static_cast<size_t>(v)].first)
            rep.red_conflicts.push_back(e);
        if (c.blue_mult(e) >= 1 && deg[static_cast<size_t>(u)].second == deg[static_cast<size_t>(v)].second)
            rep.blue_conflicts.push_back(e);
    }
    rep.ok = rep.red_conflicts.empty() && rep.blue_conflicts.empty();
    return rep;
}

int color_count(const DoubledColoring& c) {
    if (c.edge_count() == 0) return 0;
    bool any_red = false, any_blue = false;
    for (int e = 0; e < c.edge_count(); ++e) {
        if (c.red_mult(e) > 0) any_red = true;
        if (c.blue_mult(e) > 0) any_blue = true;
    }
    return (any_red ? 1 : 0) + (any_blue ? 1 : 0);
}

}  // namespace lir
