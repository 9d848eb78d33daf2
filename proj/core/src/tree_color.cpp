#include "lir/tree_color.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace lir {

namespace {

// Rooted view of the painted edge set.
struct RootedTree {
    const SimpleGraph* g;
    int root;
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (child, edge)
    std::map<int, std::pair<int, int>> up;                // vertex -> (parent, edge)

    RootedTree(const SimpleGraph& graph, const std::vector<int>& edges, int r)
        : g(&graph), root(r) {
        std::map<int, std::vector<std::pair<int, int>>> nbr;
        for (int e : edges) {
            auto [u, v] = graph.edge(e);
            nbr[u].emplace_back(v, e);
            nbr[v].emplace_back(u, e);
        }
        std::deque<int> queue{r};
        std::map<int, char> seen{{r, 1}};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto [w, e] : nbr[v]) {
                if (seen.count(w)) continue;
                seen[w] = 1;
                adj[v].emplace_back(w, e);
                up[w] = {v, e};
                queue.push_back(w);
            }
        }
        for (auto& [v, ch] : adj) std::sort(ch.begin(), ch.end());
        if (seen.size() != edges.size() + 1)
            throw std::invalid_argument("painted edge set is not a tree containing the root");
    }

    int child_count(int v) const {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : static_cast<int>(it->second.size());
    }
    const std::vector<std::pair<int, int>>& children(int v) const {
        static const std::vector<std::pair<int, int>> none;
        auto it = adj.find(v);
        return it == adj.end() ? none : it->second;
    }
};

struct RawBranch {
    int root;
    std::vector<int> edges;
    std::vector<int> sons;                       // future branch roots
    std::vector<std::pair<int, int>> chain;      // structural info, see below
    // Shape record: (vertex, edge-to-it) pairs in branch order; used only to
    // recognize the exceptional shapes.
    int via = -1;        // the single son of the root in the one-son case
    std::vector<std::tuple<int, int, int>> fan;  // (son, edge, pendant edge or -1)
};

// One branch per the construction: either through the root's only son, or
// fanning out of a multi-son root; a son's pendant edge is absorbed when the
// son has exactly one child and it is a leaf.
RawBranch make_branch(const RootedTree& t, int x) {
    RawBranch b;
    b.root = x;
    auto absorb = [&](int s) -> int {
        if (t.child_count(s) == 1) {
            auto [c, e] = t.children(s)[0];
            if (t.child_count(c) == 0) return e;
        }
        return -1;
    };
    if (t.child_count(x) == 1) {
        auto [x0, e0] = t.children(x)[0];
        b.via = x0;
        b.edges.push_back(e0);
        for (auto [s, e] : t.children(x0)) {
            b.edges.push_back(e);
            int pend = absorb(s);
            b.fan.emplace_back(s, e, pend);
            if (pend >= 0) b.edges.push_back(pend);
            else if (t.child_count(s) > 0) b.sons.push_back(s);
        }
    } else {
        for (auto [s, e] : t.children(x)) {
            b.edges.push_back(e);
            int pend = absorb(s);
            b.fan.emplace_back(s, e, pend);
            if (pend >= 0) b.edges.push_back(pend);
            else if (t.child_count(s) > 0) b.sons.push_back(s);
        }
    }
    return b;
}

std::vector<RawBranch> decompose(const RootedTree& t) {
    std::vector<RawBranch> out;
    std::deque<int> queue{t.root};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        RawBranch b = make_branch(t, x);
        for (int s : b.sons) queue.push_back(s);
        out.push_back(std::move(b));
    }
    return out;
}

// The three shapes of Remark 1 (not locally irregular when monochromatic).
std::optional<BranchShapeKind> exceptional_shape(const RootedTree& t, const RawBranch& b) {
    if (b.via >= 0) {
        // One-son case: exceptional only as the chain x - x0 - s - pendant.
        if (b.fan.size() == 1) {
            auto [s, e, pend] = b.fan[0];
            (void)s;
            (void)e;
            if (pend >= 0) return BranchShapeKind::p4_end;
        }
        return std::nullopt;
    }
    if (b.fan.size() == 2) {
        int extended = 0;
        for (auto& [s, e, pend] : b.fan) {
            (void)s;
            (void)e;
            if (pend >= 0) ++extended;
        }
        if (extended == 1) return BranchShapeKind::p4_internal;
        if (extended == 2) return BranchShapeKind::p5_center;
    }
    return std::nullopt;
}

struct Painter {
    const RootedTree& t;
    std::map<int, EdgeColor> colors;              // edge -> color
    std::map<int, std::pair<int, int>> deg;       // vertex -> (red, blue)

    explicit Painter(const RootedTree& tree) : t(tree) {}

    void paint(int e, EdgeColor c) {
        auto [u, v] = t.g->edge(e);
        auto prev = colors.find(e);
        if (prev != colors.end()) {
            deg[u].first -= red_of(prev->second);
            deg[v].first -= red_of(prev->second);
            deg[u].second -= blue_of(prev->second);
            deg[v].second -= blue_of(prev->second);
        }
        colors[e] = c;
        deg[u].first += red_of(c);
        deg[v].first += red_of(c);
        deg[u].second += blue_of(c);
        deg[v].second += blue_of(c);
    }

    int degree_in(int v, Color c) const {
        auto it = deg.find(v);
        if (it == deg.end()) return 0;
        return c == Color::red ? it->second.first : it->second.second;
    }
};

EdgeColor mono(Color c) { return c == Color::red ? EdgeColor::R : EdgeColor::B; }

void paint_exceptional(Painter& p, const RawBranch& b, BranchShapeKind kind, Color father_color,
                       int father_vertex) {
    // Pick the first table variant whose root degrees dodge the father's
    // current degree in the father-edge color. The tables assume a red
    // father edge, so the father-color degree is root_red in table space.
    int father_deg = p.degree_in(father_vertex, father_color);
    auto tables = exceptional_branch_colorings(kind);
    const BranchColoring* pick = nullptr;
    for (const auto& cand : tables) {
        if (cand.root_red != father_deg) {
            pick = &cand;
            break;
        }
    }
    if (!pick) pick = &tables.back();
    auto col = [&](EdgeColor c) { return father_color == Color::red ? c : swapped(c); };

    if (kind == BranchShapeKind::p4_end) {
        // Edges x-x0, x0-s, s-pendant in chain order.
        auto [s, e_mid, pend] = b.fan[0];
        (void)s;
        p.paint(b.edges[0], col(pick->edges[0]));
        p.paint(e_mid, col(pick->edges[1]));
        p.paint(pend, col(pick->edges[2]));
    } else if (kind == BranchShapeKind::p4_internal) {
        const auto* ext = &b.fan[0];
        const auto* plain = &b.fan[1];
        if (std::get<2>(*ext) < 0) std::swap(ext, plain);
        p.paint(std::get<1>(*ext), col(pick->edges[0]));
        p.paint(std::get<2>(*ext), col(pick->edges[1]));
        p.paint(std::get<1>(*plain), col(pick->edges[2]));
    } else {
        p.paint(std::get<1>(b.fan[0]), col(pick->edges[0]));
        p.paint(std::get<2>(b.fan[0]), col(pick->edges[1]));
        p.paint(std::get<1>(b.fan[1]), col(pick->edges[2]));
        p.paint(std::get<2>(b.fan[1]), col(pick->edges[3]));
    }
}

}  // namespace

std::vector<Branch> branch_decompose(const SimpleGraph& t, int r) {
    if (t.edge_count() + 1 != t.vertex_count()) throw std::invalid_argument("not a tree");
    t.require_connected();
    std::vector<int> all(static_cast<size_t>(t.edge_count()));
    for (int e = 0; e < t.edge_count(); ++e) all[static_cast<size_t>(e)] = e;
    RootedTree rt(t, all, r);
    std::vector<Branch> out;
    for (auto& rb : decompose(rt)) out.push_back(Branch{rb.root, rb.edges, rb.sons});
    return out;
}

std::vector<std::pair<int, EdgeColor>> paint_rooted_tree(const TreePaintRequest& req) {
    RootedTree rt(*req.g, req.edges, req.root);
    Painter p(rt);
    p.deg[req.root] = {req.root_ext_red, req.root_ext_blue};

    auto branches = decompose(rt);
    bool whole_tree_is_root_branch = branches.size() == 1;

    for (size_t i = 0; i < branches.size(); ++i) {
        const RawBranch& b = branches[i];
        if (b.root == req.root) {
            auto shape = exceptional_shape(rt, b);
            if (whole_tree_is_root_branch && shape == BranchShapeKind::p4_end &&
                req.root_ext_red == 0 && req.root_ext_blue == 0) {
                // Exception I: root multiedge in the start color, rest flipped.
                p.paint(b.edges[0], mono(req.start));
                auto [s, e_mid, pend] = b.fan[0];
                (void)s;
                p.paint(e_mid, mono(other(req.start)));
                p.paint(pend, mono(other(req.start)));
            } else {
                for (int e : b.edges) p.paint(e, mono(req.start));
            }
            continue;
        }
        auto [father, fe] = rt.up.at(b.root);
        EdgeColor fc = p.colors.at(fe);
        if (fc == EdgeColor::RB)
            throw std::logic_error("branch alternation reached a red-blue father edge");
        Color father_color = fc == EdgeColor::R ? Color::red : Color::blue;
        if (auto shape = exceptional_shape(rt, b)) {
            paint_exceptional(p, b, *shape, father_color, father);
        } else {
            for (int e : b.edges) p.paint(e, mono(other(father_color)));
        }
    }

    std::vector<std::pair<int, EdgeColor>> out;
    out.reserve(p.colors.size());
    for (auto& [e, c] : p.colors) out.emplace_back(e, c);
    return out;
}

std::pair<DoubledColoring, RootConflictContract> color_rooted_tree(const SimpleGraph& t, int r,
                                                                   Color start) {
    TreePaintRequest req;
    req.g = &t;
    req.root = r;
    req.start = start;
    for (int e = 0; e < t.edge_count(); ++e) req.edges.push_back(e);
    DoubledColoring c(t.edge_count());
    if (t.edge_count() > 0)
        for (auto [e, col] : paint_rooted_tree(req)) c.set_red_mult(e, red_mult_of(col));

    RootConflictContract contract;
    contract.root = r;
    auto rep = verify(t, c);
    for (int e : rep.red_conflicts) contract.conflict_edges.push_back(e);
    for (int e : rep.blue_conflicts)
        if (std::find(contract.conflict_edges.begin(), contract.conflict_edges.end(), e) ==
            contract.conflict_edges.end())
            contract.conflict_edges.push_back(e);
    for (int e : contract.conflict_edges) {
        auto [u, v] = t.edge(e);
        if (u != r && v != r)
            throw std::logic_error("rooted tree coloring leaked a conflict away from the root");
    }
    return {std::move(c), std::move(contract)};
}

DoubledColoring color_free_tree(const SimpleGraph& t) {
    t.require_connected();
    int n = t.vertex_count();
    if (t.edge_count() + 1 != n) throw std::invalid_argument("not a tree");
    if (n == 2) throw UncolorableError();
    DoubledColoring c(t.edge_count());
    if (t.edge_count() == 0) return c;

    // Paths get the multipath rule directly.
    bool path = true;
    for (int v = 0; v < n && path; ++v)
        if (t.degree(v) > 2) path = false;
    if (path) {
        int end = 0;
        while (t.degree(end) != 1) ++end;
        LabeledPattern pat = path_pattern(t.edge_count());
        int prev = -1, cur = end;
        for (int i = 0; i < t.edge_count(); ++i) {
            int next = -1, eid = -1;
            for (auto [w, e] : t.incident(cur))
                if (w != prev) {
                    next = w;
                    eid = e;
                }
            c.set_red_mult(eid, red_mult_of(pat.edge[static_cast<size_t>(i)]));
            prev = cur;
            cur = next;
        }
        return c;
    }

    // Root at a leaf whose neighbor has maximum degree; a non-path tree
    // rooted at a leaf colors without conflicts, but keep a repair loop over
    // the other leaves in case one slips through.
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) leaves.push_back(v);
    std::sort(leaves.begin(), leaves.end(), [&](int a, int b) {
        int da = t.degree(t.incident(a)[0].first);
        int db = t.degree(t.incident(b)[0].first);
        if (da != db) return da > db;
        return a < b;
    });
    for (int r : leaves) {
        for (Color start : {Color::red, Color::blue}) {
            auto [cand, contract] = color_rooted_tree(t, r, start);
            if (contract.conflict_edges.empty()) return cand;
            // Local repair: flip the root multiedge to red-blue.
            DoubledColoring patched = cand;
            for (int e : contract.conflict_edges) patched.set_red_mult(e, 1);
            if (verify(t, patched).ok) return patched;
        }
    }
    throw std::logic_error("free tree coloring failed for every root choice");
}

}  // namespace lir
