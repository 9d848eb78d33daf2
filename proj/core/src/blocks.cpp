#include "lir/blocks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lir {

namespace {

// Two cycles sharing >= 2 vertices inside one biconnected, non-cycle
// component. The component has a vertex w of degree >= 3; two of its edges
// close into a cycle C1 through the component minus w, and the third edge
// reaches C1 again, giving a second cycle overlapping the first.
NonCactusError make_witness(const SimpleGraph& g, const std::vector<int>& comp_edges) {
    std::set<int> verts;
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)
    for (int e : comp_edges) {
        auto [u, v] = g.edge(e);
        verts.insert(u);
        verts.insert(v);
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    int w = -1;
    for (auto& [v, nb] : adj)
        if (nb.size() >= 3) { w = v; break; }
    // Biconnected with more edges than vertices implies such a vertex exists.
    if (w < 0) throw std::logic_error("witness construction on a cycle component");

    int a = adj[w][0].first, b = adj[w][1].first, c = adj[w][2].first;

    auto path_avoiding_w = [&](int from, const std::set<int>& targets) {
        std::map<int, int> prev;
        std::deque<int> queue{from};
        prev[from] = from;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (targets.count(v)) {
                std::vector<int> path{v};
                while (v != from) {
                    v = prev[v];
                    path.push_back(v);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (auto [u, e] : adj[v]) {
                (void)e;
                if (u == w || prev.count(u)) continue;
                prev[u] = v;
                queue.push_back(u);
            }
        }
        throw std::logic_error("biconnected component fell apart without w");
    };

    std::vector<int> p = path_avoiding_w(a, {b});
    std::vector<int> cycle1{w};
    cycle1.insert(cycle1.end(), p.begin(), p.end());

    std::set<int> on_c1(p.begin(), p.end());
    if (on_c1.count(c)) {
        // Chord w-c: the second cycle is w .. c along cycle1 closed by that chord.
        std::vector<int> cycle2{w};
        for (int v : p) {
            cycle2.push_back(v);
            if (v == c) break;
        }
        return NonCactusError(cycle1, cycle2);
    }
    std::vector<int> q = path_avoiding_w(c, on_c1);
    int z = q.back();
    std::vector<int> cycle2{w, c};
    cycle2.insert(cycle2.end(), q.begin() + 1, q.end());
    for (auto it = std::find(p.begin(), p.end(), z) + 1; it != p.end(); ++it)
        cycle2.push_back(*it);
    return NonCactusError(cycle1, cycle2);
}

// Orders a cycle component's vertices along the cycle, starting at the
// smallest id and stepping toward its smaller cycle neighbor.
std::vector<int> trace_cycle(const SimpleGraph& g, const std::vector<int>& comp_edges) {
    std::map<int, std::vector<int>> nbr;
    for (int e : comp_edges) {
        auto [u, v] = g.edge(e);
        nbr[u].push_back(v);
        nbr[v].push_back(u);
    }
    int start = nbr.begin()->first;
    for (auto& [v, ns] : nbr) {
        if (ns.size() != 2) throw std::logic_error("trace_cycle on a non-cycle component");
        if (v < start) start = v;
    }
    std::vector<int> order{start};
    int prev = start;
    int cur = std::min(nbr[start][0], nbr[start][1]);
    while (cur != start) {
        order.push_back(cur);
        int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace

BlockDecomposition blocks(const SimpleGraph& g) {
    g.require_connected();
    int n = g.vertex_count();
    BlockDecomposition out;
    out.block_of_edge.assign(static_cast<size_t>(g.edge_count()), -1);
    out.cyclic.assign(static_cast<size_t>(n), 0);
    if (n == 0) return out;

    // Iterative Tarjan biconnected components with an explicit edge stack.
    std::vector<int> num(static_cast<size_t>(n), 0), low(static_cast<size_t>(n), 0);
    std::vector<int> parent_edge(static_cast<size_t>(n), -1);
    std::vector<size_t> iter(static_cast<size_t>(n), 0);
    std::vector<int> edge_stack;
    std::vector<char> is_cut(static_cast<size_t>(n), 0);
    int clock = 0;

    auto pop_component = [&](int until_edge) {
        std::vector<int> comp;
        while (true) {
            int e = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(e);
            if (e == until_edge) break;
        }
        Block b;
        if (comp.size() == 1) {
            auto [u, v] = g.edge(comp[0]);
            b.kind = Block::Kind::bridge;
            b.vertices = {u, v};
        } else {
            std::set<int> vs;
            for (int e : comp) {
                auto [u, v] = g.edge(e);
                vs.insert(u);
                vs.insert(v);
            }
            if (vs.size() != comp.size()) throw make_witness(g, comp);
            b.kind = Block::Kind::cycle;
            b.vertices = trace_cycle(g, comp);
            for (int v : b.vertices) out.cyclic[static_cast<size_t>(v)] = 1;
        }
        int id = static_cast<int>(out.blocks.size());
        for (int e : comp) out.block_of_edge[static_cast<size_t>(e)] = id;
        out.blocks.push_back(std::move(b));
    };

    std::vector<int> stack{0};
    num[0] = low[0] = ++clock;
    int root_children = 0;
    while (!stack.empty()) {
        int v = stack.back();
        if (iter[static_cast<size_t>(v)] < g.incident(v).size()) {
            auto [w, e] = g.incident(v)[iter[static_cast<size_t>(v)]++];
            if (num[static_cast<size_t>(w)] == 0) {
                parent_edge[static_cast<size_t>(w)] = e;
                edge_stack.push_back(e);
                num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++clock;
                stack.push_back(w);
                if (v == 0) ++root_children;
            } else if (e != parent_edge[static_cast<size_t>(v)] &&
                       num[static_cast<size_t>(w)] < num[static_cast<size_t>(v)]) {
                edge_stack.push_back(e);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)],
                                                       num[static_cast<size_t>(w)]);
            }
        } else {
            stack.pop_back();
            if (stack.empty()) break;
            int p = stack.back();
            low[static_cast<size_t>(p)] =
                std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
            if (low[static_cast<size_t>(v)] >= num[static_cast<size_t>(p)]) {
                if (p != 0) is_cut[static_cast<size_t>(p)] = 1;
                pop_component(parent_edge[static_cast<size_t>(v)]);
            }
        }
    }
    if (root_children >= 2) is_cut[0] = 1;
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

bool is_cactus(const SimpleGraph& g) {
    try {
        blocks(g);
        return true;
    } catch (const NonCactusError&) {
        return false;
    }
}

namespace {

struct Planner {
    const SimpleGraph& g;
    const BlockDecomposition& d;
    std::vector<char> edge_done;
    std::vector<char> block_done;
    std::vector<std::vector<int>> cycles_at;  // vertex -> cycle block ids
    BuildPlan plan;

    explicit Planner(const SimpleGraph& graph, BlockDecomposition decomp)
        : g(graph), d(plan.decomp) {
        plan.decomp = std::move(decomp);
        edge_done.assign(static_cast<size_t>(g.edge_count()), 0);
        block_done.assign(d.blocks.size(), 0);
        cycles_at.assign(static_cast<size_t>(g.vertex_count()), {});
        for (size_t b = 0; b < d.blocks.size(); ++b)
            if (d.blocks[b].kind == Block::Kind::cycle)
                for (int v : d.blocks[b].vertices)
                    cycles_at[static_cast<size_t>(v)].push_back(static_cast<int>(b));
    }

    std::vector<int> pending_cycles(int v) {
        std::vector<int> out;
        for (int b : cycles_at[static_cast<size_t>(v)])
            if (!block_done[static_cast<size_t>(b)]) out.push_back(b);
        auto longer = [&](int a, int b) {
            if (d.blocks[a].length() != d.blocks[b].length())
                return d.blocks[a].length() > d.blocks[b].length();
            return sorted_vertices(a) < sorted_vertices(b);
        };
        std::sort(out.begin(), out.end(), longer);
        return out;
    }

    std::vector<int> sorted_vertices(int b) const {
        std::vector<int> vs = d.blocks[static_cast<size_t>(b)].vertices;
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    bool has_pending_cycles(int v) {
        for (int b : cycles_at[static_cast<size_t>(v)])
            if (!block_done[static_cast<size_t>(b)]) return true;
        return false;
    }

    WoodyTree woody_tree(int root) {
        WoodyTree t;
        t.root = root;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (auto [w, e] : g.incident(v)) {
                if (edge_done[static_cast<size_t>(e)]) continue;
                int b = d.block_of_edge[static_cast<size_t>(e)];
                if (d.blocks[static_cast<size_t>(b)].kind != Block::Kind::bridge) continue;
                edge_done[static_cast<size_t>(e)] = 1;
                block_done[static_cast<size_t>(b)] = 1;
                t.edges.push_back(e);
                if (has_pending_cycles(w))
                    t.exit_leaves.push_back(w);
                else
                    queue.push_back(w);
            }
        }
        std::sort(t.exit_leaves.begin(), t.exit_leaves.end());
        return t;
    }

    AttachGroup make_group(int host) {
        AttachGroup grp;
        grp.host = host;
        grp.cycles = pending_cycles(host);
        for (int b : grp.cycles) mark_cycle(b);
        grp.tree = woody_tree(host);
        grp.spike_only = grp.cycles.empty() && grp.tree.edges.size() == 2 &&
                         grp.tree.exit_leaves.empty() && tree_degree(grp.tree, host) == 1;
        return grp;
    }

    int tree_degree(const WoodyTree& t, int v) const {
        int deg = 0;
        for (int e : t.edges) {
            auto [a, b] = g.edge(e);
            if (a == v || b == v) ++deg;
        }
        return deg;
    }

    void mark_cycle(int b) {
        block_done[static_cast<size_t>(b)] = 1;
        // Cycle edges are recovered from the vertex order at coloring time.
        const auto& vs = d.blocks[static_cast<size_t>(b)].vertices;
        for (size_t i = 0; i < vs.size(); ++i) {
            int e = g.edge_id(vs[i], vs[(i + 1) % vs.size()]);
            edge_done[static_cast<size_t>(e)] = 1;
        }
    }

    // Worklist entries: a freshly colored cycle whose vertices host next, or
    // a woody leaf with pending cycles. Groups are assembled when an entry
    // is dequeued; in a cactus every block is reachable through exactly one
    // already-colored vertex, so nothing is consumed twice.
    void run(int initial) {
        plan.initial_cycle = initial;
        mark_cycle(initial);
        struct Work {
            PlanItem::Kind kind;
            int id;  // cycle block index, or the leaf host vertex
        };
        std::deque<Work> queue{{PlanItem::Kind::cycle_batch, initial}};
        while (!queue.empty()) {
            Work w = queue.front();
            queue.pop_front();
            PlanItem item;
            item.kind = w.kind;
            if (w.kind == PlanItem::Kind::cycle_batch) {
                item.cycle_block = w.id;
                std::vector<int> hosts = d.blocks[static_cast<size_t>(w.id)].vertices;
                std::sort(hosts.begin(), hosts.end());
                for (int v : hosts) {
                    AttachGroup grp = make_group(v);
                    if (!grp.cycles.empty() || !grp.tree.empty())
                        item.groups.push_back(std::move(grp));
                }
            } else {
                AttachGroup grp = make_group(w.id);
                if (grp.cycles.empty() && grp.tree.empty()) continue;
                item.groups.push_back(std::move(grp));
            }
            for (const AttachGroup& grp : item.groups) {
                for (int b : grp.cycles) queue.push_back({PlanItem::Kind::cycle_batch, b});
                for (int leaf : grp.tree.exit_leaves)
                    queue.push_back({PlanItem::Kind::leaf_join, leaf});
            }
            if (!item.groups.empty()) plan.items.push_back(std::move(item));
        }
    }
};

}  // namespace

BuildPlan build_plan(const SimpleGraph& g) {
    BlockDecomposition d = blocks(g);
    int best = -1;
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        if (d.blocks[b].kind != Block::Kind::cycle) continue;
        if (best < 0) {
            best = static_cast<int>(b);
            continue;
        }
        const Block& cand = d.blocks[b];
        const Block& cur = d.blocks[static_cast<size_t>(best)];
        if (cand.length() > cur.length()) best = static_cast<int>(b);
        else if (cand.length() == cur.length()) {
            std::vector<int> a = cand.vertices, c = cur.vertices;
            std::sort(a.begin(), a.end());
            std::sort(c.begin(), c.end());
            if (a < c) best = static_cast<int>(b);
        }
    }
    if (best < 0) throw TreeInputError();

    Planner planner(g, std::move(d));
    planner.run(best);
    return std::move(planner.plan);
}

}  // namespace lir
