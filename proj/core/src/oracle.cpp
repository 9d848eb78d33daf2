#include "lir/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lir {

const char* lir_value_name(LirResult::Value v) {
    switch (v) {
        case LirResult::Value::one: return "1";
        case LirResult::Value::two: return "2";
        case LirResult::Value::more_than_2_or_uncolorable: return "more_than_2_or_uncolorable";
    }
    return "?";
}

const char* tprime_kind_name(TprimeClass::Kind k) {
    switch (k) {
        case TprimeClass::Kind::odd_path: return "odd_path";
        case TprimeClass::Kind::odd_cycle: return "odd_cycle";
        case TprimeClass::Kind::family_T: return "family_T";
        case TprimeClass::Kind::not_in_Tprime: return "not_in_Tprime";
    }
    return "?";
}

bool monochromatic_ok(const SimpleGraph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == g.degree(v)) return false;
    return true;
}

namespace {

// DFS over edges in id order with the digit order RR < BB < RB. A vertex
// whose incident edges are all assigned freezes its degrees; any frozen
// edge may then be checked and the branch cut.
std::optional<DoubledColoring> search_two_coloring(const SimpleGraph& g,
                                                   const std::vector<int>& prefix) {
    int m = g.edge_count();
    int n = g.vertex_count();
    std::vector<int> remaining(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) remaining[static_cast<size_t>(v)] = g.degree(v);
    std::vector<int> deg_r(static_cast<size_t>(n), 0), deg_b(static_cast<size_t>(n), 0);
    std::vector<int> red_of_edge(static_cast<size_t>(m), 0);
    static const int digit_red[3] = {2, 0, 1};  // RR, BB, RB

    std::optional<DoubledColoring> found;
    auto rec = [&](auto&& self, int e) -> bool {
        if (e == m) {
            DoubledColoring c(m);
            for (int i = 0; i < m; ++i) c.set_red_mult(i, red_of_edge[static_cast<size_t>(i)]);
            found = std::move(c);
            return true;
        }
        auto [u, v] = g.edge(e);
        int lo = 0, hi = 3;
        if (e < static_cast<int>(prefix.size())) {
            lo = prefix[static_cast<size_t>(e)];
            hi = lo + 1;
        }
        for (int d = lo; d < hi; ++d) {
            int r = digit_red[d];
            red_of_edge[static_cast<size_t>(e)] = r;
            deg_r[static_cast<size_t>(u)] += r;
            deg_r[static_cast<size_t>(v)] += r;
            deg_b[static_cast<size_t>(u)] += 2 - r;
            deg_b[static_cast<size_t>(v)] += 2 - r;
            --remaining[static_cast<size_t>(u)];
            --remaining[static_cast<size_t>(v)];
            bool ok = true;
            for (int w : {u, v}) {
                if (remaining[static_cast<size_t>(w)] != 0) continue;
                for (auto [z, f] : g.incident(w)) {
                    if (remaining[static_cast<size_t>(z)] != 0) continue;
                    int fr = red_of_edge[static_cast<size_t>(f)];
                    if (fr >= 1 && deg_r[static_cast<size_t>(w)] == deg_r[static_cast<size_t>(z)])
                        ok = false;
                    if (fr <= 1 && deg_b[static_cast<size_t>(w)] == deg_b[static_cast<size_t>(z)])
                        ok = false;
                    if (!ok) break;
                }
                if (!ok) break;
            }
            if (ok && self(self, e + 1)) return true;
            deg_r[static_cast<size_t>(u)] -= r;
            deg_r[static_cast<size_t>(v)] -= r;
            deg_b[static_cast<size_t>(u)] -= 2 - r;
            deg_b[static_cast<size_t>(v)] -= 2 - r;
            ++remaining[static_cast<size_t>(u)];
            ++remaining[static_cast<size_t>(v)];
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

void check_cap(const SimpleGraph& g, int edge_cap, const char* who) {
    if (g.edge_count() > edge_cap)
        throw std::invalid_argument(std::string(who) + " refused: " +
                                    std::to_string(g.edge_count()) +
                                    " edges exceed the cap of " + std::to_string(edge_cap));
}

}  // namespace

LirResult brute_lir2(const SimpleGraph& g, int edge_cap) {
    check_cap(g, edge_cap, "brute_lir2");
    int m = g.edge_count();
    if (m == 0) return {LirResult::Value::one, DoubledColoring(0)};

    // One color works exactly when G itself is locally irregular: doubling
    // scales every degree by two.
    if (monochromatic_ok(g)) {
        DoubledColoring mono(m);
        for (int e = 0; e < m; ++e) mono.set_red_mult(e, 2);
        return {LirResult::Value::one, std::move(mono)};
    }
    if (auto w = search_two_coloring(g, {})) return {LirResult::Value::two, std::move(w)};
    return {LirResult::Value::more_than_2_or_uncolorable, std::nullopt};
}

LirResult brute_lir2_prefix(const SimpleGraph& g, const std::vector<int>& prefix, int edge_cap) {
    check_cap(g, edge_cap, "brute_lir2_prefix");
    if (auto w = search_two_coloring(g, prefix)) return {LirResult::Value::two, std::move(w)};
    return {LirResult::Value::more_than_2_or_uncolorable, std::nullopt};
}

// ------------------------------------------------------------ T' family ---

namespace {

struct Peeler {
    const SimpleGraph& g;
    std::vector<char> removed_edge;
    std::vector<int> live_deg;
    int live_edges;
    std::vector<TprimeClass::Peel> steps;

    explicit Peeler(const SimpleGraph& graph) : g(graph) {
        removed_edge.assign(static_cast<size_t>(g.edge_count()), 0);
        live_deg.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int v = 0; v < g.vertex_count(); ++v) live_deg[static_cast<size_t>(v)] = g.degree(v);
        live_edges = g.edge_count();
    }

    bool alive(int e) const { return !removed_edge[static_cast<size_t>(e)]; }

    std::vector<std::pair<int, int>> live_incident(int v) const {
        std::vector<std::pair<int, int>> out;
        for (auto [w, e] : g.incident(v))
            if (alive(e)) out.emplace_back(w, e);
        return out;
    }

    // Is v on a live triangle?
    bool on_triangle(int v) const {
        auto inc = live_incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j) {
                int e = g.edge_id(inc[i].first, inc[j].first);
                if (e >= 0 && alive(e)) return true;
            }
        return false;
    }

    void drop(int e) {
        removed_edge[static_cast<size_t>(e)] = 1;
        auto [u, v] = g.edge(e);
        --live_deg[static_cast<size_t>(u)];
        --live_deg[static_cast<size_t>(v)];
        --live_edges;
    }
    void restore(int e) {
        removed_edge[static_cast<size_t>(e)] = 0;
        auto [u, v] = g.edge(e);
        ++live_deg[static_cast<size_t>(u)];
        ++live_deg[static_cast<size_t>(v)];
        ++live_edges;
    }

    bool is_core_triangle(std::vector<int>* out) const {
        if (live_edges != 3) return false;
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (live_deg[static_cast<size_t>(v)] == 2) verts.push_back(v);
            else if (live_deg[static_cast<size_t>(v)] != 0) return false;
        if (verts.size() != 3) return false;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) {
                int e = g.edge_id(verts[i], verts[j]);
                if (e < 0 || !alive(e)) return false;
            }
        if (out) *out = verts;
        return true;
    }

    // A maximal live pendant path from leaf `u` inward: vertices from the
    // attachment end to the leaf.
    std::optional<std::vector<int>> pendant_path_from(int u) const {
        std::vector<int> chain{u};
        int prev = -1, cur = u;
        while (true) {
            auto inc = live_incident(cur);
            std::vector<int> next;
            for (auto [w, e] : inc) {
                (void)e;
                if (w != prev) next.push_back(w);
            }
            if (cur != u && (live_deg[static_cast<size_t>(cur)] != 2)) break;
            if (next.size() != 1) break;
            prev = cur;
            cur = next[0];
            chain.push_back(cur);
        }
        if (chain.size() < 2) return std::nullopt;
        std::reverse(chain.begin(), chain.end());  // attachment vertex first
        return chain;
    }

    bool search() {
        std::vector<int> core;
        if (is_core_triangle(&core)) {
            core_ = core;
            return true;
        }
        // Candidate even-path peels at leaves.
        std::vector<int> leaves;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (live_deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
        for (int u : leaves) {
            auto chain = pendant_path_from(u);
            if (!chain) continue;
            int len = static_cast<int>(chain->size()) - 1;
            int v = (*chain)[0];
            if (len % 2 != 0 || len < 2) continue;
            if (live_deg[static_cast<size_t>(v)] != 3) continue;
            std::vector<int> dropped;
            for (size_t i = 0; i + 1 < chain->size(); ++i)
                dropped.push_back(g.edge_id((*chain)[i], (*chain)[i + 1]));
            for (int e : dropped) drop(e);
            bool v_ok = on_triangle(v) && live_deg[static_cast<size_t>(v)] == 2;
            if (v_ok && search()) {
                steps.insert(steps.begin(), TprimeClass::Peel{*chain, {}});
                return true;
            }
            for (int e : dropped) restore(e);
        }
        // Candidate leaf-triangle peels: a live triangle with exactly one
        // vertex of higher degree, hanging on an odd path.
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (live_deg[static_cast<size_t>(w)] < 2) continue;
            auto inc = live_incident(w);
            for (size_t i = 0; i < inc.size(); ++i)
                for (size_t j = i + 1; j < inc.size(); ++j) {
                    int a = inc[i].first, b = inc[j].first;
                    int ab = g.edge_id(a, b);
                    if (ab < 0 || !alive(ab)) continue;
                    if (live_deg[static_cast<size_t>(a)] != 2 ||
                        live_deg[static_cast<size_t>(b)] != 2)
                        continue;
                    if (live_deg[static_cast<size_t>(w)] != 3) continue;
                    // Walk the path leaving the triangle at w.
                    int out_nbr = -1;
                    for (auto [z, e] : live_incident(w)) {
                        (void)e;
                        if (z != a && z != b) out_nbr = z;
                    }
                    if (out_nbr < 0) continue;
                    std::vector<int> chain{w, out_nbr};
                    int prev = w, cur = out_nbr;
                    while (live_deg[static_cast<size_t>(cur)] == 2) {
                        int nxt = -1;
                        for (auto [z, e] : live_incident(cur)) {
                            (void)e;
                            if (z != prev) nxt = z;
                        }
                        if (nxt < 0) break;
                        prev = cur;
                        cur = nxt;
                        chain.push_back(cur);
                    }
                    int len = static_cast<int>(chain.size()) - 1;
                    int v = chain.back();
                    if (len % 2 != 1) continue;
                    if (live_deg[static_cast<size_t>(v)] != 3) continue;
                    std::vector<int> dropped{ab, inc[i].second, inc[j].second};
                    for (size_t t = 0; t + 1 < chain.size(); ++t)
                        dropped.push_back(g.edge_id(chain[t], chain[t + 1]));
                    for (int e : dropped) drop(e);
                    bool v_ok = on_triangle(v) && live_deg[static_cast<size_t>(v)] == 2;
                    if (v_ok && search()) {
                        std::vector<int> path(chain.rbegin(), chain.rend());
                        steps.insert(steps.begin(),
                                     TprimeClass::Peel{path, {w, a, b}});
                        return true;
                    }
                    for (int e : dropped) restore(e);
                }
        }
        return false;
    }

    std::vector<int> core_;
};

}  // namespace

TprimeClass classify_tprime(const SimpleGraph& g) {
    g.require_connected();
    TprimeClass out;
    out.kind = TprimeClass::Kind::not_in_Tprime;
    int n = g.vertex_count(), m = g.edge_count();

    int max_deg = 0, leaf_count = 0;
    for (int v = 0; v < n; ++v) {
        max_deg = std::max(max_deg, g.degree(v));
        if (g.degree(v) == 1) ++leaf_count;
    }
    if (m == n - 1 && max_deg <= 2) {
        if (m % 2 == 1) out.kind = TprimeClass::Kind::odd_path;
        return out;
    }
    // The triangle itself is the base of the recursive family, not an odd
    // cycle; every longer cycle short-circuits here.
    if (m == n && max_deg == 2 && n != 3) {
        if (n % 2 == 1) out.kind = TprimeClass::Kind::odd_cycle;
        return out;
    }
    if (max_deg > 3) return out;
    if (n < 3) return out;

    Peeler peeler(g);
    if (peeler.search()) {
        out.kind = TprimeClass::Kind::family_T;
        out.certificate = std::move(peeler.steps);
        out.core_triangle = std::move(peeler.core_);
    }
    return out;
}

bool replay_tprime_certificate(const SimpleGraph& g, const TprimeClass& cls) {
    if (cls.kind != TprimeClass::Kind::family_T) return false;
    std::set<int> removed;
    auto edge_alive = [&](int e) { return !removed.count(e); };
    for (const auto& step : cls.certificate) {
        for (size_t i = 0; i + 1 < step.path.size(); ++i) {
            int e = g.edge_id(step.path[i], step.path[i + 1]);
            if (e < 0 || !edge_alive(e)) return false;
            removed.insert(e);
        }
        if (!step.triangle.empty()) {
            if (step.triangle.size() != 3) return false;
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = i + 1; j < 3; ++j) {
                    int e = g.edge_id(step.triangle[i], step.triangle[j]);
                    if (e < 0 || !edge_alive(e)) return false;
                    removed.insert(e);
                }
        }
    }
    if (cls.core_triangle.size() != 3) return false;
    std::set<int> rest;
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_alive(e)) rest.insert(e);
    if (rest.size() != 3) return false;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            int e = g.edge_id(cls.core_triangle[i], cls.core_triangle[j]);
            if (e < 0 || !rest.count(e)) return false;
        }
    return true;
}

bool graph_uncolorable_check(const SimpleGraph& g, int edge_cap) {
    int m = g.edge_count();
    if (m > edge_cap)
        throw std::invalid_argument("graph_uncolorable_check refused: " + std::to_string(m) +
                                    " edges exceed the cap of " + std::to_string(edge_cap));
    if (m == 0) return false;

    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(m), -1);
    std::vector<int> remaining(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) remaining[static_cast<size_t>(v)] = g.degree(v);
    // Degrees per color class, sized generously.
    std::vector<std::vector<int>> cdeg(static_cast<size_t>(m),
                                       std::vector<int>(static_cast<size_t>(n), 0));

    auto rec = [&](auto&& self, int e, int used) -> bool {
        if (e == m) return true;
        auto [u, v] = g.edge(e);
        int limit = std::min(used + 1, m);
        for (int c = 0; c < limit; ++c) {
            color[static_cast<size_t>(e)] = c;
            ++cdeg[static_cast<size_t>(c)][static_cast<size_t>(u)];
            ++cdeg[static_cast<size_t>(c)][static_cast<size_t>(v)];
            --remaining[static_cast<size_t>(u)];
            --remaining[static_cast<size_t>(v)];
            bool ok = true;
            for (int w : {u, v}) {
                if (remaining[static_cast<size_t>(w)] != 0) continue;
                for (auto [z, f] : g.incident(w)) {
                    if (remaining[static_cast<size_t>(z)] != 0) continue;
                    int fc = color[static_cast<size_t>(f)];
                    if (fc < 0) continue;
                    if (cdeg[static_cast<size_t>(fc)][static_cast<size_t>(w)] ==
                        cdeg[static_cast<size_t>(fc)][static_cast<size_t>(z)])
                        ok = false;
                    if (!ok) break;
                }
                if (!ok) break;
            }
            if (ok && self(self, e + 1, std::max(used, c + 1))) return true;
            --cdeg[static_cast<size_t>(c)][static_cast<size_t>(u)];
            --cdeg[static_cast<size_t>(c)][static_cast<size_t>(v)];
            ++remaining[static_cast<size_t>(u)];
            ++remaining[static_cast<size_t>(v)];
            color[static_cast<size_t>(e)] = -1;
        }
        return false;
    };
    return !rec(rec, 0, 0);
}

}  // namespace lir
