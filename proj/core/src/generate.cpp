#include "lir/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "lir/blocks.hpp"

namespace lir {

namespace {

// Deterministic helpers over the engine's raw 64-bit stream; the standard
// distributions are not reproducible across library implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t raw() { return eng(); }
    int below(int k) { return static_cast<int>(raw() % static_cast<uint64_t>(k)); }
    double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
};

struct GrowingGraph {
    std::vector<std::pair<int, int>> edges;
    int n = 1;
    std::vector<char> cyclic{0};

    int add_vertex(bool cyc) {
        cyclic.push_back(cyc ? 1 : 0);
        return n++;
    }
    void add_edge(int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }

    SimpleGraph build() const {
        SimpleGraph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
};

}  // namespace

SimpleGraph gen_cactus(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("gen_cactus needs n >= 1");
    Rng rng(spec.seed);
    GrowingGraph g;
    while (g.n < spec.n) {
        int room = spec.n - g.n;
        double roll = rng.unit();
        if (spec.spike_bias > 0 && roll < spec.spike_bias && room >= 2) {
            // Pendant 2P3 rooted at its end: the construction's hard case.
            std::vector<int> hosts;
            for (int v = 0; v < g.n; ++v)
                if (g.cyclic[static_cast<size_t>(v)]) hosts.push_back(v);
            int at = hosts.empty() ? rng.below(g.n) : hosts[static_cast<size_t>(
                                                          rng.below(static_cast<int>(hosts.size())))];
            int mid = g.add_vertex(false);
            int tip = g.add_vertex(false);
            g.add_edge(at, mid);
            g.add_edge(mid, tip);
            continue;
        }
        if (roll < spec.spike_bias + spec.cycle_ratio && room >= 2 && spec.max_cycle_len >= 3) {
            int longest = std::min(spec.max_cycle_len, room + 1);
            if (longest >= 3) {
                int len = 3 + rng.below(longest - 2);
                int at = rng.below(g.n);
                g.cyclic[static_cast<size_t>(at)] = 1;
                int prev = at;
                for (int i = 1; i < len; ++i) {
                    int v = g.add_vertex(true);
                    g.add_edge(prev, v);
                    prev = v;
                }
                g.add_edge(prev, at);
                continue;
            }
        }
        int at = rng.below(g.n);
        int v = g.add_vertex(false);
        g.add_edge(at, v);
    }
    return g.build();
}

// ---------------------------------------------------------- canonical ---

namespace {

// Rooted cactus code: blocks hanging at (v, excluding the block we came
// from), children sorted; cycles take the cheaper of their two traversals.
struct CactusCoder {
    const SimpleGraph& g;
    const BlockDecomposition& d;
    std::vector<std::vector<int>> blocks_at;

    CactusCoder(const SimpleGraph& graph, const BlockDecomposition& decomp)
        : g(graph), d(decomp), blocks_at(static_cast<size_t>(graph.vertex_count())) {
        for (size_t b = 0; b < d.blocks.size(); ++b)
            for (int v : d.blocks[b].vertices)
                blocks_at[static_cast<size_t>(v)].push_back(static_cast<int>(b));
    }

    std::string code(int v, int from_block) const {
        std::vector<std::string> parts;
        for (int b : blocks_at[static_cast<size_t>(v)]) {
            if (b == from_block) continue;
            const Block& blk = d.blocks[static_cast<size_t>(b)];
            if (blk.kind == Block::Kind::bridge) {
                int w = blk.vertices[0] == v ? blk.vertices[1] : blk.vertices[0];
                parts.push_back("(b" + code(w, b) + ")");
            } else {
                // Walk the cycle from v in both directions.
                const auto& vs = blk.vertices;
                int L = static_cast<int>(vs.size());
                int pos = static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
                std::string best;
                for (int dir : {1, -1}) {
                    std::string s = "(c" + std::to_string(L);
                    for (int i = 1; i < L; ++i) {
                        int idx = (pos + dir * i % L + L) % L;
                        s += "," + code(vs[static_cast<size_t>(idx)], b);
                    }
                    s += ")";
                    if (best.empty() || s < best) best = s;
                }
                parts.push_back(std::move(best));
            }
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "[";
        for (auto& p : parts) out += p;
        out += "]";
        return out;
    }
};

}  // namespace

std::string cactus_canonical_code(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return "<>";
    BlockDecomposition d = blocks(g);
    CactusCoder coder(g, d);
    std::string best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::string s = coder.code(v, -1);
        if (best.empty() || s < best) best = s;
    }
    return std::to_string(g.vertex_count()) + "|" + best;
}

std::string graph_canonical_code(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("graph_canonical_code handles n <= 8");
    // Vertices may only swap within their degree class; enumerate the
    // product of in-class permutations.
    std::map<int, std::vector<int>> by_degree;
    for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& [d, vs] : by_degree) {
        (void)d;
        classes.push_back(vs);
    }
    std::string best;
    std::vector<int> order;
    auto emit = [&]() {
        std::string s(static_cast<size_t>(n * (n - 1) / 2), '0');
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.has_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
                    s[static_cast<size_t>(k)] = '1';
        if (best.empty() || s < best) best = std::move(s);
    };
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            emit();
            return;
        }
        std::vector<int> perm = classes[ci];
        std::sort(perm.begin(), perm.end());
        do {
            size_t before = order.size();
            order.insert(order.end(), perm.begin(), perm.end());
            self(self, ci + 1);
            order.resize(before);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
    return std::to_string(n) + "|" + best;
}

// --------------------------------------------------------- enumeration ---

std::vector<SimpleGraph> enumerate_small_cacti(int n_max) {
    if (n_max < 1 || n_max > 10)
        throw std::invalid_argument("enumerate_small_cacti handles 1 <= n_max <= 10");
    std::vector<SimpleGraph> out;
    std::set<std::string> seen;
    std::vector<SimpleGraph> frontier;

    SimpleGraph k1(1);
    seen.insert(cactus_canonical_code(k1));
    out.push_back(k1);
    frontier.push_back(k1);

    while (!frontier.empty()) {
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& g : frontier) {
            int n = g.vertex_count();
            auto try_add = [&](const SimpleGraph& h) {
                std::string code = cactus_canonical_code(h);
                if (seen.insert(code).second) {
                    out.push_back(h);
                    next.push_back(h);
                }
            };
            // Pendant edge at any vertex.
            if (n + 1 <= n_max)
                for (int v = 0; v < n; ++v) {
                    SimpleGraph h(n + 1);
                    for (auto [a, b] : g.edges()) h.add_edge(a, b);
                    h.add_edge(v, n);
                    try_add(h);
                }
            // Cycle of length k glued at any vertex.
            for (int k = 3; n + k - 1 <= n_max; ++k)
                for (int v = 0; v < n; ++v) {
                    SimpleGraph h(n + k - 1);
                    for (auto [a, b] : g.edges()) h.add_edge(a, b);
                    int prev = v;
                    for (int i = 0; i < k - 1; ++i) {
                        h.add_edge(prev, n + i);
                        prev = n + i;
                    }
                    h.add_edge(prev, v);
                    try_add(h);
                }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.edge_count() < b.edge_count();
    });
    return out;
}

std::vector<SimpleGraph> enumerate_small_connected_graphs(int m_max) {
    if (m_max < 0 || m_max > 7)
        throw std::invalid_argument("enumerate_small_connected_graphs handles m_max <= 7");
    std::vector<SimpleGraph> out;
    std::set<std::string> seen;

    auto try_add = [&](const SimpleGraph& g) {
        if (!g.is_connected()) return;
        std::string code = graph_canonical_code(g);
        if (seen.insert(code).second) out.push_back(g);
    };

    // All vertex counts where a connected graph with <= m_max edges is
    // dense enough to enumerate by bitmask.
    for (int n = 1; n <= std::min(7, m_max + 1); ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        int s = static_cast<int>(slots.size());
        for (uint32_t mask = 0; mask < (1u << s); ++mask) {
            int m = __builtin_popcount(mask);
            if (m > m_max || m < n - 1) continue;
            SimpleGraph g(n);
            for (int i = 0; i < s; ++i)
                if (mask & (1u << i)) g.add_edge(slots[static_cast<size_t>(i)].first,
                                                 slots[static_cast<size_t>(i)].second);
            try_add(g);
        }
    }
    // With eight vertices and at most seven edges only trees connect; take
    // them from the cactus enumerator.
    if (m_max == 7)
        for (const SimpleGraph& g : enumerate_small_cacti(8))
            if (g.vertex_count() == 8 && g.edge_count() == 7) {
                out.push_back(g);
            }
    return out;
}

}  // namespace lir
