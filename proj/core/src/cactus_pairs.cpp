#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>

#include "lir/cactus_color.hpp"

// Joint attachment to the special pairs T, T', S and S'. Each strategy runs
// under a caller-held checkpoint: it may mutate freely and just return false
// to have everything rolled back. The pair's own multiedge (and, on a
// triangle, the two edges to the third vertex) stays exempt from scoped
// checks until the closing full-region check.

namespace lir {

namespace {

EdgeColor mono(Color c) { return c == Color::red ? EdgeColor::R : EdgeColor::B; }

}  // namespace

// ----------------------------------------------------- label predicates ---

bool CactusColorer::label_predicate_ok(int v, std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    Label l = st_.label[static_cast<size_t>(v)];
    int r = st_.deg_r[static_cast<size_t>(v)], b = st_.deg_b[static_cast<size_t>(v)];
    bool even = r % 2 == 0;
    int pr = st_.partner[static_cast<size_t>(v)];
    int lb = st_.label_block[static_cast<size_t>(v)];
    int cyclen = lb >= 0 ? blk(lb).length() : 0;

    // Colored multiedges on the labeling cycle.
    std::vector<EdgeColor> own_cycle_edges;
    for (auto [w, e] : g_.incident(v)) {
        (void)w;
        if (!st_.colored[static_cast<size_t>(e)]) continue;
        if (plan_.decomp.block_of_edge[static_cast<size_t>(e)] != lb) continue;
        own_cycle_edges.push_back(edge_color_of(st_.coloring.red_mult(e)));
    }

    switch (l) {
        case Label::none:
            return true;
        case Label::A: {
            if (!even) return fail("A must be even");
            if (r <= 2 && b <= 2) return fail("A needs a color degree above two");
            for (int w : cycle_neighbors(v)) {
                Label wl = st_.label[static_cast<size_t>(w)];
                if (wl == Label::none) continue;
                if (!allowed_next_to_A(wl) && !st_.hosted[static_cast<size_t>(w)])
                    return fail("A neighbor outside {B,S2,S,S'}");
            }
            return true;
        }
        case Label::B: {
            if (even) return fail("B must be odd");
            for (int w : cycle_neighbors(v)) {
                Label wl = st_.label[static_cast<size_t>(w)];
                if (wl == Label::none) continue;
                if (!allowed_next_to_B(wl) && !st_.hosted[static_cast<size_t>(w)])
                    return fail("B neighbor outside {A,S1,T,T'}");
            }
            return true;
        }
        case Label::S1: {
            if (r != 2 || b != 2 || r + b != 4) return fail("S1 needs degree 4 split 2/2");
            if (own_cycle_edges.size() != 2 || own_cycle_edges[0] != EdgeColor::RB ||
                own_cycle_edges[1] != EdgeColor::RB)
                return fail("S1 needs two red-blue multiedges");
            return true;
        }
        case Label::S2:
        case Label::S2t: {
            if (r != 2 || b != 2 || r + b != 4) return fail("S2 needs degree 4 split 2/2");
            if (own_cycle_edges.size() != 2) return fail("S2 needs its two cycle multiedges");
            bool mono_pair = (own_cycle_edges[0] == EdgeColor::R &&
                              own_cycle_edges[1] == EdgeColor::B) ||
                             (own_cycle_edges[0] == EdgeColor::B &&
                              own_cycle_edges[1] == EdgeColor::R);
            if (!mono_pair) return fail("S2 needs one blue and one red multiedge");
            if (l == Label::S2t && cyclen != 3) return fail("S2~ lives on a triangle");
            if (l == Label::S2 && cyclen == 3) return fail("S2 never lives on a triangle");
            return true;
        }
        case Label::S: {
            if (pr < 0 || st_.label[static_cast<size_t>(pr)] != Label::S)
                return fail("S without partner");
            if (even) return fail("S members are odd");
            if (g_.edge_id(v, pr) < 0) return fail("S members must be adjacent");
            return true;
        }
        case Label::Sp: {
            if (pr < 0 || st_.label[static_cast<size_t>(pr)] != Label::Sp)
                return fail("S' without partner");
            if (cyclen != 3 && cyclen != 5) return fail("S' lives on C3 or C5");
            bool pr_even = st_.deg_r[static_cast<size_t>(pr)] % 2 == 0;
            if (even == pr_even) return fail("S' pairs an even with an odd vertex");
            return true;
        }
        case Label::T: {
            if (pr < 0 || st_.label[static_cast<size_t>(pr)] != Label::T)
                return fail("T without partner");
            if (cyclen != 3) return fail("T lives on a triangle");
            if (!even) return fail("T members are even");
            return true;
        }
        case Label::Tp: {
            if (pr < 0 || st_.label[static_cast<size_t>(pr)] != Label::Tp)
                return fail("T' without partner");
            if (cyclen != 3) return fail("T' lives on a triangle");
            bool pr_even = st_.deg_r[static_cast<size_t>(pr)] % 2 == 0;
            if (even == pr_even) return fail("T' pairs an even with an odd vertex");
            return true;
        }
    }
    return true;
}

// ------------------------------------------------------------- helpers ---

namespace {

bool group_is_k2_only(const AttachGroup* g) {
    return g && g->cycles.empty() && g->tree.edges.size() == 1;
}

bool group_is_spike(const AttachGroup* g) { return g && g->spike_only; }

bool group_empty(const AttachGroup* g) {
    return !g || (g->cycles.empty() && g->tree.empty());
}

}  // namespace

// -------------------------------------------------------------- pair S ---

bool CactusColorer::pair_strategy_S(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                                    int variant) {
    size_t start = checkpoint();
    int pe = edge_between(x1, x2);
    std::set<int> skip{pe};
    auto heavier_blue = [&](int a, int c) {
        int da = st_.deg_b[static_cast<size_t>(a)] - st_.deg_r[static_cast<size_t>(a)];
        int dc = st_.deg_b[static_cast<size_t>(c)] - st_.deg_r[static_cast<size_t>(c)];
        return da >= dc;
    };
    int sA = heavier_blue(x1, x2) ? x1 : x2;  // the blue-leaning member
    int sB = sA == x1 ? x2 : x1;
    const AttachGroup* gA = sA == x1 ? g1 : g2;
    const AttachGroup* gB = sA == x1 ? g2 : g1;

    auto close = [&]() {
        auto touched = trace_since(start);
        touched.push_back(x1);
        touched.push_back(x2);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        return std::make_pair(touched, region_ok(touched, {}));
    };

    int total_cycles = (g1 ? static_cast<int>(g1->cycles.size()) : 0) +
                       (g2 ? static_cast<int>(g2->cycles.size()) : 0);
    bool no_trees = (!g1 || g1->tree.empty()) && (!g2 || g2->tree.empty());
    int lone = -1, bearer = -1;
    if (total_cycles == 1 && no_trees) {
        if (g1 && !g1->cycles.empty()) {
            lone = g1->cycles[0];
            bearer = x1;
        } else {
            lone = g2->cycles[0];
            bearer = x2;
        }
        int L = blk(lone).length();
        if (!(L == 3 || L % 4 == 0 || L % 4 == 1)) lone = -1;
    }

    // Case 1: a single triangle gets its dedicated template; a single C4k or
    // C4k+1 rides the S2 method after the pair multiedge turns one color.
    if (lone >= 0 && variant < 2) {
        int L = blk(lone).length();
        if (L == 3) {
            if (variant != 0) return false;
            for (auto& pat : special_pattern_variants(SpecialKind::pair_s_c3, 3))
                for (auto& adj : {pat, swap_colors(pat)})
                    for (int dir : {1, -1})
                        if (try_place(lone, bearer, {adj, adj.anchor, dir}, skip, Label::S))
                            return close().second;
            return false;
        }
        EdgeColor recolor = bearer == sA ? EdgeColor::B : EdgeColor::R;
        if (variant == 1) recolor = swapped(recolor);
        put_edge(pe, recolor);
        if (!join_cycle(bearer, lone, JoinMethod::s2_like, steer_color(bearer), skip, Label::S))
            return false;
        return close().second;
    }

    // Case 2: everything through the B method, blue leaning at one member
    // and red at the other, then the prescribed recolor repairs.
    int k = variant - (lone >= 0 ? 2 : 0);
    if (k < 0 || k > 5) return false;
    Color steerA = Color::blue, steerB = Color::red;
    int s2A = 0, s2B = 0;
    switch (k) {
        case 0: break;
        case 1: std::swap(steerA, steerB); break;
        case 2: s2A = 2; break;
        case 3: s2B = 2; break;
        case 4: s2A = 2; std::swap(steerA, steerB); break;
        case 5: s2B = 2; std::swap(steerA, steerB); break;
    }
    std::vector<std::pair<size_t, size_t>> rangesA, rangesB;
    if (!join_side(sA, gA, JoinMethod::b_like, TreeMethod::b_like, steerA, skip, Label::S,
                   &rangesA, s2A))
        return false;
    if (!join_side(sB, gB, JoinMethod::b_like, TreeMethod::b_like, steerB, skip, Label::S,
                   &rangesB, s2B))
        return false;
    auto [touched, ok] = close();
    if (ok) return true;
    for (const auto& ranges : {rangesB, rangesA})
        for (auto [s, e] : ranges)
            if (flip_range(s, e, touched, {})) return true;
    return false;
}

// ------------------------------------------------------------- pair S' ---

bool CactusColorer::pair_strategy_Sp(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                                     int variant) {
    size_t start = checkpoint();
    int pe = edge_between(x1, x2);
    std::set<int> skip{pe};
    int em = st_.is_even(x1) ? x1 : x2;
    int om = em == x1 ? x2 : x1;
    if (st_.is_even(om)) return false;
    const AttachGroup* ge = em == x1 ? g1 : g2;
    const AttachGroup* go = em == x1 ? g2 : g1;

    auto close = [&]() {
        auto touched = trace_since(start);
        touched.push_back(x1);
        touched.push_back(x2);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        return std::make_pair(touched, region_ok(touched, {}));
    };

    int mode = variant / 2;
    bool mirror = variant % 2 == 1;
    Color steer_o = mirror ? Color::blue : Color::red;
    Color steer_e = other(steer_o);
    if (mode > 2) return false;

    if (mode == 2) {
        // Plainest variant: both sides through the B method, no parity flip.
        if (!join_side(om, go, JoinMethod::b_like, TreeMethod::b_like, steer_o, skip, Label::Sp))
            return false;
        if (!join_side(em, ge, JoinMethod::b_like, TreeMethod::b_like, steer_e, skip, Label::Sp))
            return false;
        return close().second;
    }

    // Fills first_range when the even member's parity flip came from a cycle
    // join, whose symmetric recolor is the prescribed repair.
    auto join_even_member = [&](std::optional<std::pair<size_t, size_t>>& first_range) -> bool {
        first_range.reset();
        if (group_empty(ge)) return true;
        if (!ge->cycles.empty()) {
            size_t s = checkpoint();
            if (!join_cycle(em, ge->cycles[0], JoinMethod::s2_like, steer_e, skip, Label::Sp))
                return false;
            first_range = std::make_pair(s, checkpoint());
            for (size_t i = 1; i < ge->cycles.size(); ++i)
                if (!join_cycle(em, ge->cycles[i], JoinMethod::b_like, steer_e, skip, Label::Sp))
                    return false;
            if (!ge->tree.empty() && !join_tree(em, ge->tree, TreeMethod::b_like, steer_e, skip))
                return false;
        } else {
            // A lone multitree flips the even member through the S2 method.
            if (!join_tree(em, ge->tree, TreeMethod::s2_host, steer_e, skip)) return false;
        }
        return true;
    };

    std::optional<std::pair<size_t, size_t>> fr;
    if (mode == 0) {
        // Odd member first, then the even member with its parity flip.
        if (!join_side(om, go, JoinMethod::b_like, TreeMethod::b_like, steer_o, skip, Label::Sp))
            return false;
        if (!join_even_member(fr)) return false;
    } else {
        if (!join_even_member(fr)) return false;
        if (!join_side(om, go, JoinMethod::b_like, TreeMethod::b_like, steer_o, skip, Label::Sp))
            return false;
    }
    auto [touched, ok] = close();
    if (ok) return true;
    if (fr && flip_range(fr->first, fr->second, touched, {})) return true;
    return false;
}

// -------------------------------------------------------------- pair T ---

namespace {

// Triangle recolorings preserving the third vertex's contribution, the
// current coloring first, the role swap second.
std::vector<std::array<EdgeColor, 3>> triangle_orientations(EdgeColor h1, EdgeColor mid,
                                                            EdgeColor h2) {
    std::vector<std::array<EdgeColor, 3>> out{{h1, mid, h2}};
    auto push = [&](std::array<EdgeColor, 3> c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    push({h2, mid, h1});
    int want = red_of(h1) + red_of(h2);
    static const EdgeColor all[3] = {EdgeColor::R, EdgeColor::B, EdgeColor::RB};
    for (EdgeColor a : all)
        for (EdgeColor m : all)
            for (EdgeColor b : all)
                if (red_of(a) + red_of(b) == want) push({a, m, b});
    return out;
}

}  // namespace

bool CactusColorer::pair_strategy_T(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                                    int variant) {
    size_t start = checkpoint();
    int block = pair_block(x1, x2);
    int h = third_triangle_vertex(block, x1, x2);
    int pe = edge_between(x1, x2);
    int eh1 = edge_between(h, x1), eh2 = edge_between(h, x2);
    std::set<int> skip{pe, eh1, eh2};

    auto orientations = triangle_orientations(edge_color_of(st_.coloring.red_mult(eh1)),
                                              edge_color_of(st_.coloring.red_mult(pe)),
                                              edge_color_of(st_.coloring.red_mult(eh2)));
    int o_idx = variant / 2;
    bool swap_steer = variant % 2 == 1;
    if (o_idx >= static_cast<int>(orientations.size())) return false;

    auto close = [&]() {
        auto touched = trace_since(start);
        touched.push_back(x1);
        touched.push_back(x2);
        touched.push_back(h);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        return std::make_pair(touched, region_ok(touched, {}));
    };

    // Both members carrying lone spikes: the dedicated two-spike table
    // recolors the triangle itself.
    if (group_is_spike(g1) && group_is_spike(g2)) {
        if (o_idx > 0) return false;
        for (auto& pat : special_pattern_variants(SpecialKind::pair_t_spikes, 3)) {
            for (auto& adj : swap_steer ? std::vector<LabeledPattern>{swap_colors(pat)}
                                        : std::vector<LabeledPattern>{pat}) {
                for (int dir : {1, -1}) {
                    size_t mark = checkpoint();
                    Placement pl{adj, 0, dir};
                    if (!spikes_compatible(block, h, pl)) continue;
                    auto touched = apply_placement(block, h, pl);
                    (void)touched;
                    if (close().second) return true;
                    rollback(mark);
                }
            }
        }
        return false;
    }

    auto [a, m, b] = orientations[static_cast<size_t>(o_idx)];
    put_edge(eh1, a);
    put_edge(pe, m);
    put_edge(eh2, b);

    // Roles after the recolor: the heavy member holds a one-color pair.
    auto heavy_score = [&](int v) {
        return std::abs(st_.deg_r[static_cast<size_t>(v)] - st_.deg_b[static_cast<size_t>(v)]);
    };
    int heavy = heavy_score(x1) >= heavy_score(x2) ? x1 : x2;
    int light = heavy == x1 ? x2 : x1;
    const AttachGroup* gh = heavy == x1 ? g1 : g2;
    const AttachGroup* gl = heavy == x1 ? g2 : g1;
    Color ch = steer_color(heavy);
    if (swap_steer) ch = other(ch);
    Color cl = other(ch);

    // A lone 2K2 prefers the light member in the other color.
    if (group_is_k2_only(gl) && !group_empty(gh)) {
        put_edge(gl->tree.edges[0], mono(cl));
        if (!join_side(heavy, gh, JoinMethod::a_like, TreeMethod::a_like, ch, skip, Label::T))
            return false;
        return close().second;
    }
    if (group_is_k2_only(gh) && !group_empty(gl)) {
        put_edge(gh->tree.edges[0], mono(ch));
        if (!join_side(light, gl, JoinMethod::a_like, TreeMethod::a_like, cl, skip, Label::T))
            return false;
        return close().second;
    }
    // A lone spike at one member goes monochromatic, with the prescribed
    // recolor if the red degrees collide.
    if (group_is_spike(gh) && !group_empty(gl)) {
        size_t sp = checkpoint();
        consume_spike(heavy, PatternSpike{0, mono(ch), mono(ch)});
        if (!join_side(light, gl, JoinMethod::a_like, TreeMethod::a_like, cl, skip, Label::T))
            return false;
        auto [touched, ok] = close();
        if (ok) return true;
        if (flip_range(sp, sp + 2, touched, {})) return true;
        return false;
    }
    std::vector<std::pair<size_t, size_t>> ranges;
    if (!join_side(heavy, gh, JoinMethod::a_like, TreeMethod::a_like, ch, skip, Label::T, &ranges))
        return false;
    if (!join_side(light, gl, JoinMethod::a_like, TreeMethod::a_like, cl, skip, Label::T, &ranges))
        return false;
    auto [touched, ok] = close();
    if (ok) return true;
    for (auto [s, e] : ranges)
        if (flip_range(s, e, touched, {})) return true;
    return false;
}

// ------------------------------------------------------------- pair T' ---

bool CactusColorer::pair_strategy_Tp(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                                     int variant) {
    size_t start = checkpoint();
    int block = pair_block(x1, x2);
    int h = third_triangle_vertex(block, x1, x2);
    int pe = edge_between(x1, x2);
    int eh1 = edge_between(h, x1), eh2 = edge_between(h, x2);
    std::set<int> skip{pe, eh1, eh2};

    auto orientations = triangle_orientations(edge_color_of(st_.coloring.red_mult(eh1)),
                                              edge_color_of(st_.coloring.red_mult(pe)),
                                              edge_color_of(st_.coloring.red_mult(eh2)));
    int o_idx = variant / 2;
    bool mirror = variant % 2 == 1;
    if (o_idx >= static_cast<int>(orientations.size())) return false;
    auto [a, m, b] = orientations[static_cast<size_t>(o_idx)];
    // The second form of the pair turns into the first by recoloring the
    // pair multiedge red.
    if (o_idx == 0 && m == EdgeColor::B) m = EdgeColor::R;
    put_edge(eh1, a);
    put_edge(pe, m);
    put_edge(eh2, b);

    int em = st_.is_even(x1) ? x1 : x2;
    int om = em == x1 ? x2 : x1;
    if (st_.is_even(om) || !st_.is_even(em)) return false;
    const AttachGroup* ge = em == x1 ? g1 : g2;
    const AttachGroup* go = em == x1 ? g2 : g1;

    auto close = [&]() {
        auto touched = trace_since(start);
        touched.push_back(x1);
        touched.push_back(x2);
        touched.push_back(h);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        return std::make_pair(touched, region_ok(touched, {}));
    };

    Color steer_e = mirror ? Color::blue : steer_color(em);
    if (group_empty(go)) {
        if (!join_side(em, ge, JoinMethod::a_like, TreeMethod::a_like, steer_e, skip, Label::Tp))
            return false;
        return close().second;
    }

    // The odd member goes first: one cycle through the dedicated table (or a
    // lone multitree through the red-blue chain), flipping it even.
    std::optional<std::pair<size_t, size_t>> first_range;
    if (!go->cycles.empty()) {
        int first = go->cycles[0];
        int L = blk(first).length();
        bool placed = false;
        size_t s = checkpoint();
        for (auto& pat : special_pattern_variants(SpecialKind::tprime_first_cycle, L)) {
            for (auto& adj : mirror ? std::vector<LabeledPattern>{swap_colors(pat), pat}
                                    : std::vector<LabeledPattern>{pat, swap_colors(pat)}) {
                for (int dir : {1, -1})
                    if (try_place(first, om, {adj, adj.anchor, dir}, skip, Label::Tp)) {
                        placed = true;
                        break;
                    }
                if (placed) break;
            }
            if (placed) break;
        }
        if (!placed) placed = fallback_join(om, first, skip, true, Label::Tp);
        if (!placed) return false;
        first_range = std::make_pair(s, checkpoint());
        Color cont = mirror ? Color::red : Color::blue;
        for (size_t i = 1; i < go->cycles.size(); ++i)
            if (!join_cycle(om, go->cycles[i], JoinMethod::a_like, cont, skip, Label::Tp))
                return false;
        if (!go->tree.empty() && !join_tree(om, go->tree, TreeMethod::a_like, cont, skip))
            return false;
    } else {
        if (!join_tree(om, go->tree, TreeMethod::tprime_x2, mirror ? Color::red : Color::blue,
                       skip))
            return false;
    }
    if (!join_side(em, ge, JoinMethod::a_like, TreeMethod::a_like,
                   mirror ? Color::blue : Color::red, skip, Label::Tp))
        return false;
    auto [touched, ok] = close();
    if (ok) return true;
    if (first_range && flip_range(first_range->first, first_range->second, touched, {}))
        return true;
    return false;
}

}  // namespace lir
