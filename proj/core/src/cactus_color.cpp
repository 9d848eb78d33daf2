#include "lir/cactus_color.hpp"

#include <algorithm>
#include <unordered_map>

#include "lir/tree_color.hpp"

namespace lir {

namespace {

EdgeColor mono(Color c) { return c == Color::red ? EdgeColor::R : EdgeColor::B; }
bool is_mono(EdgeColor c) { return c != EdgeColor::RB; }

}  // namespace

Color dominating_color(const LabelState& s, int v) {
    int r = s.deg_r[static_cast<size_t>(v)], b = s.deg_b[static_cast<size_t>(v)];
    if (r == b)
        throw std::logic_error("dominating color undefined: tie at vertex " + std::to_string(v));
    return r > b ? Color::red : Color::blue;
}

CactusColorer::CactusColorer(const SimpleGraph& g, EngineOptions opts)
    : g_(g), opts_(opts), plan_(build_plan(g)) {
    int n = g.vertex_count();
    st_.coloring = DoubledColoring(g.edge_count());
    st_.colored.assign(static_cast<size_t>(g.edge_count()), 0);
    st_.deg_r.assign(static_cast<size_t>(n), 0);
    st_.deg_b.assign(static_cast<size_t>(n), 0);
    st_.label.assign(static_cast<size_t>(n), Label::none);
    st_.partner.assign(static_cast<size_t>(n), -1);
    st_.label_block.assign(static_cast<size_t>(n), -1);
    st_.hosted.assign(static_cast<size_t>(n), 0);
    has_elements_.assign(static_cast<size_t>(n), 0);
    spike_only_.assign(static_cast<size_t>(n), 0);
    group_of_.assign(static_cast<size_t>(n), nullptr);
    for (const auto& item : plan_.items)
        for (const auto& grp : item.groups) {
            has_elements_[static_cast<size_t>(grp.host)] = 1;
            spike_only_[static_cast<size_t>(grp.host)] = grp.spike_only ? 1 : 0;
            group_of_[static_cast<size_t>(grp.host)] = &grp;
        }
}

// ---------------------------------------------------------------- state ---

void CactusColorer::put_edge(int e, EdgeColor c) {
    int old = st_.colored[static_cast<size_t>(e)] ? st_.coloring.red_mult(e) : -1;
    undo_.push_back({Undo::Field::edge, e, old});
    auto [u, v] = g_.edge(e);
    if (old >= 0) {
        st_.deg_r[static_cast<size_t>(u)] -= old;
        st_.deg_r[static_cast<size_t>(v)] -= old;
        st_.deg_b[static_cast<size_t>(u)] -= 2 - old;
        st_.deg_b[static_cast<size_t>(v)] -= 2 - old;
    } else {
        st_.colored[static_cast<size_t>(e)] = 1;
        ++st_.colored_edges;
    }
    int r = red_mult_of(c);
    st_.coloring.set_red_mult(e, r);
    st_.deg_r[static_cast<size_t>(u)] += r;
    st_.deg_r[static_cast<size_t>(v)] += r;
    st_.deg_b[static_cast<size_t>(u)] += 2 - r;
    st_.deg_b[static_cast<size_t>(v)] += 2 - r;
}

void CactusColorer::put_label(int v, Label l) {
    undo_.push_back({Undo::Field::label, v, static_cast<int>(st_.label[static_cast<size_t>(v)])});
    st_.label[static_cast<size_t>(v)] = l;
}

void CactusColorer::put_partner(int v, int p) {
    undo_.push_back({Undo::Field::partner, v, st_.partner[static_cast<size_t>(v)]});
    st_.partner[static_cast<size_t>(v)] = p;
}

void CactusColorer::put_block(int v, int b) {
    undo_.push_back({Undo::Field::block, v, st_.label_block[static_cast<size_t>(v)]});
    st_.label_block[static_cast<size_t>(v)] = b;
}

void CactusColorer::put_hosted(int v) {
    undo_.push_back({Undo::Field::hosted, v, st_.hosted[static_cast<size_t>(v)]});
    st_.hosted[static_cast<size_t>(v)] = 1;
}

void CactusColorer::pending_insert(int a, int b) {
    if (a > b) std::swap(a, b);
    if (st_.pending_pairs.count({a, b})) return;
    undo_.push_back({Undo::Field::pending_add, a, b});
    st_.pending_pairs.insert({a, b});
}

void CactusColorer::pending_erase(int a, int b) {
    if (a > b) std::swap(a, b);
    if (!st_.pending_pairs.count({a, b})) return;
    undo_.push_back({Undo::Field::pending_del, a, b});
    st_.pending_pairs.erase({a, b});
}

void CactusColorer::rollback(size_t mark) {
    while (undo_.size() > mark) {
        Undo u = undo_.back();
        undo_.pop_back();
        switch (u.field) {
            case Undo::Field::edge: {
                auto [a, b] = g_.edge(u.idx);
                int cur = st_.coloring.red_mult(u.idx);
                st_.deg_r[static_cast<size_t>(a)] -= cur;
                st_.deg_r[static_cast<size_t>(b)] -= cur;
                st_.deg_b[static_cast<size_t>(a)] -= 2 - cur;
                st_.deg_b[static_cast<size_t>(b)] -= 2 - cur;
                if (u.old_value < 0) {
                    st_.colored[static_cast<size_t>(u.idx)] = 0;
                    --st_.colored_edges;
                    st_.coloring.set_red_mult(u.idx, 0);
                } else {
                    st_.coloring.set_red_mult(u.idx, u.old_value);
                    st_.deg_r[static_cast<size_t>(a)] += u.old_value;
                    st_.deg_r[static_cast<size_t>(b)] += u.old_value;
                    st_.deg_b[static_cast<size_t>(a)] += 2 - u.old_value;
                    st_.deg_b[static_cast<size_t>(b)] += 2 - u.old_value;
                }
                break;
            }
            case Undo::Field::label:
                st_.label[static_cast<size_t>(u.idx)] = static_cast<Label>(u.old_value);
                break;
            case Undo::Field::partner:
                st_.partner[static_cast<size_t>(u.idx)] = u.old_value;
                break;
            case Undo::Field::block:
                st_.label_block[static_cast<size_t>(u.idx)] = u.old_value;
                break;
            case Undo::Field::hosted:
                st_.hosted[static_cast<size_t>(u.idx)] = static_cast<char>(u.old_value);
                break;
            case Undo::Field::pending_add:
                st_.pending_pairs.erase({u.idx, u.old_value});
                break;
            case Undo::Field::pending_del:
                st_.pending_pairs.insert({u.idx, u.old_value});
                break;
            case Undo::Field::consumed:
                consumed_groups_.erase(u.idx);
                break;
        }
    }
}

std::vector<int> CactusColorer::trace_since(size_t mark) const {
    std::vector<int> verts;
    for (size_t i = mark; i < undo_.size(); ++i) {
        if (undo_[i].field != Undo::Field::edge) continue;
        auto [u, v] = g_.edge(undo_[i].idx);
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

std::vector<int> CactusColorer::edges_since(size_t mark) const {
    std::vector<int> out;
    for (size_t i = mark; i < undo_.size(); ++i)
        if (undo_[i].field == Undo::Field::edge) out.push_back(undo_[i].idx);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool CactusColorer::edge_ok(int e) const {
    if (!st_.colored[static_cast<size_t>(e)]) return true;
    auto [u, v] = g_.edge(e);
    int r = st_.coloring.red_mult(e);
    if (r >= 1 && st_.deg_r[static_cast<size_t>(u)] == st_.deg_r[static_cast<size_t>(v)])
        return false;
    if (r <= 1 && st_.deg_b[static_cast<size_t>(u)] == st_.deg_b[static_cast<size_t>(v)])
        return false;
    return true;
}

bool CactusColorer::region_ok(const std::vector<int>& verts, const std::set<int>& skip) const {
    for (int v : verts)
        for (auto [w, e] : g_.incident(v)) {
            (void)w;
            if (skip.count(e)) continue;
            if (!edge_ok(e)) return false;
        }
    return true;
}

int CactusColorer::edge_between(int u, int v) const {
    int e = g_.edge_id(u, v);
    if (e < 0) throw std::logic_error("expected an edge between plan vertices");
    return e;
}

Color CactusColorer::steer_color(int v) const {
    int r = st_.deg_r[static_cast<size_t>(v)], b = st_.deg_b[static_cast<size_t>(v)];
    return b > r ? Color::blue : Color::red;
}

bool CactusColorer::has_pending_elements(int v) const {
    return has_elements_[static_cast<size_t>(v)] && !consumed_groups_.count(v) &&
           !st_.hosted[static_cast<size_t>(v)];
}

int CactusColorer::spike_middle(const WoodyTree& t) const {
    for (int e : t.edges) {
        auto [u, v] = g_.edge(e);
        if (u == t.root) return v;
        if (v == t.root) return u;
    }
    throw std::logic_error("spike tree has no root edge");
}

void CactusColorer::consume_spike(int host, const PatternSpike& ps) {
    const AttachGroup* grp = group_of_[static_cast<size_t>(host)];
    if (!grp || !grp->spike_only) throw std::logic_error("pattern spike without a spike group");
    int m = spike_middle(grp->tree);
    int tip = -1;
    for (int e : grp->tree.edges) {
        auto [u, v] = g_.edge(e);
        if (u == m && v != host) tip = v;
        if (v == m && u != host) tip = u;
    }
    put_edge(edge_between(host, m), ps.root);
    put_edge(edge_between(m, tip), ps.outer);
    undo_.push_back({Undo::Field::consumed, host, 0});
    consumed_groups_.insert(host);
}

int CactusColorer::pair_block(int x1, int x2) const {
    int b1 = st_.label_block[static_cast<size_t>(x1)];
    int b2 = st_.label_block[static_cast<size_t>(x2)];
    if (b1 != b2 || b1 < 0) throw std::logic_error("pair members disagree on their cycle");
    return b1;
}

int CactusColorer::third_triangle_vertex(int block, int x1, int x2) const {
    const Block& b = blk(block);
    if (b.length() != 3) throw std::logic_error("triangle helper on a longer cycle");
    for (int v : b.vertices)
        if (v != x1 && v != x2) return v;
    throw std::logic_error("degenerate triangle");
}

std::vector<int> CactusColorer::cycle_neighbors(int v) const {
    std::vector<int> out;
    for (auto [w, e] : g_.incident(v)) {
        if (!st_.colored[static_cast<size_t>(e)]) continue;
        int b = plan_.decomp.block_of_edge[static_cast<size_t>(e)];
        if (plan_.decomp.blocks[static_cast<size_t>(b)].kind == Block::Kind::cycle)
            out.push_back(w);
    }
    return out;
}

// ------------------------------------------------------------ placement ---

std::vector<int> CactusColorer::apply_placement(int block, int host, const Placement& pl) {
    const Block& b = blk(block);
    int L = b.length();
    auto pos = std::find(b.vertices.begin(), b.vertices.end(), host) - b.vertices.begin();
    auto map_v = [&](int i) {
        int off = pl.dir * ((i - pl.host_at) % L);
        int idx = (static_cast<int>(pos) + off) % L;
        if (idx < 0) idx += L;
        return b.vertices[static_cast<size_t>(idx)];
    };
    std::vector<int> touched{host};
    for (int j = 0; j < L; ++j) {
        int u = map_v(j), v = map_v((j + 1) % L);
        put_edge(edge_between(u, v), pl.pat.edge[static_cast<size_t>(j)]);
    }
    for (int i = 0; i < L; ++i) {
        int v = map_v(i);
        touched.push_back(v);
        if (i == pl.pat.anchor) continue;
        put_label(v, pl.pat.labels[static_cast<size_t>(i)]);
        int pr = pl.pat.partner[static_cast<size_t>(i)];
        put_partner(v, pr < 0 ? -1 : map_v(pr));
        put_block(v, block);
    }
    for (const auto& ps : pl.pat.spikes) {
        int v = map_v(ps.at);
        consume_spike(v, ps);
        const AttachGroup* grp = group_of_[static_cast<size_t>(v)];
        int m = spike_middle(grp->tree);
        touched.push_back(m);
        for (int e : grp->tree.edges) {
            auto [a, c] = g_.edge(e);
            touched.push_back(a);
            touched.push_back(c);
        }
    }
    // Register fresh special pairs that will need joint treatment.
    for (int i = 0; i < L; ++i) {
        if (i == pl.pat.anchor) continue;
        int pr = pl.pat.partner[static_cast<size_t>(i)];
        if (pr <= i || pr == pl.pat.anchor) continue;
        int v = map_v(i), w = map_v(pr);
        if (has_pending_elements(v) || has_pending_elements(w)) pending_insert(v, w);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    return touched;
}

bool CactusColorer::spikes_compatible(int block, int host, const Placement& pl) const {
    const Block& b = blk(block);
    int L = b.length();
    auto pos = std::find(b.vertices.begin(), b.vertices.end(), host) - b.vertices.begin();
    if (pos == static_cast<long>(b.vertices.size())) return false;
    auto map_v = [&](int i) {
        int off = pl.dir * ((i - pl.host_at) % L);
        int idx = (static_cast<int>(pos) + off) % L;
        if (idx < 0) idx += L;
        return b.vertices[static_cast<size_t>(idx)];
    };
    std::set<int> pattern_spiked;
    for (const auto& ps : pl.pat.spikes) {
        int v = map_v(ps.at);
        pattern_spiked.insert(v);
        const AttachGroup* grp = group_of_[static_cast<size_t>(v)];
        if (!grp || !grp->spike_only || consumed_groups_.count(v) ||
            st_.hosted[static_cast<size_t>(v)])
            return false;
    }
    for (int i = 0; i < L; ++i) {
        if (i == pl.pat.anchor) continue;
        int v = map_v(i);
        if (spike_only_[static_cast<size_t>(v)] && !consumed_groups_.count(v) &&
            !st_.hosted[static_cast<size_t>(v)] && !pattern_spiked.count(v) &&
            !spike_safe(pl.pat.labels[static_cast<size_t>(i)]))
            return false;
    }
    return true;
}

// Hosts retire when their event closes and retired labels are exempt from
// the neighbor predicates, so placements are judged purely on the scoped
// verification; the anchor-adjacent label constraints live in the pattern
// tables themselves.
bool CactusColorer::try_place(int block, int host, const Placement& pl, const std::set<int>& skip,
                              Label host_final) {
    (void)host_final;
    if (!spikes_compatible(block, host, pl)) return false;
    size_t mark = checkpoint();
    auto touched = apply_placement(block, host, pl);
    if (region_ok(touched, skip)) return true;
    rollback(mark);
    return false;
}

// --------------------------------------------------------- cycle joins ---

std::vector<CactusColorer::Placement> CactusColorer::cycle_candidates(int host, int block,
                                                                      JoinMethod m, Color steer) {
    int L = blk(block).length();
    std::vector<Placement> out;
    auto steer_order = [&](const LabeledPattern& p) {
        LabeledPattern sw = swap_colors(p);
        auto [r, b] = p.anchor_contribution();
        bool keep_first = steer == Color::red ? r >= b : b >= r;
        return keep_first ? std::vector<LabeledPattern>{p, sw}
                          : std::vector<LabeledPattern>{sw, p};
    };
    auto add_anchored_at = [&](const LabeledPattern& base, Label target) {
        for (int a = 0; a < base.vertex_count(); ++a) {
            if (base.labels[static_cast<size_t>(a)] != target) continue;
            LabeledPattern with = base;
            with.anchor = a;
            for (auto& v : steer_order(with))
                for (int dir : {1, -1}) out.push_back({v, a, dir});
        }
    };

    if (m == JoinMethod::a_like) {
        if (L == 3) add_anchored_at(cycle_pattern(3), Label::S2t);
        else if (L % 4 == 0 || L % 4 == 1) add_anchored_at(cycle_pattern(L), Label::A);
        else add_anchored_at(cycle_pattern(L), Label::S1);
    } else if (m == JoinMethod::b_like) {
        if (L == 3) {
            // Standard triangle through its S2~ vertex with the second
            // multiedge recolored red: the leftover pair has type T.
            LabeledPattern t;
            t.is_cycle = true;
            t.name = "b-join-c3";
            t.edge = {EdgeColor::B, EdgeColor::R, EdgeColor::R};
            t.labels = {Label::none, Label::T, Label::T};
            t.partner = {-1, 2, 1};
            t.anchor = 0;
            for (auto& v : steer_order(t))
                for (int dir : {1, -1}) out.push_back({v, 0, dir});
        } else if (L % 4 == 0 || L % 4 == 1) {
            add_anchored_at(cycle_pattern(L), Label::S2);
        } else {
            // Anchor at a B vertex; the S1 vertex's multiedges are recolored
            // monochromatic so the host's parity survives.
            LabeledPattern base = cycle_pattern(L);
            int s1 = -1;
            for (int v = 0; v < L; ++v)
                if (base.labels[static_cast<size_t>(v)] == Label::S1) s1 = v;
            for (EdgeColor c : steer == Color::red
                                   ? std::vector<EdgeColor>{EdgeColor::R, EdgeColor::B}
                                   : std::vector<EdgeColor>{EdgeColor::B, EdgeColor::R}) {
                LabeledPattern rec = base;
                rec.name = base.name + "-s1recolored";
                rec.edge[static_cast<size_t>((s1 + L - 1) % L)] = c;
                rec.edge[static_cast<size_t>(s1)] = c;
                assign_pattern_labels(rec);
                if (!check_pattern(rec).ok) continue;
                for (int a : {(s1 + 1) % L, (s1 + L - 1) % L}) {
                    LabeledPattern anchored = rec;
                    anchored.anchor = a;
                    if (!pattern_labels_valid(anchored)) continue;
                    for (int dir : {1, -1}) out.push_back({anchored, a, dir});
                }
            }
        }
    } else {  // s2_like: flip the host's parity through an odd anchor
        if (L == 3 || L == 5) {
            for (auto& pat : special_pattern_variants(SpecialKind::s2_c5_c3, L))
                for (auto& v : steer_order(pat))
                    for (int dir : {1, -1}) out.push_back({v, v.anchor, dir});
        } else if (L % 4 == 2 || L % 4 == 3) {
            LabeledPattern base = cycle_pattern(L);
            int s1 = -1;
            for (int v = 0; v < L; ++v)
                if (base.labels[static_cast<size_t>(v)] == Label::S1) s1 = v;
            for (int a : {(s1 + 1) % L, (s1 + L - 1) % L}) {
                LabeledPattern anchored = base;
                anchored.anchor = a;
                for (auto& v : steer_order(anchored))
                    for (int dir : {1, -1}) out.push_back({v, a, dir});
            }
        } else {
            // Recolor an A vertex clear of S pairs to red-blue; its now-odd
            // neighbors serve as anchors.
            LabeledPattern base = cycle_pattern(L);
            int pick = -1;
            for (int v = 0; v < L && pick < 0; ++v) {
                if (base.labels[static_cast<size_t>(v)] != Label::A) continue;
                Label l1 = base.labels[static_cast<size_t>((v + 1) % L)];
                Label l2 = base.labels[static_cast<size_t>((v + L - 1) % L)];
                if (l1 != Label::S && l2 != Label::S) pick = v;
            }
            if (pick >= 0) {
                LabeledPattern rec = base;
                rec.name = base.name + "-a-to-s1";
                rec.edge[static_cast<size_t>((pick + L - 1) % L)] = EdgeColor::RB;
                rec.edge[static_cast<size_t>(pick)] = EdgeColor::RB;
                assign_pattern_labels(rec);
                if (check_pattern(rec).ok) {
                    for (int a : {(pick + 1) % L, (pick + L - 1) % L}) {
                        LabeledPattern anchored = rec;
                        anchored.anchor = a;
                        if (!pattern_labels_valid(anchored)) continue;
                        for (auto& v : steer_order(anchored))
                            for (int dir : {1, -1}) out.push_back({v, a, dir});
                    }
                }
            }
        }
        if (L >= 4) {
            // Spiked variants cover a lone spike right next to the join.
            for (auto& pat : special_pattern_variants(SpecialKind::s2_cycle_spike, L))
                for (auto& v : {pat, swap_colors(pat)})
                    for (int dir : {1, -1}) out.push_back({v, v.anchor, dir});
        }
    }
    (void)host;
    return out;
}

bool CactusColorer::join_cycle(int host, int block, JoinMethod m, Color steer,
                               const std::set<int>& skip, Label host_final) {
    for (const Placement& pl : cycle_candidates(host, block, m, steer))
        if (try_place(block, host, pl, skip, host_final)) return true;
    return fallback_join(host, block, skip, m == JoinMethod::s2_like, host_final);
}

bool CactusColorer::fallback_join(int host, int block, const std::set<int>& skip,
                                  bool flip_parity, Label host_final) {
    ++stats_.fallback_joins;
    int L = blk(block).length();
    if (L <= 64) {
        // Every verified table, at every anchor, in both transforms.
        std::vector<LabeledPattern> tables{cycle_pattern(L)};
        auto push_specials = [&](SpecialKind k) {
            try {
                for (auto& p : special_pattern_variants(k, L)) tables.push_back(p);
            } catch (const std::invalid_argument&) {
            }
        };
        push_specials(SpecialKind::s2_c5_c3);
        push_specials(SpecialKind::tprime_first_cycle);
        push_specials(SpecialKind::step3_case4);
        for (const auto& t : tables) {
            for (int a = 0; a < L; ++a) {
                for (bool swap : {false, true}) {
                    LabeledPattern pat = swap ? swap_colors(t) : t;
                    pat.anchor = a;
                    pat.spikes.clear();
                    if (!pattern_labels_valid(pat)) continue;
                    auto [cr, cb] = pat.anchor_contribution();
                    (void)cb;
                    if (flip_parity != (cr % 2 != 0)) continue;
                    for (int dir : {1, -1})
                        if (try_place(block, host, {pat, a, dir}, skip, host_final)) return true;
                }
            }
        }
    }
    if (L > 9) return false;
    // Triangle-scale last resort: exhaustive colorings against the live
    // context, labels derived and validated on the fly.
    LabeledPattern proto;
    proto.is_cycle = true;
    proto.edge.assign(static_cast<size_t>(L), EdgeColor::R);
    proto.labels.assign(static_cast<size_t>(L), Label::none);
    proto.partner.assign(static_cast<size_t>(L), -1);
    proto.anchor = 0;
    proto.ctx_host_red = st_.deg_r[static_cast<size_t>(host)];
    proto.ctx_host_blue = st_.deg_b[static_cast<size_t>(host)];
    proto.name = "fallback-c" + std::to_string(L);
    bool done = false;
    detail::search_coloring(L, [&](const std::vector<EdgeColor>& cand) {
        LabeledPattern pat = proto;
        pat.edge = cand;
        auto [cr, cb] = pat.anchor_contribution();
        (void)cb;
        if (flip_parity != (cr % 2 != 0)) return false;
        if (!check_pattern(pat).ok) return false;
        assign_pattern_labels(pat);
        if (!pattern_labels_valid(pat)) return false;
        for (int dir : {1, -1})
            if (try_place(block, host, {pat, 0, dir}, skip, host_final)) {
                done = true;
                return true;
            }
        return false;
    });
    return done;
}

// ---------------------------------------------------------- tree joins ---

bool CactusColorer::paint_tree_candidate(int host, const WoodyTree& tree, int variant, Color steer,
                                         const std::set<int>& skip) {
    size_t mark = checkpoint();
    std::vector<std::pair<int, int>> root_edges;  // (edge, child)
    for (int e : tree.edges) {
        auto [u, v] = g_.edge(e);
        if (u == host || v == host) root_edges.emplace_back(e, u == host ? v : u);
    }
    std::sort(root_edges.begin(), root_edges.end(),
              [](auto a, auto b) { return a.second < b.second; });
    int root_children = static_cast<int>(root_edges.size());
    int sz = static_cast<int>(tree.edges.size());
    bool shrub = root_children == 1;
    bool k2 = sz == 1;
    bool spike = sz == 2 && shrub;

    std::set<int> tree_set(tree.edges.begin(), tree.edges.end());

    auto paint = [&](int sub_root, const std::vector<int>& edges, Color start) {
        if (edges.empty()) return;
        TreePaintRequest req;
        req.g = &g_;
        req.edges = edges;
        req.root = sub_root;
        req.start = start;
        req.root_ext_red = st_.deg_r[static_cast<size_t>(sub_root)];
        req.root_ext_blue = st_.deg_b[static_cast<size_t>(sub_root)];
        for (auto [e, c] : paint_rooted_tree(req)) put_edge(e, c);
    };
    auto subtree_edges = [&](int child, int root_edge) {
        std::vector<int> out;
        std::vector<int> stack{child};
        std::set<int> seen{host, child};
        std::set<int> taken;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, e] : g_.incident(v)) {
                if (e == root_edge || !tree_set.count(e) || taken.count(e)) continue;
                taken.insert(e);
                out.push_back(e);
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        return out;
    };
    // Red-blue chain of the S2 / T' tree methods: the root multiedge goes
    // red-blue, stepping once more when the next vertex has degree four.
    auto rb_chain = [&](int root_edge, int child, Color below_start) {
        put_edge(root_edge, EdgeColor::RB);
        std::vector<int> below = subtree_edges(child, root_edge);
        if (below.empty()) return;
        std::vector<std::pair<int, int>> child_edges;
        for (int e : below) {
            auto [u, v] = g_.edge(e);
            if (u == child || v == child) child_edges.emplace_back(e, u == child ? v : u);
        }
        if (child_edges.size() == 1) {
            auto [e1, next] = child_edges[0];
            put_edge(e1, EdgeColor::RB);
            std::vector<int> deeper;
            for (int e : below)
                if (e != e1) deeper.push_back(e);
            paint(next, deeper, below_start);
        } else {
            paint(child, below, below_start);
        }
    };

    bool ok_apply = true;
    switch (variant) {
        case 0:
        case 1: {
            // Shrub rule at an A-like host: root multiedge in the steering
            // color, the rest from the other color (variant 1 keeps it).
            if (shrub && !k2 && !spike) {
                auto [re, child] = root_edges[0];
                put_edge(re, mono(steer));
                paint(child, subtree_edges(child, re), variant == 0 ? other(steer) : steer);
            } else {
                paint(host, tree.edges, variant == 0 ? steer : other(steer));
            }
            break;
        }
        case 2:
            paint(host, tree.edges, steer);
            break;
        case 3:
            paint(host, tree.edges, other(steer));
            break;
        case 4:
        case 5: {
            if (!shrub) {
                ok_apply = false;
                break;
            }
            auto [re, child] = root_edges[0];
            rb_chain(re, child, variant == 4 ? other(steer) : steer);
            break;
        }
        case 6:
        case 7: {
            // Several shrubs at a common root: one through the red-blue
            // chain, the remaining part monochromatic.
            if (root_children < 2) {
                ok_apply = false;
                break;
            }
            auto [re, child] = root_edges[0];
            rb_chain(re, child, variant == 6 ? other(steer) : steer);
            std::vector<int> rest;
            std::set<int> first_set{re};
            for (int e : subtree_edges(child, re)) first_set.insert(e);
            for (int e : tree.edges)
                if (!first_set.count(e)) rest.push_back(e);
            paint(host, rest, variant == 6 ? steer : other(steer));
            break;
        }
        default:
            ok_apply = false;
    }
    if (!ok_apply) {
        rollback(mark);
        return false;
    }

    auto touched = trace_since(mark);
    if (region_ok(touched, skip)) return true;

    // Prescribed repair: a pendant 2P3 conflicting at a degree-six shrub
    // root gets recolored red-blue.
    for (int v : touched) {
        if (v == host) continue;
        bool bad = false;
        for (auto [w, e] : g_.incident(v)) {
            (void)w;
            if (tree_set.count(e) && !edge_ok(e)) bad = true;
        }
        if (!bad) continue;
        for (auto [mid, e1] : g_.incident(v)) {
            if (!tree_set.count(e1) || mid == host) continue;
            std::vector<std::pair<int, int>> onward;
            for (auto [t2, e2] : g_.incident(mid))
                if (tree_set.count(e2) && t2 != v) onward.emplace_back(t2, e2);
            if (onward.size() != 1 || g_.degree(onward[0].first) != 1) continue;
            size_t sub = checkpoint();
            put_edge(e1, EdgeColor::RB);
            put_edge(onward[0].second, EdgeColor::RB);
            if (region_ok(touched, skip)) {
                ++stats_.repairs;
                return true;
            }
            rollback(sub);
        }
    }
    rollback(mark);
    return false;
}

bool CactusColorer::join_tree(int host, const WoodyTree& tree, TreeMethod m, Color steer,
                              const std::set<int>& skip) {
    if (tree.empty()) return true;
    std::vector<int> order;
    switch (m) {
        case TreeMethod::a_like: order = {0, 1, 2, 3, 4, 5, 6, 7}; break;
        case TreeMethod::b_like: order = {2, 3, 0, 1, 4, 5, 6, 7}; break;
        case TreeMethod::s2_host: order = {4, 5, 6, 7, 2, 3, 0, 1}; break;
        case TreeMethod::tprime_x2: order = {4, 5, 6, 7, 2, 3, 0, 1}; break;
    }
    for (int variant : order)
        if (paint_tree_candidate(host, tree, variant, steer, skip)) return true;
    return false;
}

// -------------------------------------------------------------- events ---

bool CactusColorer::join_side(int host, const AttachGroup* grp, JoinMethod cm, TreeMethod tm,
                              Color steer, const std::set<int>& skip, Label host_final,
                              std::vector<std::pair<size_t, size_t>>* element_ranges,
                              int s2_style_budget) {
    if (!grp) return true;
    bool first = true;
    for (int b : grp->cycles) {
        size_t start = checkpoint();
        JoinMethod method = cm;
        if (cm == JoinMethod::s2_like && !first) method = JoinMethod::b_like;
        int L = blk(b).length();
        if (s2_style_budget > 0 && method == JoinMethod::b_like &&
            (L == 3 || L % 4 == 0 || L % 4 == 1)) {
            method = JoinMethod::s2_like;
            --s2_style_budget;
        }
        if (!join_cycle(host, b, method, steer, skip, host_final)) return false;
        if (element_ranges) element_ranges->emplace_back(start, checkpoint());
        first = false;
    }
    if (!grp->tree.empty()) {
        size_t start = checkpoint();
        if (!join_tree(host, grp->tree, tm, steer, skip)) return false;
        if (element_ranges) element_ranges->emplace_back(start, checkpoint());
    }
    return true;
}

bool CactusColorer::flip_range(size_t begin, size_t end, const std::vector<int>& recheck,
                               const std::set<int>& skip) {
    std::vector<int> edges;
    for (size_t i = begin; i < end && i < undo_.size(); ++i)
        if (undo_[i].field == Undo::Field::edge) edges.push_back(undo_[i].idx);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) return false;
    size_t mark = checkpoint();
    for (int e : edges)
        put_edge(e, swapped(edge_color_of(st_.coloring.red_mult(e))));
    if (region_ok(recheck, skip)) {
        ++stats_.repairs;
        return true;
    }
    rollback(mark);
    return false;
}

void CactusColorer::attach_to_labeled_vertex(const AttachGroup& grp) {
    int x = grp.host;
    ++stats_.events;
    Label l = st_.label[static_cast<size_t>(x)];
    std::set<int> skip;
    auto fail = [&](const char* what) {
        throw std::logic_error(std::string(what) + " failed at vertex " + std::to_string(x));
    };
    switch (l) {
        case Label::A:
        case Label::S1:
        case Label::S2t: {
            for (int b : grp.cycles)
                if (!join_cycle(x, b, JoinMethod::a_like, steer_color(x), skip, Label::A))
                    fail("cycle join");
            if (!grp.tree.empty() &&
                !join_tree(x, grp.tree, TreeMethod::a_like, steer_color(x), skip))
                fail("tree join");
            if (l != Label::A) put_label(x, Label::A);
            break;
        }
        case Label::B: {
            for (int b : grp.cycles)
                if (!join_cycle(x, b, JoinMethod::b_like, steer_color(x), skip, Label::B))
                    fail("cycle join");
            if (!grp.tree.empty() &&
                !join_tree(x, grp.tree, TreeMethod::b_like, steer_color(x), skip))
                fail("tree join");
            break;
        }
        case Label::S2: {
            if (!grp.cycles.empty()) {
                bool first = true;
                for (int b : grp.cycles) {
                    JoinMethod m = first ? JoinMethod::s2_like : JoinMethod::b_like;
                    if (!join_cycle(x, b, m, steer_color(x), skip, Label::B)) fail("cycle join");
                    if (first) put_label(x, Label::B);
                    first = false;
                }
                if (!grp.tree.empty() &&
                    !join_tree(x, grp.tree, TreeMethod::b_like, steer_color(x), skip))
                    fail("tree join");
            } else {
                if (!join_tree(x, grp.tree, TreeMethod::s2_host, Color::red, skip))
                    fail("tree join");
                put_label(x, Label::B);
            }
            break;
        }
        default:
            throw std::logic_error("attach_to_labeled_vertex on a pair label");
    }
    put_hosted(x);
    if (opts_.debug_verify) check_invariants();
}

void CactusColorer::attach_to_leaf(const AttachGroup& grp) {
    int x = grp.host;
    ++stats_.events;
    if (grp.cycles.empty())
        throw std::logic_error("leaf join without a cycle at vertex " + std::to_string(x));
    int colored_edge = -1;
    for (auto [w, e] : g_.incident(x)) {
        (void)w;
        if (st_.colored[static_cast<size_t>(e)]) {
            if (colored_edge >= 0) throw std::logic_error("leaf host with two colored edges");
            colored_edge = e;
        }
    }
    if (colored_edge < 0) throw std::logic_error("leaf host not yet reached by the coloring");
    auto [u, v] = g_.edge(colored_edge);
    int x0 = u == x ? v : u;
    EdgeColor c0 = edge_color_of(st_.coloring.red_mult(colored_edge));
    bool x0_even = st_.is_even(x0);
    Color edge_color = c0 == EdgeColor::B ? Color::blue : Color::red;
    std::set<int> skip;

    int first = grp.cycles.front();
    int L = blk(first).length();
    bool ok = false;
    Label final_label;
    JoinMethod rest_method;

    if (is_mono(c0) && x0_even) {
        // Case 1: the leaf turns odd; triangles have their own tables.
        final_label = Label::B;
        rest_method = JoinMethod::b_like;
        if (L == 3) {
            bool more = grp.cycles.size() > 1 || !grp.tree.empty();
            auto vars = special_pattern_variants(SpecialKind::step3_case1_c3, 3);
            if (!more) std::reverse(vars.begin(), vars.end());
            for (auto& pat : vars) {
                LabeledPattern adj = edge_color == Color::red ? pat : swap_colors(pat);
                for (int dir : {1, -1})
                    if (try_place(first, x, {adj, adj.anchor, dir}, skip, Label::B)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (!ok) ok = fallback_join(x, first, skip, true, Label::B);
        } else {
            ok = join_cycle(x, first, JoinMethod::s2_like, other(edge_color), skip, Label::B);
        }
    } else if (is_mono(c0) && !x0_even) {
        // Case 2: keep the reaching edge's color dominating.
        final_label = Label::A;
        rest_method = JoinMethod::a_like;
        ok = join_cycle(x, first, JoinMethod::a_like, edge_color, skip, Label::A);
    } else if (!is_mono(c0) && x0_even) {
        // Case 3: B-method with red dominating.
        final_label = Label::B;
        rest_method = JoinMethod::b_like;
        ok = join_cycle(x, first, JoinMethod::b_like, Color::red, skip, Label::B);
    } else {
        // Case 4: dedicated patterns flip the leaf even.
        final_label = Label::A;
        rest_method = JoinMethod::a_like;
        for (auto& pat : special_pattern_variants(SpecialKind::step3_case4, L)) {
            for (auto& adj : {pat, swap_colors(pat)}) {
                for (int dir : {1, -1})
                    if (try_place(first, x, {adj, adj.anchor, dir}, skip, Label::A)) {
                        ok = true;
                        break;
                    }
                if (ok) break;
            }
            if (ok) break;
        }
        if (!ok) ok = fallback_join(x, first, skip, true, Label::A);
    }
    if (!ok) throw std::logic_error("leaf cycle join failed at vertex " + std::to_string(x));
    put_label(x, final_label);
    put_block(x, first);

    for (size_t i = 1; i < grp.cycles.size(); ++i)
        if (!join_cycle(x, grp.cycles[i], rest_method, steer_color(x), skip, final_label))
            throw std::logic_error("leaf cycle join failed at vertex " + std::to_string(x));
    if (!grp.tree.empty()) {
        TreeMethod tm = rest_method == JoinMethod::a_like ? TreeMethod::a_like : TreeMethod::b_like;
        if (!join_tree(x, grp.tree, tm, steer_color(x), skip))
            throw std::logic_error("leaf tree join failed at vertex " + std::to_string(x));
    }
    // The case split promises parity opposite to x0; record what actually
    // holds so later predicates see the truth.
    if (st_.label[static_cast<size_t>(x)] == Label::A && !st_.is_even(x)) put_label(x, Label::B);
    if (st_.label[static_cast<size_t>(x)] == Label::B && st_.is_even(x)) put_label(x, Label::A);
    put_hosted(x);
    if (opts_.debug_verify) check_invariants();
}

void CactusColorer::attach_to_pair(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2) {
    ++stats_.events;
    Label kind = st_.label[static_cast<size_t>(x1)];
    using Strat = bool (CactusColorer::*)(int, int, const AttachGroup*, const AttachGroup*, int);
    Strat strat = nullptr;
    switch (kind) {
        case Label::T: strat = &CactusColorer::pair_strategy_T; break;
        case Label::Tp: strat = &CactusColorer::pair_strategy_Tp; break;
        case Label::S: strat = &CactusColorer::pair_strategy_S; break;
        case Label::Sp: strat = &CactusColorer::pair_strategy_Sp; break;
        default: throw std::logic_error("attach_to_pair on a non-pair label");
    }
    pending_erase(x1, x2);
    for (int variant = 0; variant < 64; ++variant) {
        size_t mark = checkpoint();
        if ((this->*strat)(x1, x2, g1, g2, variant)) {
            put_hosted(x1);
            put_hosted(x2);
            if (opts_.debug_verify) check_invariants();
            return;
        }
        rollback(mark);
    }
    throw std::logic_error("special pair attachment failed at vertices " + std::to_string(x1) +
                           "," + std::to_string(x2));
}

// ------------------------------------------------------------- driver ---

void CactusColorer::step1_initial() {
    int block = plan_.initial_cycle;
    const Block& b = blk(block);
    int L = b.length();
    std::vector<int> danger;
    for (int v : b.vertices)
        if (spike_only_[static_cast<size_t>(v)]) danger.push_back(v);

    LabeledPattern pat = cycle_pattern(L);
    for (int rot = 0; rot < L; ++rot) {
        int host = b.vertices[static_cast<size_t>(rot)];
        for (int dir : {1, -1}) {
            Placement pl{pat, 0, dir};
            if (!spikes_compatible(block, host, pl)) continue;
            size_t mark = checkpoint();
            auto touched = apply_placement(block, host, pl);
            if (region_ok(touched, {})) {
                if (opts_.debug_verify) check_invariants();
                return;
            }
            rollback(mark);
        }
    }
    // Standard placements all collide with lone spikes; absorb one spike
    // (or, on a triangle, all three) into the initial pattern.
    std::vector<LabeledPattern> with_spike;
    if (L == 3 && danger.size() == 3)
        with_spike = special_pattern_variants(SpecialKind::c3_with_spikes, 3);
    else
        with_spike = special_pattern_variants(SpecialKind::initial_cycle_spike, L);
    for (auto& base : with_spike) {
        for (auto& p : {base, swap_colors(base)}) {
            for (int d : danger) {
                for (int dir : {1, -1}) {
                    Placement pl{p, p.spikes.empty() ? 0 : p.spikes[0].at, dir};
                    if (!spikes_compatible(block, d, pl)) continue;
                    size_t mark = checkpoint();
                    auto touched = apply_placement(block, d, pl);
                    if (region_ok(touched, {})) {
                        if (opts_.debug_verify) check_invariants();
                        return;
                    }
                    rollback(mark);
                }
            }
        }
    }
    throw std::logic_error("no valid initial coloring for the longest cycle");
}

void CactusColorer::process_item(const PlanItem& item) {
    if (item.kind == PlanItem::Kind::leaf_join) {
        attach_to_leaf(item.groups[0]);
        return;
    }
    const Block& b = blk(item.cycle_block);
    std::unordered_map<int, const AttachGroup*> by_host;
    for (const auto& grp : item.groups)
        if (!consumed_groups_.count(grp.host)) by_host[grp.host] = &grp;
    auto group_at = [&](int v) -> const AttachGroup* {
        auto it = by_host.find(v);
        return it == by_host.end() ? nullptr : it->second;
    };

    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singles;
    std::set<int> seen;
    std::vector<int> hosts = b.vertices;
    std::sort(hosts.begin(), hosts.end());
    for (int v : hosts) {
        if (seen.count(v)) continue;
        Label l = st_.label[static_cast<size_t>(v)];
        int pr = st_.partner[static_cast<size_t>(v)];
        if (is_pair_label(l) && pr >= 0) {
            seen.insert(v);
            seen.insert(pr);
            if (group_at(v) || group_at(pr)) pairs.emplace_back(std::min(v, pr), std::max(v, pr));
        } else if (group_at(v)) {
            seen.insert(v);
            singles.push_back(v);
        }
    }

    // A colored C5 carrying an S' pair is handled starting from that pair.
    auto sp_first = std::find_if(pairs.begin(), pairs.end(), [&](auto pr) {
        return b.length() == 5 && st_.label[static_cast<size_t>(pr.first)] == Label::Sp;
    });
    bool sp_priority = sp_first != pairs.end();
    if (sp_priority) std::rotate(pairs.begin(), sp_first, sp_first + 1);

    auto run_pairs = [&]() {
        for (auto [p1, p2] : pairs) attach_to_pair(p1, p2, group_at(p1), group_at(p2));
        pairs.clear();
    };
    if (sp_priority) run_pairs();
    for (int v : singles) attach_to_labeled_vertex(*group_at(v));
    run_pairs();
    if (opts_.debug_verify) check_invariants();
}

DoubledColoring CactusColorer::run() {
    step1_initial();
    for (const auto& item : plan_.items) process_item(item);
    if (st_.colored_edges != g_.edge_count())
        throw std::logic_error("coloring incomplete: " + std::to_string(st_.colored_edges) +
                               " of " + std::to_string(g_.edge_count()) + " edges");
    if (!st_.pending_pairs.empty())
        throw std::logic_error("special pairs left pending at termination");
    auto rep = verify(g_, st_.coloring);
    if (!rep.ok) throw std::logic_error("final coloring failed verification");
    return st_.coloring;
}

void CactusColorer::check_invariants() const {
    for (int e = 0; e < g_.edge_count(); ++e)
        if (st_.colored[static_cast<size_t>(e)] && !edge_ok(e)) {
            auto [u, v] = g_.edge(e);
            if (!st_.pending_pairs.count({std::min(u, v), std::max(u, v)}))
                throw std::logic_error("colored region conflict on edge " + std::to_string(e));
        }
    for (int v = 0; v < g_.vertex_count(); ++v) {
        if (st_.label[static_cast<size_t>(v)] == Label::none ||
            st_.hosted[static_cast<size_t>(v)])
            continue;
        std::string why;
        if (!label_predicate_ok(v, &why))
            throw std::logic_error("label predicate violated at vertex " + std::to_string(v) +
                                   ": " + why);
    }
}

DoubledColoring color_cactus(const SimpleGraph& g, const EngineOptions& opts, EngineStats* stats) {
    g.require_connected();
    if (g.vertex_count() == 2 && g.edge_count() == 1) throw UncolorableError();
    if (g.edge_count() == 0) return DoubledColoring(0);
    if (g.edge_count() + 1 == g.vertex_count()) return color_free_tree(g);
    CactusColorer engine(g, opts);
    DoubledColoring out = engine.run();
    if (stats) *stats = engine.stats();
    return out;
}

}  // namespace lir
