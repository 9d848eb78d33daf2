#include <doctest.h>

#include <set>

#include "lir/blocks.hpp"
#include "lir/generate.hpp"
#include "lir/patterns.hpp"

using namespace lir;

namespace {

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 1);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("is_cactus") {
    CHECK(is_cactus(cycle(5)));
    CHECK(is_cactus(bowtie_fixture()));
    CHECK_FALSE(is_cactus(complete(4)));
}

TEST_CASE("non-cactus witness shares two vertices") {
    try {
        blocks(complete(4));
        CHECK(false);
    } catch (const NonCactusError& e) {
        std::set<int> a(e.cycle_a.begin(), e.cycle_a.end());
        int common = 0;
        std::set<int> bs(e.cycle_b.begin(), e.cycle_b.end());
        for (int v : bs)
            if (a.count(v)) ++common;
        CHECK(common >= 2);
        CHECK(a.size() >= 3);
        CHECK(bs.size() >= 3);
    }
}

TEST_CASE("blocks of small fixtures") {
    auto bt = blocks(bowtie_fixture());
    int cycles = 0;
    for (const auto& b : bt.blocks)
        if (b.kind == Block::Kind::cycle) {
            ++cycles;
            CHECK(b.length() == 3);
        }
    CHECK(cycles == 2);
    CHECK(bt.cut_vertices == std::vector<int>{0});

    SimpleGraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto bp = blocks(p4);
    CHECK(bp.blocks.size() == 3);
    for (const auto& b : bp.blocks) CHECK(b.kind == Block::Kind::bridge);

    SimpleGraph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(0, 2);
    paw.add_edge(1, 2);
    paw.add_edge(2, 3);
    auto pw = blocks(paw);
    int bridges = 0;
    cycles = 0;
    for (const auto& b : pw.blocks)
        b.kind == Block::Kind::bridge ? ++bridges : ++cycles;
    CHECK(bridges == 1);
    CHECK(cycles == 1);
    CHECK(pw.cyclic[2]);
    CHECK_FALSE(pw.cyclic[3]);
}

TEST_CASE("build_plan on a single cycle has no events") {
    BuildPlan plan = build_plan(cycle(7));
    CHECK(plan.decomp.blocks[static_cast<size_t>(plan.initial_cycle)].length() == 7);
    CHECK(plan.items.empty());
}

TEST_CASE("build_plan on the bow-tie") {
    BuildPlan plan = build_plan(bowtie_fixture());
    // Tie-break: the triangle with the smaller sorted vertex set starts.
    std::vector<int> init = plan.decomp.blocks[static_cast<size_t>(plan.initial_cycle)].vertices;
    std::sort(init.begin(), init.end());
    CHECK(init == std::vector<int>{0, 1, 2});
    REQUIRE(plan.items.size() == 1);  // the joined triangle's batch is empty
    REQUIRE(plan.items[0].groups.size() == 1);
    CHECK(plan.items[0].groups[0].host == 0);
    CHECK(plan.items[0].groups[0].cycles.size() == 1);
}

TEST_CASE("build_plan emits spike groups") {
    // Triangle with a pendant path of length 2 at each vertex.
    SimpleGraph g(9);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(1, 5);
    g.add_edge(5, 6);
    g.add_edge(2, 7);
    g.add_edge(7, 8);
    BuildPlan plan = build_plan(g);
    REQUIRE(plan.items.size() == 1);
    CHECK(plan.items[0].groups.size() == 3);
    for (const auto& grp : plan.items[0].groups) {
        CHECK(grp.cycles.empty());
        CHECK(grp.tree.edges.size() == 2);
        CHECK(grp.spike_only);
    }
}

TEST_CASE("replay fidelity and plan soundness over small cacti") {
    for (const SimpleGraph& g : enumerate_small_cacti(8)) {
        if (g.edge_count() + 1 == g.vertex_count()) continue;  // trees skip the planner
        BuildPlan plan = build_plan(g);
        std::vector<int> edge_seen(static_cast<size_t>(g.edge_count()), 0);
        std::vector<char> vertex_colored(static_cast<size_t>(g.vertex_count()), 0);

        auto mark_cycle = [&](int b) {
            const auto& vs = plan.decomp.blocks[static_cast<size_t>(b)].vertices;
            for (size_t i = 0; i < vs.size(); ++i) {
                ++edge_seen[static_cast<size_t>(g.edge_id(vs[i], vs[(i + 1) % vs.size()]))];
                vertex_colored[static_cast<size_t>(vs[i])] = 1;
            }
        };
        mark_cycle(plan.initial_cycle);
        int leaf_groups_without_cycles = 0;
        for (const auto& item : plan.items) {
            for (const auto& grp : item.groups) {
                CHECK(vertex_colored[static_cast<size_t>(grp.host)]);
                if (item.kind == PlanItem::Kind::leaf_join && grp.cycles.empty())
                    ++leaf_groups_without_cycles;
                for (int b : grp.cycles) mark_cycle(b);
                for (int e : grp.tree.edges) {
                    ++edge_seen[static_cast<size_t>(e)];
                    auto [x, y] = g.edge(e);
                    vertex_colored[static_cast<size_t>(x)] = 1;
                    vertex_colored[static_cast<size_t>(y)] = 1;
                }
            }
        }
        for (int e = 0; e < g.edge_count(); ++e) CHECK(edge_seen[static_cast<size_t>(e)] == 1);
        CHECK(leaf_groups_without_cycles == 0);
        size_t total_events = 0;
        for (const auto& item : plan.items) total_events += item.groups.size();
        CHECK(total_events <= plan.decomp.blocks.size());
    }
}

TEST_CASE("tree input routes away") {
    SimpleGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK_THROWS_AS(build_plan(p3), TreeInputError);
}
