#include <doctest.h>

#include <set>

#include "lir/generate.hpp"
#include "lir/oracle.hpp"
#include "lir/tree_color.hpp"

using namespace lir;

namespace {

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph star(int legs) {
    SimpleGraph g(legs + 1);
    for (int i = 1; i <= legs; ++i) g.add_edge(0, i);
    return g;
}

SimpleGraph spider_legs2(int legs) {
    SimpleGraph g(2 * legs + 1);
    for (int i = 0; i < legs; ++i) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

std::vector<SimpleGraph> small_trees(int n_max) {
    std::vector<SimpleGraph> out;
    for (const SimpleGraph& g : enumerate_small_cacti(n_max))
        if (g.edge_count() + 1 == g.vertex_count() && g.vertex_count() >= 2) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("branch decomposition fixtures") {
    auto bs = branch_decompose(star(3), 0);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].edges.size() == 3);

    auto bp = branch_decompose(path(5), 0);
    REQUIRE(bp.size() == 2);
    CHECK(bp[0].edges.size() == 2);
    CHECK(bp[1].edges.size() == 2);

    auto sp = branch_decompose(spider_legs2(3), 0);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].edges.size() == 6);
}

TEST_CASE("branches partition the tree with at least two edges each") {
    for (const SimpleGraph& t : small_trees(8)) {
        for (int r = 0; r < t.vertex_count(); ++r) {
            auto bs = branch_decompose(t, r);
            std::set<int> covered;
            for (const auto& b : bs) {
                for (int e : b.edges) {
                    CHECK_FALSE(covered.count(e));
                    covered.insert(e);
                }
                if (t.edge_count() > 1) CHECK(b.edges.size() >= 2);
            }
            CHECK(static_cast<int>(covered.size()) == t.edge_count());
        }
    }
}

TEST_CASE("rooted coloring fixtures") {
    // Exception I: P4 rooted at an end.
    auto [c, contract] = color_rooted_tree(path(4), 0, Color::blue);
    CHECK(c.red_mult(0) == 0);
    CHECK(c.red_mult(1) == 2);
    CHECK(c.red_mult(2) == 2);
    REQUIRE(contract.conflict_edges.size() == 1);
    CHECK(contract.conflict_edges[0] == 0);

    auto [cs, star_contract] = color_rooted_tree(star(3), 0, Color::red);
    for (int e = 0; e < 3; ++e) CHECK(cs.red_mult(e) == 2);
    CHECK(star_contract.conflict_edges.empty());

    auto [cp, p3_contract] = color_rooted_tree(path(3), 0, Color::blue);
    CHECK(cp.red_mult(0) == 0);
    CHECK(cp.red_mult(1) == 0);
    CHECK(p3_contract.conflict_edges.empty());
}

TEST_CASE("conflicts confine to the root for every tree and root") {
    for (const SimpleGraph& t : small_trees(9)) {
        for (int r = 0; r < t.vertex_count(); ++r) {
            for (Color start : {Color::red, Color::blue}) {
                auto [c, contract] = color_rooted_tree(t, r, start);
                for (int e : contract.conflict_edges) {
                    auto [u, v] = t.edge(e);
                    CHECK((u == r || v == r));
                }
                // The root is always even in each color.
                CHECK(color_degree(t, c, r, Color::red) % 2 == 0);
            }
        }
    }
}

TEST_CASE("free tree coloring") {
    CHECK_THROWS_AS(color_free_tree(path(2)), UncolorableError);
    for (int n : {3, 4, 5, 6, 7, 8}) {
        DoubledColoring c = color_free_tree(path(n));
        CHECK(verify(path(n), c).ok);
    }
    DoubledColoring cs = color_free_tree(star(3));
    CHECK(verify(star(3), cs).ok);
    CHECK(color_count(cs) == 1);
}

TEST_CASE("free tree coloring is total and feasible on all small trees") {
    for (const SimpleGraph& t : small_trees(9)) {
        if (t.vertex_count() == 2) continue;
        DoubledColoring c = color_free_tree(t);
        CHECK(verify(t, c).ok);
        CHECK(color_count(c) <= 2);
        if (t.edge_count() <= 10) {
            auto oracle = brute_lir2(t);
            CHECK(oracle.value != LirResult::Value::more_than_2_or_uncolorable);
        }
    }
}

TEST_CASE("shrub rooted at a leaf") {
    // A shrub is a tree rooted at a leaf; same machinery, contract intact.
    SimpleGraph t(6);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(1, 3);
    t.add_edge(3, 4);
    t.add_edge(3, 5);
    auto [c, contract] = color_rooted_tree(t, 0, Color::red);
    CHECK(verify(t, c).ok);
    CHECK(contract.conflict_edges.empty());
}
