#include <doctest.h>

#include "lir/multigraph.hpp"

using namespace lir;

namespace {

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle(int n) {
    SimpleGraph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

}  // namespace

TEST_CASE("color_degree counts single edges of one color") {
    SimpleGraph p3 = path(3);
    DoubledColoring all_blue(2);  // red_mult defaults to 0
    CHECK(color_degree(p3, all_blue, 1, Color::blue) == 4);
    CHECK(color_degree(p3, all_blue, 1, Color::red) == 0);
    CHECK(color_degree(p3, all_blue, 0, Color::blue) == 2);

    // 2P4 under the odd multipath rule: blue-blue, red-blue, red-red.
    SimpleGraph p4 = path(4);
    DoubledColoring c(3);
    c.set_red_mult(0, 0);
    c.set_red_mult(1, 1);
    c.set_red_mult(2, 2);
    CHECK(color_degree(p4, c, 2, Color::red) == 3);

    CHECK_THROWS_AS(color_degree(p3, all_blue, 7, Color::red), std::invalid_argument);
}

TEST_CASE("verify judges each color class") {
    SimpleGraph p3 = path(3);
    DoubledColoring all_blue(2);
    CHECK(verify(p3, all_blue).ok);  // blue degrees 2, 4, 2

    SimpleGraph k2 = path(2);
    DoubledColoring rb(1);
    rb.set_red_mult(0, 1);
    auto rep = verify(k2, rb);
    CHECK_FALSE(rep.ok);
    CHECK(rep.red_conflicts.size() == 1);
    CHECK(rep.blue_conflicts.size() == 1);

    SimpleGraph c4 = cycle(4);
    DoubledColoring bbrr(4);
    // edges in insertion order: 0-1, 1-2, 2-3, 0-3
    bbrr.set_red_mult(0, 0);
    bbrr.set_red_mult(1, 0);
    bbrr.set_red_mult(2, 2);
    bbrr.set_red_mult(3, 2);
    CHECK(verify(c4, bbrr).ok);
}

TEST_CASE("verify agrees with a from-scratch degree scan") {
    // Exhaust all assignments of 2C4 and compare against a naive recount.
    SimpleGraph c4 = cycle(4);
    for (int code = 0; code < 81; ++code) {
        DoubledColoring c(4);
        int x = code;
        for (int e = 0; e < 4; ++e, x /= 3) c.set_red_mult(e, x % 3);
        auto rep = verify(c4, c);
        bool naive_ok = true;
        for (int e = 0; e < 4; ++e) {
            auto [u, v] = c4.edge(e);
            int ru = 0, bu = 0, rv = 0, bv = 0;
            for (auto [w, f] : c4.incident(u)) {
                (void)w;
                ru += c.red_mult(f);
                bu += c.blue_mult(f);
            }
            for (auto [w, f] : c4.incident(v)) {
                (void)w;
                rv += c.red_mult(f);
                bv += c.blue_mult(f);
            }
            if (c.red_mult(e) > 0 && ru == rv) naive_ok = false;
            if (c.blue_mult(e) > 0 && bu == bv) naive_ok = false;
        }
        CHECK(rep.ok == naive_ok);
    }
}

TEST_CASE("handshake per color") {
    SimpleGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    g.add_edge(0, 4);
    DoubledColoring c(5);
    c.set_red_mult(0, 1);
    c.set_red_mult(1, 2);
    c.set_red_mult(3, 1);
    int sum_red = 0, total_red = 0;
    for (int v = 0; v < 5; ++v) sum_red += color_degree(g, c, v, Color::red);
    for (int e = 0; e < 5; ++e) total_red += c.red_mult(e);
    CHECK(sum_red == 2 * total_red);
}

TEST_CASE("monochromatic doubling mirrors the simple graph") {
    // 2G under one color is locally irregular iff G is.
    SimpleGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    DoubledColoring red(3);
    for (int e = 0; e < 3; ++e) red.set_red_mult(e, 2);
    CHECK(verify(star, red).ok);

    SimpleGraph c3 = cycle(3);
    DoubledColoring red3(3);
    for (int e = 0; e < 3; ++e) red3.set_red_mult(e, 2);
    CHECK_FALSE(verify(c3, red3).ok);
}

TEST_CASE("color_count") {
    DoubledColoring c(2);
    c.set_red_mult(0, 2);
    c.set_red_mult(1, 2);
    CHECK(color_count(c) == 1);
    c.set_red_mult(1, 1);
    CHECK(color_count(c) == 2);
    CHECK(color_count(DoubledColoring(0)) == 0);
}

TEST_CASE("graph construction guards") {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK(g.edge_id(1, 0) == 0);
    CHECK_FALSE(g.is_connected());
    CHECK_THROWS_AS(g.require_connected(), std::invalid_argument);
}
