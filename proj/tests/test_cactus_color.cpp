#include <doctest.h>

#include "lir/cactus_color.hpp"
#include "lir/generate.hpp"
#include "lir/oracle.hpp"
#include "lir/tree_color.hpp"

using namespace lir;

namespace {

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, n - 1);
    return g;
}

}  // namespace

TEST_CASE("dominating color") {
    LabelState s;
    s.deg_r = {4, 1, 2};
    s.deg_b = {2, 3, 2};
    CHECK(dominating_color(s, 0) == Color::red);
    CHECK(dominating_color(s, 1) == Color::blue);
    CHECK_THROWS_AS(dominating_color(s, 2), std::logic_error);
}

TEST_CASE("cycles color through the standard patterns") {
    for (int n = 3; n <= 12; ++n) {
        DoubledColoring c = color_cactus(cycle(n));
        CHECK(verify(cycle(n), c).ok);
        CHECK(color_count(c) <= 2);
    }
}

TEST_CASE("bow-tie colors with two colors") {
    SimpleGraph b = bowtie_fixture();
    EngineOptions opts;
    opts.debug_verify = true;
    DoubledColoring c = color_cactus(b, opts);
    CHECK(verify(b, c).ok);
    CHECK(color_count(c) == 2);
    auto oracle = brute_lir2(b);
    CHECK(oracle.value == LirResult::Value::two);
}

TEST_CASE("input guards") {
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    CHECK_THROWS_AS(color_cactus(k2), UncolorableError);

    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK_THROWS_AS(color_cactus(k4), NonCactusError);

    SimpleGraph disc(4);
    disc.add_edge(0, 1);
    disc.add_edge(2, 3);
    CHECK_THROWS_AS(color_cactus(disc), std::invalid_argument);

    CHECK(color_cactus(SimpleGraph(1)).edge_count() == 0);
}

TEST_CASE("trees route to the tree colorer") {
    SimpleGraph p5(5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    DoubledColoring c = color_cactus(p5);
    CHECK(verify(p5, c).ok);
}

TEST_CASE("every small cactus colors under full invariant checking") {
    EngineOptions opts;
    opts.debug_verify = true;
    for (const SimpleGraph& g : enumerate_small_cacti(7)) {
        if (g.vertex_count() == 2) continue;
        INFO("n=", g.vertex_count(), " m=", g.edge_count());
        DoubledColoring c = color_cactus(g, opts);
        CHECK(verify(g, c).ok);
        CHECK(color_count(c) <= 2);
        for (int e = 0; e < c.edge_count(); ++e)
            CHECK(c.red_mult(e) + c.blue_mult(e) == 2);
    }
}

TEST_CASE("spiked seeds stress the step 1 exceptions") {
    EngineOptions opts;
    opts.debug_verify = true;
    for (uint64_t seed = 0; seed < 120; ++seed) {
        GenSpec spec;
        spec.n = 30;
        spec.seed = seed;
        spec.spike_bias = 0.5;
        spec.cycle_ratio = 0.4;
        spec.max_cycle_len = 9;
        SimpleGraph g = gen_cactus(spec);
        if (g.vertex_count() == 2) continue;
        DoubledColoring c = color_cactus(g, opts);
        CHECK(verify(g, c).ok);
    }
}

TEST_CASE("engine state after step 1 on a lone cycle") {
    SimpleGraph g = cycle(6);
    CactusColorer engine(g, {});
    engine.step1_initial();
    const LabelState& st = engine.state();
    CHECK(st.colored_edges == 6);
    int s1 = 0, b = 0, a = 0, s2 = 0;
    for (Label l : st.label) {
        if (l == Label::S1) ++s1;
        if (l == Label::B) ++b;
        if (l == Label::A) ++a;
        if (l == Label::S2) ++s2;
    }
    CHECK(s1 == 1);
    CHECK(b == 2);
    CHECK(a == 2);
    CHECK(s2 == 1);
    engine.check_invariants();
}
