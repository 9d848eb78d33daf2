#include <doctest.h>

#include <sstream>

#include "lir/edgelist.hpp"
#include "lir/generate.hpp"
#include "lir/patterns.hpp"

using namespace lir;

TEST_CASE("parse_edge_list basics") {
    auto k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2.graph.vertex_count() == 2);
    CHECK(k2.graph.edge_count() == 1);
    CHECK_FALSE(k2.coloring.has_value());

    auto c3 = parse_edge_list("3 3\n0 1\n0 2\n1 2\n");
    CHECK(c3.graph.edge_count() == 3);

    auto p3 = parse_edge_list("3 2\n0 1\n1 2\n0 1 0 2\n1 2 0 2\n");
    REQUIRE(p3.coloring.has_value());
    CHECK(p3.coloring->blue_mult(0) == 2);
    CHECK(verify(p3.graph, *p3.coloring).ok);
}

TEST_CASE("parse_edge_list failures carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    try {
        parse_edge_list("3 2\n0 1\n1 x\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);       // loop
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 0\n"), ParseError);       // order
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 2\n0 1 1 2\n1 2 2 0\n"),
                    ParseError);  // multiplicity sum
    // Disconnected input names two components.
    try {
        parse_edge_list("4 2\n0 1\n2 3\n");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("different components") != std::string::npos);
    }
}

TEST_CASE("round trip over generated cacti") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        GenSpec spec;
        spec.n = 24;
        spec.seed = seed;
        spec.spike_bias = 0.2;
        SimpleGraph g = gen_cactus(spec);
        DoubledColoring c(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) c.set_red_mult(e, (e * 7 + 1) % 3);
        auto doc = parse_edge_list(emit_edge_list(g, c));
        CHECK(doc.graph.vertex_count() == g.vertex_count());
        CHECK(doc.graph.edges() == g.edges());
        REQUIRE(doc.coloring.has_value());
        CHECK(*doc.coloring == c);
    }
}

TEST_CASE("dot output draws one stroke per single edge") {
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    DoubledColoring rr(1);
    rr.set_red_mult(0, 2);
    std::string dot = emit_dot(k2, &rr);
    CHECK(dot.find("graph {") == 0);
    size_t reds = 0, pos = 0;
    while ((pos = dot.find("[color=red]", pos)) != std::string::npos) {
        ++reds;
        ++pos;
    }
    CHECK(reds == 2);

    SimpleGraph bt = bowtie_fixture();
    DoubledColoring c(bt.edge_count());
    std::string btdot = emit_dot(bt, &c);
    size_t strokes = 0;
    pos = 0;
    while ((pos = btdot.find(" -- ", pos)) != std::string::npos) {
        ++strokes;
        ++pos;
    }
    CHECK(strokes == 12);
    CHECK(btdot.back() == '\n');
    CHECK(btdot.rfind("}") != std::string::npos);
}
