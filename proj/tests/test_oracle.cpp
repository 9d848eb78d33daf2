#include <doctest.h>

#include "lir/generate.hpp"
#include "lir/oracle.hpp"
#include "lir/patterns.hpp"

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

TEST_CASE("brute force oracle fixtures") {
    auto k2 = brute_lir2(path(2));
    CHECK(k2.value == LirResult::Value::more_than_2_or_uncolorable);
    CHECK_FALSE(k2.witness.has_value());

    auto p3 = brute_lir2(path(3));
    CHECK(p3.value == LirResult::Value::one);
    REQUIRE(p3.witness.has_value());
    CHECK(verify(path(3), *p3.witness).ok);
    CHECK(color_count(*p3.witness) == 1);

    auto c3 = brute_lir2(cycle(3));
    CHECK(c3.value == LirResult::Value::two);
    REQUIRE(c3.witness.has_value());
    CHECK(verify(cycle(3), *c3.witness).ok);
    CHECK(color_count(*c3.witness) == 2);

    SimpleGraph big(16);
    for (int i = 0; i < 15; ++i) big.add_edge(i, i + 1);
    CHECK_THROWS_AS(brute_lir2(big), std::invalid_argument);
}

TEST_CASE("prefix partitioning matches the sequential oracle") {
    SimpleGraph b = bowtie_fixture();
    auto whole = brute_lir2(b);
    REQUIRE(whole.value == LirResult::Value::two);
    // The lexicographically first successful branch carries the same witness.
    for (int d = 0; d < 3; ++d) {
        auto part = brute_lir2_prefix(b, {d});
        if (part.value == LirResult::Value::two) {
            CHECK(*part.witness == *whole.witness);
            break;
        }
    }
}

TEST_CASE("classifier fixtures") {
    CHECK(classify_tprime(cycle(3)).kind == TprimeClass::Kind::family_T);
    CHECK(classify_tprime(path(4)).kind == TprimeClass::Kind::odd_path);
    CHECK(classify_tprime(path(2)).kind == TprimeClass::Kind::odd_path);
    CHECK(classify_tprime(path(3)).kind == TprimeClass::Kind::not_in_Tprime);
    CHECK(classify_tprime(cycle(5)).kind == TprimeClass::Kind::odd_cycle);
    CHECK(classify_tprime(cycle(4)).kind == TprimeClass::Kind::not_in_Tprime);
    CHECK(classify_tprime(bowtie_fixture()).kind == TprimeClass::Kind::not_in_Tprime);
    CHECK(classify_tprime(SimpleGraph(1)).kind == TprimeClass::Kind::not_in_Tprime);
}

TEST_CASE("family_T members and their certificates") {
    // Triangle with an even path glued to a degree-2 triangle vertex.
    SimpleGraph t1(5);
    t1.add_edge(0, 1);
    t1.add_edge(0, 2);
    t1.add_edge(1, 2);
    t1.add_edge(2, 3);
    t1.add_edge(3, 4);
    auto c1 = classify_tprime(t1);
    CHECK(c1.kind == TprimeClass::Kind::family_T);
    CHECK(replay_tprime_certificate(t1, c1));

    // Two triangles joined by a single edge: the odd path of length one.
    SimpleGraph t2(6);
    t2.add_edge(0, 1);
    t2.add_edge(0, 2);
    t2.add_edge(1, 2);
    t2.add_edge(2, 3);
    t2.add_edge(3, 4);
    t2.add_edge(3, 5);
    t2.add_edge(4, 5);
    auto c2 = classify_tprime(t2);
    CHECK(c2.kind == TprimeClass::Kind::family_T);
    CHECK(replay_tprime_certificate(t2, c2));

    // The bow-tie shares a vertex, not a path: outside the family.
    CHECK(classify_tprime(bowtie_fixture()).kind == TprimeClass::Kind::not_in_Tprime);
}

TEST_CASE("uncolorability search fixtures") {
    CHECK(graph_uncolorable_check(cycle(3)));
    CHECK_FALSE(graph_uncolorable_check(path(3)));
    CHECK_FALSE(graph_uncolorable_check(cycle(4)));
    SimpleGraph big(10);
    for (int i = 0; i < 9; ++i) big.add_edge(i, i + 1);
    CHECK_THROWS_AS(graph_uncolorable_check(big), std::invalid_argument);
}

TEST_CASE("classifier agrees with the uncolorability search on tiny graphs") {
    for (const SimpleGraph& g : enumerate_small_connected_graphs(5)) {
        auto kind = classify_tprime(g).kind;
        bool in_family = kind != TprimeClass::Kind::not_in_Tprime;
        INFO("n=", g.vertex_count(), " m=", g.edge_count());
        CHECK(in_family == graph_uncolorable_check(g));
    }
}
