#include <doctest.h>

#include <set>

#include "lir/blocks.hpp"
#include "lir/edgelist.hpp"
#include "lir/generate.hpp"
#include "lir/patterns.hpp"

using namespace lir;

TEST_CASE("generator determinism") {
    GenSpec spec;
    spec.n = 50;
    spec.seed = 7;
    std::string a = emit_edge_list(gen_cactus(spec));
    std::string b = emit_edge_list(gen_cactus(spec));
    CHECK(a == b);
    spec.seed = 8;
    CHECK(a != emit_edge_list(gen_cactus(spec)));
}

TEST_CASE("generator output is always a connected cactus") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.n = 1 + static_cast<int>(seed % 37);
        spec.seed = seed;
        spec.spike_bias = 0.3;
        SimpleGraph g = gen_cactus(spec);
        CHECK(g.is_connected());
        CHECK(is_cactus(g));
        CHECK(g.vertex_count() == spec.n);  // blocks are sized to the room left
    }
    CHECK(gen_cactus(GenSpec{1, 0.5, 8, 0.0, 3}).vertex_count() == 1);
}

TEST_CASE("canonical code is an isomorphism invariant") {
    SimpleGraph a(4);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    a.add_edge(2, 3);
    SimpleGraph b(4);  // same path, relabeled
    b.add_edge(2, 3);
    b.add_edge(0, 3);
    b.add_edge(1, 2);
    CHECK(cactus_canonical_code(a) == cactus_canonical_code(b));
    CHECK(graph_canonical_code(a) == graph_canonical_code(b));

    SimpleGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(cactus_canonical_code(a) != cactus_canonical_code(star));
    CHECK(graph_canonical_code(a) != graph_canonical_code(star));
}

TEST_CASE("small cactus enumeration") {
    auto upto3 = enumerate_small_cacti(3);
    CHECK(upto3.size() == 4);  // K1, K2, P3, K3

    auto upto4 = enumerate_small_cacti(4);
    SimpleGraph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(0, 2);
    paw.add_edge(1, 2);
    paw.add_edge(2, 3);
    std::string paw_code = cactus_canonical_code(paw);
    bool found_paw = false;
    for (const auto& g : upto4) found_paw |= cactus_canonical_code(g) == paw_code;
    CHECK(found_paw);

    auto upto5 = enumerate_small_cacti(5);
    CHECK(upto5.size() == 17);  // counted by hand: 8 trees, 3 cycles, 6 others
    std::string bow = cactus_canonical_code(bowtie_fixture());
    bool found_bow = false;
    for (const auto& g : upto5) found_bow |= cactus_canonical_code(g) == bow;
    CHECK(found_bow);

    // Every enumerated graph is a distinct connected cactus.
    std::set<std::string> codes;
    for (const auto& g : upto5) {
        CHECK(g.is_connected());
        CHECK(is_cactus(g));
        CHECK(codes.insert(cactus_canonical_code(g)).second);
    }
}

TEST_CASE("small connected graph enumeration hits known counts") {
    // Connected graphs up to isomorphism with at most three edges:
    // K1; K2; P3; P4, K1_3, K3; total with m <= 3.
    auto upto3 = enumerate_small_connected_graphs(3);
    CHECK(upto3.size() == 6);
    for (const auto& g : upto3) CHECK(g.is_connected());
    // Exactly four edges: three 5-vertex trees, C4 and the paw.
    auto upto4 = enumerate_small_connected_graphs(4);
    CHECK(upto4.size() - upto3.size() == 5);
}
