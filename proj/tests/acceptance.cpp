// Acceptance suite: one criterion per run (argv[1]) or all in sequence.
// Prints one pass/fail line per criterion; exits nonzero on any failure.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "lir/blocks.hpp"
#include "lir/cactus_color.hpp"
#include "lir/generate.hpp"
#include "lir/oracle.hpp"
#include "lir/patterns.hpp"
#include "lir/tree_color.hpp"

using namespace lir;

namespace {

struct Outcome {
    bool pass = true;
    long long checked = 0;
    std::string detail;

    void fail(const std::string& msg) {
        if (pass) detail = msg;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SimpleGraph cycle_graph(int n) {
    SimpleGraph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

bool is_k2(const SimpleGraph& g) { return g.vertex_count() == 2 && g.edge_count() == 1; }

// 1. Every connected cactus with <= 9 vertices (except K2) gets a verified
//    red/blue decomposition with at most two colors.
Outcome criterion1() {
    Outcome out;
    EngineOptions opts;
    opts.debug_verify = true;
    for (const SimpleGraph& g : enumerate_small_cacti(9)) {
        if (is_k2(g)) continue;
        ++out.checked;
        try {
            DoubledColoring c = color_cactus(g, opts);
            if (!verify(g, c).ok) out.fail("verification failed at n=" +
                                           std::to_string(g.vertex_count()));
            if (color_count(c) > 2) out.fail("more than two colors");
            for (int e = 0; e < c.edge_count(); ++e)
                if (c.red_mult(e) + c.blue_mult(e) != 2) out.fail("multiplicity sum broken");
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what() + " (n=" +
                     std::to_string(g.vertex_count()) + " m=" +
                     std::to_string(g.edge_count()) + ")");
        }
    }
    return out;
}

// 2. The exhaustive oracle confirms lir(2G) <= 2 on the same corpus and
//    refuses only K2.
Outcome criterion2() {
    Outcome out;
    for (const SimpleGraph& g : enumerate_small_cacti(9)) {
        if (g.edge_count() > 14) continue;
        ++out.checked;
        auto res = brute_lir2(g);
        if (is_k2(g)) {
            if (res.value != LirResult::Value::more_than_2_or_uncolorable)
                out.fail("2K2 reported colorable");
            continue;
        }
        if (res.value == LirResult::Value::more_than_2_or_uncolorable)
            out.fail("oracle found an uncolorable cactus at n=" +
                     std::to_string(g.vertex_count()));
        else if (res.witness && !verify(g, *res.witness).ok)
            out.fail("oracle witness fails verification");
    }
    return out;
}

// 3. Ten thousand generated cacti with n up to 200 color cleanly in under a
//    minute.
Outcome criterion3() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (uint64_t seed = 0; seed < 10000; ++seed) {
        GenSpec spec;
        spec.n = 10 + static_cast<int>(seed % 191);
        spec.seed = seed;
        spec.spike_bias = 0.35;
        spec.cycle_ratio = 0.4;
        spec.max_cycle_len = 12;
        SimpleGraph g = gen_cactus(spec);
        ++out.checked;
        try {
            DoubledColoring c = color_cactus(g);
            if (!verify(g, c).ok) out.fail("verification failed at seed " + std::to_string(seed));
        } catch (const std::exception& e) {
            out.fail(std::string("exception at seed ") + std::to_string(seed) + ": " + e.what());
        }
        if (!out.pass) break;
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) out.fail("runtime " + std::to_string(secs) + "s exceeds 60s");
    out.detail += " (" + std::to_string(secs).substr(0, 5) + "s)";
    return out;
}

// 4. Pattern fixtures: standard cycles 3..7, splices 8..15, and the figure
//    regenerations all pass the verifier and the label predicates.
Outcome criterion4() {
    Outcome out;
    std::string why;
    for (int len = 3; len <= 15; ++len) {
        ++out.checked;
        LabeledPattern p = cycle_pattern(len);
        if (!check_pattern(p).ok) out.fail("cycle pattern " + std::to_string(len));
        if (!pattern_labels_valid(p, &why)) out.fail("labels of cycle " + std::to_string(len) +
                                                     ": " + why);
    }
    struct Want {
        SpecialKind kind;
        std::vector<int> lengths;
    };
    const Want wants[] = {
        {SpecialKind::c3_with_spikes, {3}},
        {SpecialKind::initial_cycle_spike, {6, 7, 10, 11}},
        {SpecialKind::s2_cycle_spike, {4, 5, 6, 7}},
        {SpecialKind::s2_c5_c3, {3, 5}},
        {SpecialKind::tprime_first_cycle, {3, 4, 5, 6, 7}},
        {SpecialKind::pair_s_c3, {3}},
        {SpecialKind::pair_t_spikes, {3}},
        {SpecialKind::step3_case1_c3, {3}},
        {SpecialKind::step3_case4, {3, 4, 5, 6, 7, 9}},
    };
    for (const auto& w : wants)
        for (int len : w.lengths) {
            ++out.checked;
            try {
                for (const auto& p : special_pattern_variants(w.kind, len))
                    if (!check_pattern(p).ok)
                        out.fail(std::string(special_kind_name(w.kind)) + " length " +
                                 std::to_string(len));
            } catch (const std::exception& e) {
                out.fail(std::string(special_kind_name(w.kind)) + ": " + e.what());
            }
        }
    // Exceptional branches in their declared context: father edge red from
    // an even father. Painted through the tree colorer in the tree tests;
    // here the tables themselves.
    for (auto kind :
         {BranchShapeKind::p4_end, BranchShapeKind::p4_internal, BranchShapeKind::p5_center}) {
        ++out.checked;
        if (exceptional_branch_colorings(kind).empty()) out.fail("missing branch table");
    }
    return out;
}

// 5. The uncolorable family's members (within 9 vertices, K2 aside) are all
//    paths, cycles or cacti, and their doublings 2-color cleanly.
Outcome criterion5() {
    Outcome out;
    std::vector<SimpleGraph> members;
    for (int n = 4; n <= 9; n += 2) members.push_back(path_graph(n));  // odd lengths 3,5,7
    for (int n = 3; n <= 9; n += 2) members.push_back(cycle_graph(n));
    for (const SimpleGraph& g : enumerate_small_cacti(9))
        if (classify_tprime(g).kind == TprimeClass::Kind::family_T) members.push_back(g);
    for (const SimpleGraph& g : members) {
        ++out.checked;
        if (!is_cactus(g)) out.fail("family member is not a cactus");
        try {
            DoubledColoring c = color_cactus(g);
            if (!verify(g, c).ok) out.fail("family member fails to 2-color");
            if (color_count(c) > 2) out.fail("family member needs more than 2 colors");
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
    }
    return out;
}

// 6. On every connected graph with at most 7 edges, family membership and
//    the exhaustive uncolorability search agree exactly.
Outcome criterion6() {
    Outcome out;
    for (const SimpleGraph& g : enumerate_small_connected_graphs(7)) {
        ++out.checked;
        auto cls = classify_tprime(g);
        bool member = cls.kind != TprimeClass::Kind::not_in_Tprime;
        bool uncolorable = graph_uncolorable_check(g);
        if (member != uncolorable)
            out.fail("disagreement at n=" + std::to_string(g.vertex_count()) + " m=" +
                     std::to_string(g.edge_count()) + " kind=" + tprime_kind_name(cls.kind));
        if (cls.kind == TprimeClass::Kind::family_T && !replay_tprime_certificate(g, cls))
            out.fail("certificate replay failed");
    }
    return out;
}

// 7. A hundred-thousand-vertex cactus colors in under five seconds and
//    passes one final verification.
Outcome criterion7() {
    Outcome out;
    GenSpec spec;
    spec.n = 100000;
    spec.seed = 42;
    spec.spike_bias = 0.3;
    spec.cycle_ratio = 0.45;
    spec.max_cycle_len = 12;
    SimpleGraph g = gen_cactus(spec);
    auto t0 = std::chrono::steady_clock::now();
    try {
        DoubledColoring c = color_cactus(g);
        double secs = seconds_since(t0);
        ++out.checked;
        if (secs >= 5.0) out.fail("coloring took " + std::to_string(secs) + "s");
        if (!verify(g, c).ok) out.fail("verification failed");
        out.detail += " (" + std::to_string(secs).substr(0, 5) + "s, n=" +
                      std::to_string(g.vertex_count()) + ")";
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7};
    const char* names[] = {
        "theorem suite over all cacti with <= 9 vertices",
        "oracle agreement on the same corpus",
        "randomized scale suite, 10000 cacti up to n=200",
        "pattern fixtures and figure regenerations",
        "corollary check over the uncolorable family",
        "classifier vs exhaustive uncolorability, <= 7 edges",
        "performance sanity at n=100000",
    };
    bool all_pass = true;
    for (int i = 1; i <= 7; ++i) {
        if (only != 0 && only != i) continue;
        Outcome out = criteria[i - 1]();
        all_pass &= out.pass;
        std::cout << "criterion " << i << " [" << names[i - 1] << "]: "
                  << (out.pass ? "PASS" : "FAIL") << " — " << out.checked << " instances"
                  << (out.detail.empty() ? "" : " " + out.detail) << "\n";
    }
    return all_pass ? 0 : 1;
}
