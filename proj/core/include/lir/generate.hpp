#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

/// Deterministic cactus generator knobs: identical spec, identical graph.
struct GenSpec {
    int n = 10;
    double cycle_ratio = 0.5;   // fraction of growth steps that add a cycle
    int max_cycle_len = 8;
    double spike_bias = 0.0;    // extra probability of growing a pendant 2P3
    uint64_t seed = 0;
};

SimpleGraph gen_cactus(const GenSpec& spec);

/// Every connected cactus with at most n_max vertices, one per isomorphism
/// class (n_max <= 10).
std::vector<SimpleGraph> enumerate_small_cacti(int n_max);

/// Every connected graph with at most m_max edges (m_max <= 7), one per
/// isomorphism class; drives the classifier cross-check.
std::vector<SimpleGraph> enumerate_small_connected_graphs(int m_max);

/// Isomorphism-complete code for cacti via the block-cut tree.
std::string cactus_canonical_code(const SimpleGraph& g);

/// Isomorphism-complete code for small graphs (n <= 8) via permutation
/// minimization within degree classes.
std::string graph_canonical_code(const SimpleGraph& g);

}  // namespace lir
