#pragma once

#include <utility>
#include <vector>

#include "lir/multigraph.hpp"
#include "lir/patterns.hpp"

namespace lir {

/// 2K2 (and only it) has no locally irregular coloring of its doubling.
struct UncolorableError : std::domain_error {
    UncolorableError() : std::domain_error("2K2 admits no locally irregular coloring") {}
};

/// One branch of the rooted-tree decomposition: the local unit colored in a
/// single stroke. sons are the branch leaves that are internal in the tree
/// and root the subsequent branches.
struct Branch {
    int root = -1;
    std::vector<int> edges;
    std::vector<int> sons;
};

/// Conflicts of a rooted-tree coloring are confined to edges at the root.
struct RootConflictContract {
    int root = -1;
    std::vector<int> conflict_edges;
};

/// Branch decomposition of a tree rooted at r: B(r) first, then branches
/// rooted at branch leaves internal in the tree, in BFS order. Edges are
/// partitioned; every branch has at least two edges except the single-edge
/// pseudo-branch of K2.
std::vector<Branch> branch_decompose(const SimpleGraph& t, int r);

/// Tree-coloring request against an arbitrary host graph: only `edges` are
/// painted, the root may already carry colored edges outside the tree.
struct TreePaintRequest {
    const SimpleGraph* g = nullptr;
    std::vector<int> edges;  // the tree's edge ids within *g
    int root = -1;
    Color start = Color::red;    // color of the root branch
    int root_ext_red = 0;        // root degrees outside the painted edges
    int root_ext_blue = 0;
};

/// Almost locally irregular coloring of the doubled tree: every conflict
/// touches the root. Returns (edge, color) assignments.
std::vector<std::pair<int, EdgeColor>> paint_rooted_tree(const TreePaintRequest& req);

/// Spec-level wrapper over paint_rooted_tree for a standalone tree.
std::pair<DoubledColoring, RootConflictContract> color_rooted_tree(const SimpleGraph& t, int r,
                                                                   Color start);

/// Verify-clean coloring of a free tree (paths via the multipath rule,
/// everything else via a leaf-rooted Lemma coloring with bounded repair).
/// Throws UncolorableError for K2.
DoubledColoring color_free_tree(const SimpleGraph& t);

}  // namespace lir
