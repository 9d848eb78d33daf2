#pragma once

#include <stdexcept>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

/// Two cycles meeting in at least two vertices; proof that a graph is not a
/// cactus.
struct NonCactusError : std::invalid_argument {
    std::vector<int> cycle_a, cycle_b;
    NonCactusError(std::vector<int> a, std::vector<int> b)
        : std::invalid_argument("not a cactus: two cycles share at least two vertices"),
          cycle_a(std::move(a)),
          cycle_b(std::move(b)) {}
};

/// Raised when a cactus routine receives a tree; trees go to the tree colorer.
struct TreeInputError : std::invalid_argument {
    TreeInputError() : std::invalid_argument("input has no cycle: route to tree colorer") {}
};

struct Block {
    enum class Kind { bridge, cycle };
    Kind kind;
    // Cyclic order for cycle blocks, the endpoint pair for bridges.
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;
    std::vector<int> block_of_edge;  // edge id -> block index
    std::vector<char> cyclic;        // vertex lies on some cycle block
};

/// True iff every block of the connected graph is an edge or a simple cycle.
bool is_cactus(const SimpleGraph& g);

/// Cactus block structure. Throws NonCactusError with a witness otherwise.
BlockDecomposition blocks(const SimpleGraph& g);

/// Maximal woody (bridge-only) subtree hanging at a cyclic vertex, truncated
/// at vertices that carry further cycle blocks (the exit leaves).
struct WoodyTree {
    int root = -1;
    std::vector<int> edges;        // edge ids, parent edge first in BFS order
    std::vector<int> exit_leaves;  // tree leaves with pending cycle blocks
    bool empty() const { return edges.empty(); }
};

/// Everything attached at one host vertex: cycle blocks plus the merged
/// woody subtree. A group is colored in one go and the host is never
/// revisited.
struct AttachGroup {
    int host = -1;
    std::vector<int> cycles;  // block indices, longest first
    WoodyTree tree;
    // The whole attachment is exactly one pendant 2P3 rooted at its end.
    bool spike_only = false;
};

struct PlanItem {
    enum class Kind { cycle_batch, leaf_join };
    Kind kind;
    int cycle_block = -1;             // cycle whose vertices host (cycle_batch)
    std::vector<AttachGroup> groups;  // leaf_join carries exactly one group
};

/// Ordered attachment script consumed by the coloring engine: the initial
/// cycle, then batches of attach events walking outward so every attachment
/// point is already colored when its event runs.
struct BuildPlan {
    int initial_cycle = -1;
    BlockDecomposition decomp;
    std::vector<PlanItem> items;
};

/// Compiles the attachment script. Throws TreeInputError when g has no cycle.
BuildPlan build_plan(const SimpleGraph& g);

}  // namespace lir
