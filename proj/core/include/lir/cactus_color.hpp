#pragma once

#include <set>
#include <string>
#include <vector>

#include "lir/blocks.hpp"
#include "lir/labels.hpp"
#include "lir/multigraph.hpp"
#include "lir/patterns.hpp"

namespace lir {

struct EngineOptions {
    // Run a full verification and label-predicate sweep after every event
    // instead of only at step boundaries and termination.
    bool debug_verify = false;
};

struct EngineStats {
    long long events = 0;
    long long fallback_joins = 0;  // joins settled outside the primary tables
    long long repairs = 0;         // prescribed conflict repairs that fired
};

/// Coloring-in-progress: partial edge assignment, cached color degrees,
/// per-cyclic-vertex labels with pair bookkeeping, and the ledger of special
/// pairs whose joint attachment is still owed.
struct LabelState {
    DoubledColoring coloring;
    std::vector<char> colored;
    std::vector<int> deg_r, deg_b;
    std::vector<Label> label;
    std::vector<int> partner;
    std::vector<int> label_block;  // block that labeled v, -1 otherwise
    std::vector<char> hosted;
    std::set<std::pair<int, int>> pending_pairs;
    int colored_edges = 0;

    bool is_even(int v) const { return deg_r[static_cast<size_t>(v)] % 2 == 0; }
    int deg(int v, Color c) const {
        return c == Color::red ? deg_r[static_cast<size_t>(v)] : deg_b[static_cast<size_t>(v)];
    }
};

/// The color in which v currently has strictly greater degree. A tie is a
/// caller bug and throws.
Color dominating_color(const LabelState& s, int v);

class CactusColorer {
public:
    CactusColorer(const SimpleGraph& g, EngineOptions opts = {});

    /// Runs Step 1 and the whole attachment script, then verifies.
    DoubledColoring run();

    // Step operations, exposed for inspection and tests.
    void step1_initial();
    void process_item(const PlanItem& item);

    const LabelState& state() const { return st_; }
    const BuildPlan& plan() const { return plan_; }
    const EngineStats& stats() const { return stats_; }

    /// Partial verification of the colored region plus label predicates for
    /// live vertices. Throws std::logic_error on violation.
    void check_invariants() const;

    bool label_predicate_ok(int v, std::string* why = nullptr) const;

private:
    struct Undo {
        enum class Field : uint8_t {
            edge,
            label,
            partner,
            block,
            hosted,
            pending_add,
            pending_del,
            consumed
        };
        Field field;
        int idx;
        int old_value;
    };

    // --- low-level state editing with rollback ---
    void put_edge(int e, EdgeColor c);
    void put_label(int v, Label l);
    void put_partner(int v, int p);
    void put_block(int v, int b);
    void put_hosted(int v);
    void pending_insert(int a, int b);
    void pending_erase(int a, int b);
    size_t checkpoint() const { return undo_.size(); }
    void rollback(size_t mark);

    // --- scoped verification ---
    bool edge_ok(int e) const;
    bool region_ok(const std::vector<int>& verts, const std::set<int>& skip_edges) const;
    std::vector<int> trace_since(size_t mark) const;   // touched vertices
    std::vector<int> edges_since(size_t mark) const;   // edges written

    // --- cycle joins ---
    struct Placement {
        LabeledPattern pat;
        int host_at;  // pattern vertex identified with the host
        int dir;      // +1 / -1 around the block
    };
    std::vector<int> apply_placement(int block, int host, const Placement& pl);
    bool spikes_compatible(int block, int host, const Placement& pl) const;
    // Applies the placement if it keeps the scoped region conflict-free and
    // its anchor-adjacent labels can live next to the host's final label.
    bool try_place(int block, int host, const Placement& pl, const std::set<int>& skip,
                   Label host_final);

    enum class JoinMethod { a_like, b_like, s2_like };
    bool join_cycle(int host, int block, JoinMethod m, Color steer, const std::set<int>& skip,
                    Label host_final);
    std::vector<Placement> cycle_candidates(int host, int block, JoinMethod m, Color steer);
    bool fallback_join(int host, int block, const std::set<int>& skip, bool flip_parity,
                       Label host_final);

    // --- tree joins ---
    enum class TreeMethod { a_like, b_like, s2_host, tprime_x2 };
    bool join_tree(int host, const WoodyTree& tree, TreeMethod m, Color steer,
                   const std::set<int>& skip);
    bool paint_tree_candidate(int host, const WoodyTree& tree, int variant, Color steer,
                              const std::set<int>& skip);

    // --- events ---
    void attach_to_labeled_vertex(const AttachGroup& grp);
    void attach_to_leaf(const AttachGroup& grp);
    void attach_to_pair(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2);

    bool pair_strategy_T(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                         int variant);
    bool pair_strategy_Tp(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                          int variant);
    bool pair_strategy_S(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                         int variant);
    bool pair_strategy_Sp(int x1, int x2, const AttachGroup* g1, const AttachGroup* g2,
                          int variant);

    // Joint-side helper: all cycles then the tree of one pair member.
    bool join_side(int host, const AttachGroup* grp, JoinMethod cm, TreeMethod tm, Color steer,
                   const std::set<int>& skip, Label host_final,
                   std::vector<std::pair<size_t, size_t>>* element_ranges = nullptr,
                   int s2_style_budget = 0);
    bool flip_range(size_t begin, size_t end, const std::vector<int>& recheck,
                    const std::set<int>& skip);

    // --- helpers ---
    Color steer_color(int v) const;  // dominating color, red on ties
    bool has_pending_elements(int v) const;
    int spike_middle(const WoodyTree& t) const;
    void consume_spike(int host, const PatternSpike& ps);
    int pair_block(int x1, int x2) const;
    int third_triangle_vertex(int block, int x1, int x2) const;
    const Block& blk(int b) const { return plan_.decomp.blocks[static_cast<size_t>(b)]; }
    int edge_between(int u, int v) const;
    std::vector<int> cycle_neighbors(int v) const;

    const SimpleGraph& g_;
    EngineOptions opts_;
    BuildPlan plan_;
    LabelState st_;
    EngineStats stats_;
    std::vector<Undo> undo_;
    std::vector<char> has_elements_;
    std::vector<char> spike_only_;
    std::set<int> consumed_groups_;
    std::vector<const AttachGroup*> group_of_;
};

/// Locally irregular red/blue decomposition of 2G for a connected cactus
/// G != K2. Trees route through the tree colorer, K2 throws, non-cacti throw
/// NonCactusError.
DoubledColoring color_cactus(const SimpleGraph& g, const EngineOptions& opts = {},
                             EngineStats* stats = nullptr);

}  // namespace lir
