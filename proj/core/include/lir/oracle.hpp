#pragma once

#include <optional>
#include <vector>

#include "lir/multigraph.hpp"

namespace lir {

/// Exact locally irregular chromatic index of 2G, капped at two colors.
struct LirResult {
    enum class Value { one, two, more_than_2_or_uncolorable };
    Value value;
    std::optional<DoubledColoring> witness;  // passes verify, uses `value` colors
};

const char* lir_value_name(LirResult::Value v);

/// Exhaustive minimum over all 3^|E| assignments (RR < BB < RB per edge, in
/// edge-id order; first witness wins). Throws when |E| exceeds the cap.
LirResult brute_lir2(const SimpleGraph& g, int edge_cap = 14);

/// Monochromatic 2G is locally irregular iff G itself is.
bool monochromatic_ok(const SimpleGraph& g);

/// Two-coloring search restricted to assignments whose leading edges carry
/// the given digits (0=RR, 1=BB, 2=RB); the unit of deterministic parallel
/// partitioning. Never reports value one.
LirResult brute_lir2_prefix(const SimpleGraph& g, const std::vector<int>& prefix,
                            int edge_cap = 14);

/// Membership in the family of graphs with no locally irregular coloring:
/// odd paths, odd cycles, and the recursive triangle family.
struct TprimeClass {
    enum class Kind { odd_path, odd_cycle, family_T, not_in_Tprime };
    Kind kind;

    /// One peeling step: the removed pendant path (attachment vertex first)
    /// and, for odd paths, the removed leaf triangle at its far end.
    struct Peel {
        std::vector<int> path;      // v0 (kept) .. vk (removed end)
        std::vector<int> triangle;  // empty for an even-path peel
    };
    std::vector<Peel> certificate;  // applied in order down to a triangle
    std::vector<int> core_triangle;
};

const char* tprime_kind_name(TprimeClass::Kind k);

TprimeClass classify_tprime(const SimpleGraph& g);

/// Replays a family_T certificate: removing the recorded structures from g
/// step by step must end exactly at the core triangle.
bool replay_tprime_certificate(const SimpleGraph& g, const TprimeClass& cls);

/// True iff the simple graph g admits no locally irregular edge coloring
/// with any number of colors (exhaustive, pruned). Throws over the cap.
bool graph_uncolorable_check(const SimpleGraph& g, int edge_cap = 8);

}  // namespace lir
