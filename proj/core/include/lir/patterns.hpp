#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lir/labels.hpp"
#include "lir/multigraph.hpp"

namespace lir {

/// Color of one whole multiedge: monochromatic red or blue, or the split
/// red-blue multiedge.
enum class EdgeColor : uint8_t { R, B, RB };

inline int red_mult_of(EdgeColor c) { return c == EdgeColor::R ? 2 : (c == EdgeColor::B ? 0 : 1); }
inline EdgeColor edge_color_of(int red_mult) {
    return red_mult == 2 ? EdgeColor::R : (red_mult == 0 ? EdgeColor::B : EdgeColor::RB);
}
inline EdgeColor swapped(EdgeColor c) {
    return c == EdgeColor::R ? EdgeColor::B : (c == EdgeColor::B ? EdgeColor::R : EdgeColor::RB);
}
inline int red_of(EdgeColor c) { return red_mult_of(c); }
inline int blue_of(EdgeColor c) { return 2 - red_mult_of(c); }

/// Pendant 2P3 hanging at a pattern vertex, colored as part of the pattern.
struct PatternSpike {
    int at;
    EdgeColor root;   // vertex -- middle
    EdgeColor outer;  // middle -- tip
};

/// One canonical coloring table: a multipath or multicycle with per-edge
/// colors, per-vertex labels, optional pre-colored spikes, and the anchor
/// vertex that gets identified with the host when the pattern is an
/// attachment template. ctx_* hold the declared host context the template
/// verifies against.
struct LabeledPattern {
    bool is_cycle = true;
    std::vector<EdgeColor> edge;  // cycle: edge i joins i and (i+1) mod L
    std::vector<Label> labels;
    std::vector<int> partner;  // pair partner vertex or -1
    std::vector<PatternSpike> spikes;
    int anchor = -1;
    int ctx_host_red = 0, ctx_host_blue = 0;
    // Degrees of declared external neighbors of the anchor, keyed by the color
    // of the connecting multiedge; used only by the standalone self-check.
    struct ExternalEdge {
        EdgeColor color;
        int nbr_red, nbr_blue;
    };
    std::vector<ExternalEdge> anchor_externals;
    int splice_after = -1;  // edge index after which (B,B,R,R) blocks splice
    std::string name;

    int length() const { return static_cast<int>(edge.size()); }
    int vertex_count() const { return is_cycle ? length() : length() + 1; }
    // Red/blue contributed to the host by the two anchor edges (cycles only).
    std::pair<int, int> anchor_contribution() const;
};

LabeledPattern swap_colors(LabeledPattern p);
LabeledPattern reversed(LabeledPattern p);
/// Inserts `segments` copies of (B,B,R,R) after the splice point.
LabeledPattern spliced(LabeledPattern p, int segments);

/// Multipath coloring: even length BB,RR repeating; odd length B,RB,R then
/// the even rule. Length 1 is out of the domain.
LabeledPattern path_pattern(int length);

/// Standard multicycle colorings for lengths 3..7 with their vertex labels,
/// extended past 7 by splicing after two red multiedges.
LabeledPattern cycle_pattern(int length);

enum class SpecialKind {
    c3_with_spikes,      // triangle with a spike on every vertex
    initial_cycle_spike, // initial 4k+2 / 4k+3 cycle absorbing one spike
    s2_cycle_spike,      // cycle with spike next to the join, for S2 hosts
    s2_c5_c3,            // C5 / C3 joined to an S2 host
    tprime_first_cycle,  // first cycle joined at x2 of a T' pair
    pair_s_c3,           // C3 joined to one vertex of a special pair S
    pair_t_spikes,       // special pair T carrying a spike on each vertex
    step3_case1_c3,      // C3 joined to a leaf, monochromatic even case
    step3_case4,         // cycle joined to a leaf, red-blue odd case
};

const char* special_kind_name(SpecialKind k);

/// Transcribed/regenerated special coloring for the given kind and cycle
/// length. Throws std::invalid_argument for inadmissible (kind, length).
LabeledPattern special_pattern(SpecialKind kind, int length);

/// Variant list for a special kind, preference ordered (used by the engine;
/// special_pattern returns the first).
std::vector<LabeledPattern> special_pattern_variants(SpecialKind kind, int length);

/// The three branch shapes that are not locally irregular.
enum class BranchShapeKind { p4_end, p4_internal, p5_center };

/// Coloring of an exceptional branch, with the entering multiedge assumed
/// monochromatic red (mirror the colors when it is blue).
/// Edge order: p4_end (x-c, c-d, d-e); p4_internal (x-x1, x1-x1', x-x2);
/// p5_center (x-x1, x1-x1', x-x2, x2-x2').
struct BranchColoring {
    BranchShapeKind kind;
    std::vector<EdgeColor> edges;
    int root_red, root_blue;  // x's color degrees including the father edge
};

/// Preference-ordered colorings per exceptional shape (father edge red).
std::vector<BranchColoring> exceptional_branch_pattern();
std::vector<BranchColoring> exceptional_branch_colorings(BranchShapeKind kind);

/// The bow-tie graph B: two triangles sharing vertex 0.
SimpleGraph bowtie_fixture();

/// Standalone check: builds the pattern's graph (with spikes and the declared
/// anchor context) and runs the verifier over it.
VerificationReport check_pattern(const LabeledPattern& p);

/// Validates every vertex label against its defining predicate.
bool pattern_labels_valid(const LabeledPattern& p, std::string* why = nullptr);

/// Derives labels for a standard-colored cycle from vertex degree forms;
/// also used to relabel spliced patterns.
void assign_pattern_labels(LabeledPattern& p);

namespace detail {
/// Exhaustive coloring search used to regenerate figure tables: tries all
/// 3^m assignments in the order R < B < RB and returns the first accepted.
std::optional<std::vector<EdgeColor>> search_coloring(
    int edge_count, const std::function<bool(const std::vector<EdgeColor>&)>& accept);
}  // namespace detail

}  // namespace lir
