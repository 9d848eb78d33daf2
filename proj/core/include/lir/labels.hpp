#pragma once

#include <cstdint>

namespace lir {

/// Per-cyclic-vertex state driving the attachment procedures. S, Sp, T and Tp
/// mark both members of a special pair; Sp and Tp are the "would become S/T"
/// forms. S2t is the S2 variant living on a triangle.
enum class Label : uint8_t { none, A, B, S1, S2, S2t, S, Sp, T, Tp };

const char* label_name(Label l);

inline bool is_pair_label(Label l) {
    return l == Label::S || l == Label::Sp || l == Label::T || l == Label::Tp;
}

// Allowed labels among an A vertex's multicycle neighbors.
inline bool allowed_next_to_A(Label l) {
    return l == Label::B || l == Label::S2 || l == Label::S || l == Label::Sp;
}

// Allowed labels among a B vertex's multicycle neighbors.
inline bool allowed_next_to_B(Label l) {
    return l == Label::A || l == Label::S1 || l == Label::T || l == Label::Tp;
}

// A spike can never hang alone at S1 or S2t.
inline bool spike_safe(Label l) { return l != Label::S1 && l != Label::S2t; }

}  // namespace lir
