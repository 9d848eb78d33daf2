#include "lir/labels.hpp"

namespace lir {

const char* label_name(Label l) {
    switch (l) {
        case Label::none: return "-";
        case Label::A: return "A";
        case Label::B: return "B";
        case Label::S1: return "S1";
        case Label::S2: return "S2";
        case Label::S2t: return "S2~";
        case Label::S: return "S";
        case Label::Sp: return "S'";
        case Label::T: return "T";
        case Label::Tp: return "T'";
    }
    return "?";
}

}  // namespace lir
