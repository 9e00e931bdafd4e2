#include "bsaf/split_common.hpp"

#include <stdexcept>
#include <string>

namespace bsaf {

std::string_view to_string(SplitMode mode) {
    switch (mode) {
        case SplitMode::Attack: return "attack";
        case SplitMode::Support: return "support";
        case SplitMode::Combined: return "combined";
    }
    return "?";
}

std::optional<SplitMode> parse_split_mode(std::string_view text) {
    for (SplitMode m : {SplitMode::Attack, SplitMode::Support, SplitMode::Combined}) {
        if (to_string(m) == text) return m;
    }
    return std::nullopt;
}

bool split_is_complete(SplitMode mode, Semantics sem) {
    switch (sem) {
        case Semantics::Stable:
        case Semantics::Admissible:
        case Semantics::Complete: return true;
        case Semantics::Preferred: return mode == SplitMode::Attack;
        case Semantics::Grounded:
        case Semantics::ConflictFree: return false;
    }
    return false;
}

void require_split_semantics(Semantics sem) {
    if (sem == Semantics::ConflictFree) {
        throw InvalidArgument("splitting is defined for stb, adm, com, grd and pref only");
    }
}

Extension recombine(const Framework& whole, Extension e1, Extension e2) {
    const ArgumentTable& table = whole.table();
    Extension tail = e2;
    if (auto star2 = table.find(dummy_name(ArgKind::Dummy2))) tail.erase(*star2);
    Extension out = e1 | tail;
    if (!out.subset_of(whole.args())) {
        throw std::logic_error("dummy argument leaked into extension " + format_set(table, out));
    }
    return out;
}

}  // namespace bsaf
