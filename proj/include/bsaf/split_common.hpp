#pragma once

#include <optional>
#include <string_view>

#include "bsaf/semantics.hpp"

namespace bsaf {

enum class SplitMode { Attack, Support, Combined };

std::string_view to_string(SplitMode mode);
std::optional<SplitMode> parse_split_mode(std::string_view text);

/// Result of a splitting-based solve. `possibly_incomplete` is set for the
/// semantics where only the combination direction is guaranteed, i.e. the
/// extensions found are all correct but some may be missing.
struct SplitSolution {
    ExtensionSet extensions;
    bool possibly_incomplete = false;
};

/// True when the split solve returns exactly σ(F) for this mode.
bool split_is_complete(SplitMode mode, Semantics sem);

/// Throws InvalidArgument for semantics no splitting result covers (cf).
void require_split_semantics(Semantics sem);

/// E1 ∪ (E2 ∖ {*2}); throws std::logic_error if any other dummy survives.
Extension recombine(const Framework& whole, Extension e1, Extension e2);

}  // namespace bsaf
