#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>

#include "bsaf/core.hpp"

namespace bsaf {

enum class Semantics { ConflictFree, Admissible, Complete, Grounded, Preferred, Stable };

inline constexpr Semantics kAllSemantics[] = {Semantics::ConflictFree, Semantics::Admissible,
                                              Semantics::Complete,     Semantics::Grounded,
                                              Semantics::Preferred,    Semantics::Stable};

/// Short names used on the command line: cf, adm, com, grd, pref, stb.
std::string_view to_string(Semantics sem);
std::optional<Semantics> parse_semantics(std::string_view text);

using ExtensionSet = std::set<Extension>;

bool is_conflict_free(const Framework& f, Extension e);

/// e defends a iff e attacks cl(T) for every attack (T,a).
bool defends(const Framework& f, Extension e, ArgId a);

/// Literal reading of defense: quantifies over every closed attacker of a.
/// Exponential; refuses frameworks above `max_args` arguments.
bool defends_naive(const Framework& f, Extension e, ArgId a, std::size_t max_args = 16);

bool is_admissible(const Framework& f, Extension e);
bool is_complete(const Framework& f, Extension e);
bool is_stable(const Framework& f, Extension e);

/// Membership test for the decidable-per-set semantics (cf, adm, com, stb).
/// Grounded and preferred need the whole candidate space; use enumerate().
bool is_member(const Framework& f, Extension e, Semantics sem);

struct EnumerateOptions {
    std::size_t max_args = 20;
};

/// Exact extension set by exhaustive subset filtering. Grounded yields the
/// ⊆-minimal complete sets and preferred the ⊆-maximal admissible sets; both
/// can be empty or contain several sets.
ExtensionSet enumerate(const Framework& f, Semantics sem, EnumerateOptions options = {});

/// ⊆-minimal / ⊆-maximal members of a family.
ExtensionSet minimal_elements(const ExtensionSet& family);
ExtensionSet maximal_elements(const ExtensionSet& family);

}  // namespace bsaf
