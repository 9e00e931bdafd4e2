#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bsaf/core.hpp"

namespace bsaf {

/// Argument-level dependency digraph. An attack (T,h) contributes t→h for
/// each t ∈ T; a support (T,h) contributes h→t, so support heads come first.
struct DependencyGraph {
    ArgSet nodes;
    std::vector<std::pair<ArgId, ArgId>> edges;  // sorted, deduplicated
};

DependencyGraph dependency_graph(const Framework& f);

/// Strongly connected components in a topological order of the
/// condensation. Ties are broken by smallest member index, so the result is
/// deterministic.
std::vector<ArgSet> condense(const DependencyGraph& g);

/// Every non-trivial prefix of condense(dependency_graph(f)), ordered by size.
/// Each prefix is a valid A1 for derive_splitting().
std::vector<Extension> enumerate_cuts(const Framework& f);

/// The cut minimizing ||A1| − |A2||; ties go to smaller |A1|, then to the
/// lexicographically smaller set.
std::optional<Extension> best_cut(const Framework& f);

}  // namespace bsaf
