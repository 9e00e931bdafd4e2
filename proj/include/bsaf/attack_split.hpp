#pragma once

#include <vector>

#include "bsaf/core.hpp"
#include "bsaf/semantics.hpp"
#include "bsaf/split_common.hpp"

namespace bsaf {

/// An attack splitting (F1, F2, R3) of `whole`: the two sides share only
/// attacks from A1 into A2.
struct AttackSplitSpec {
    Framework whole;
    Framework f1;
    Framework f2;
    std::vector<Link> r3;
    /// R3 with every tail replaced by its closure in `whole`; valid once
    /// `links_closed` is set by close_negative_links().
    std::vector<Link> closed_r3;
    bool links_closed = false;
};

/// Partitions the links of f by A1. Throws InvalidCut on attacks from A2
/// into A1 and on supports crossing the cut in either direction.
AttackSplitSpec derive_attack_splitting(const Framework& f, Extension a1);

/// (R ∖ {(T,h)}) ∪ {(cl(T),h)}. Throws InvalidArgument if `link` is not an attack of f.
Framework close_attack(const Framework& f, const Link& link);

/// Populates closed_r3, closing over the full support relation.
AttackSplitSpec close_negative_links(AttackSplitSpec spec);

/// Heads of attacks in R1 ∪ R3ᶜ whose tails lie inside e1.
Extension attack_split_defeated(const AttackSplitSpec& spec, Extension e1);

/// (A2, R2 ∪ {(T∩A2, h) | (T,h) ∈ R3ᶜ, T ∩ e1⁺ = ∅, T∩A1 ⊆ e1}, S2).
/// Projected tails can be empty; no argument is removed.
Framework r_reduct(const AttackSplitSpec& spec, Extension e1);

/// {(T,h) ∈ R3ᶜ | T ∩ e1⁺ = ∅, T∩A1 ⊄ e1}.
std::vector<Link> undecided_links(const AttackSplitSpec& spec, Extension e1);

/// Adds the self-attacking *0 and ((T∩A2) ∪ {*0}, h) per undecided link.
/// Returns the reduct unchanged when there are no undecided links.
Framework modify(const Framework& reduct, const std::vector<Link>& undecided);

/// F2★ for a given E1: modify(r_reduct(spec, e1), undecided_links(spec, e1)).
Framework attack_split_star(const AttackSplitSpec& spec, Extension e1);

/// σ(F) via σ(F1) and σ(F2★). Exact for stb, adm, com, pref; sound for grd.
SplitSolution solve_attack_split(const Framework& f, Extension a1, Semantics sem,
                                 EnumerateOptions options = {});

}  // namespace bsaf
