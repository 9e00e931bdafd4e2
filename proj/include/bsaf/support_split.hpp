#pragma once

#include <set>
#include <vector>

#include "bsaf/core.hpp"
#include "bsaf/semantics.hpp"
#include "bsaf/split_common.hpp"

namespace bsaf {

/// A backward support splitting (F1, F2, S3) of `whole`: the sides share
/// only supports whose head is in A1 and whose tail meets A2.
///
/// `whole` is the frame closures and defeat are evaluated in. For a plain
/// support splitting it is the input framework; the combined pipeline passes
/// (A1 ∪ A2★, R1 ∪ R2★, S).
struct SupportSplitSpec {
    Framework whole;
    Framework f1;
    Framework f2;
    std::vector<Link> s3;
};

/// A deduplicated family of S3 tails.
using TailFamily = std::set<ArgSet>;

/// Throws InvalidCut on any attack crossing the cut and on forward supports
/// (head in A2, tail meeting A1).
SupportSplitSpec derive_support_splitting(const Framework& f, Extension a1);

/// Tails T of (T,h) ∈ S3 with T∩A1 ⊆ e1 and h ∉ e1.
TailFamily support_incompatible(const SupportSplitSpec& spec, Extension e1);

/// Support-incompatible tails with T∩A1 = ∅ whose closure in the whole
/// frame is attacked by e1.
TailFamily closure_defeated(const SupportSplitSpec& spec, Extension e1);

/// Minimal unions Z of S3 tail parts T∩A2 such that cl(Z) in the whole frame
/// is attacked by e1, leaving out any Z that contains a closure-defeated tail.
/// Such a Z reaches A1 through supports whose heads lie in e1, which the
/// closure-defeated family does not follow. Throws CapExceeded beyond 24
/// distinct tail parts.
TailFamily chain_defeated(const SupportSplitSpec& spec, Extension e1);

/// Which sets receive a type-1 constraint: Published uses the closure-defeated
/// tails only, Chained adds chain_defeated. Only Chained is exact.
enum class TypeOneScope { Chained, Published };

/// F2 plus *1, (∅,*1) and (Z∩A2, *1) per type-1 set; F2 itself if none.
Framework type1_modification(const SupportSplitSpec& spec, Extension e1,
                             TypeOneScope scope = TypeOneScope::Chained);

/// F2 plus *2 with ((T∩A2) ∪ {*2}, *2) and (T∩A2, *2) per tail in 𝒯 ∖ 𝒟;
/// F2 itself if there is none.
Framework type2_modification(const SupportSplitSpec& spec, Extension e1);

/// Union of the type-1 and type-2 modifications.
Framework s_reduct(const SupportSplitSpec& spec, Extension e1, TypeOneScope scope = TypeOneScope::Chained);

/// E1 ∪ (E2 ∖ {*2}) over σ(F1) × σ(s_reduct). Exact for stb, adm, com;
/// sound for grd and pref.
SplitSolution solve_support_split(const Framework& f, Extension a1, Semantics sem,
                                  EnumerateOptions options = {}, TypeOneScope scope = TypeOneScope::Chained);

}  // namespace bsaf
