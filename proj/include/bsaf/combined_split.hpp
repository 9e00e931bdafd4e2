#pragma once

#include <vector>

#include "bsaf/attack_split.hpp"
#include "bsaf/core.hpp"
#include "bsaf/semantics.hpp"
#include "bsaf/split_common.hpp"
#include "bsaf/support_split.hpp"

namespace bsaf {

/// A splitting (F1, F2, R3, S3): attacks may cross from A1 into A2 and
/// supports from A2 back into A1; everything else stays on one side.
struct SplitSpec {
    Framework whole;
    Framework f1;
    Framework f2;
    std::vector<Link> r3;
    std::vector<Link> s3;
};

/// Every intermediate frame of the combined pipeline for one E1.
struct PipelineTrace {
    Framework hat_f2;            // (A2, R̂2, S2)
    std::vector<Link> hat_r3;    // closed attacks whose tail meets A1
    Framework reduct;            // R-reduct of (F1, F̂2, R̂3)
    Framework star;              // after the *0 modification
    Framework final_frame;       // S-reduct of star against S3
};

/// Throws InvalidCut on attacks into A1 with a tail meeting A2, and on
/// supports into A2 with a tail meeting A1.
SplitSpec derive_splitting(const Framework& f, Extension a1);

/// Closes R2 ∪ R3 over the full support relation and repartitions: closed
/// attacks whose tail meets A1 form R̂3 (former R2 attacks can move there),
/// the rest form R̂2. Fills hat_f2 and hat_r3 only.
PipelineTrace hat_transform(const SplitSpec& spec);

/// The attack splitting (F1, F̂2, R̂3) with R̂3 already closed.
AttackSplitSpec hat_attack_spec(const SplitSpec& spec, const PipelineTrace& hat);

/// Runs all stages for `e1`.
PipelineTrace build_reduced(const SplitSpec& spec, Extension e1);

/// E1 ∪ (E2 ∖ {*2}) over σ(F1) × σ(F2⊛). Exact for stb, adm, com; sound for grd, pref.
SplitSolution solve_split(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options = {});

/// Dispatches on the splitting mode.
SplitSolution solve_split(SplitMode mode, const Framework& f, Extension a1, Semantics sem,
                          EnumerateOptions options = {});

}  // namespace bsaf
