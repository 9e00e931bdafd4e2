#include "bsaf/combined_split.hpp"

#include <string>
#include <utility>

namespace bsaf {

SplitSpec derive_splitting(const Framework& f, Extension a1) {
    f.require_subset(a1, "cut");
    const ArgSet a2 = f.args() - a1;

    std::vector<Link> r1, r2, r3, s1, s2, s3, bad;
    for (const Link& l : f.attacks()) {
        if (a1.contains(l.head)) {
            (l.tail.subset_of(a1) ? r1 : bad).push_back(l);
        } else {
            (l.tail.intersects(a1) ? r3 : r2).push_back(l);
        }
    }
    for (const Link& l : f.supports()) {
        if (a1.contains(l.head)) {
            (l.tail.subset_of(a1) ? s1 : s3).push_back(l);
        } else {
            (l.tail.subset_of(a2) ? s2 : bad).push_back(l);
        }
    }
    if (!bad.empty()) {
        std::string msg = "not a splitting; crossing links:";
        for (const Link& l : bad) msg += " " + format_link(f.table(), l);
        throw InvalidCut(msg, bad);
    }
    return SplitSpec{f, Framework(f.table_ptr(), a1, std::move(r1), std::move(s1)),
                     Framework(f.table_ptr(), a2, std::move(r2), std::move(s2)), std::move(r3), std::move(s3)};
}

PipelineTrace hat_transform(const SplitSpec& spec) {
    const ArgSet a1 = spec.f1.args();
    std::vector<Link> hat_r2;
    std::vector<Link> hat_r3;
    auto sort_closed = [&](const Link& l) {
        Link closed{closure(spec.whole, l.tail), l.head};
        (closed.tail.intersects(a1) ? hat_r3 : hat_r2).push_back(closed);
    };
    for (const Link& l : spec.f2.attacks()) sort_closed(l);
    for (const Link& l : spec.r3) sort_closed(l);
    canonicalize(hat_r3);

    PipelineTrace trace;
    trace.hat_f2 = Framework(spec.f2.table_ptr(), spec.f2.args(), std::move(hat_r2), spec.f2.supports());
    trace.hat_r3 = std::move(hat_r3);
    return trace;
}

AttackSplitSpec hat_attack_spec(const SplitSpec& spec, const PipelineTrace& hat) {
    return AttackSplitSpec{spec.whole, spec.f1, hat.hat_f2, hat.hat_r3, hat.hat_r3, true};
}

PipelineTrace build_reduced(const SplitSpec& spec, Extension e1) {
    spec.f1.require_subset(e1, "E1");
    PipelineTrace trace = hat_transform(spec);
    const AttackSplitSpec attack = hat_attack_spec(spec, trace);
    trace.reduct = r_reduct(attack, e1);
    trace.star = modify(trace.reduct, undecided_links(attack, e1));

    // The support stage sees (A1 ∪ A2★, R1 ∪ R2★, S).
    std::vector<Link> stage_attacks = spec.f1.attacks();
    stage_attacks.insert(stage_attacks.end(), trace.star.attacks().begin(), trace.star.attacks().end());
    const Framework stage(trace.star.table_ptr(), spec.f1.args() | trace.star.args(), std::move(stage_attacks),
                          spec.whole.supports());
    const SupportSplitSpec support{stage, spec.f1, trace.star, spec.s3};
    trace.final_frame = s_reduct(support, e1);
    return trace;
}

SplitSolution solve_split(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options) {
    require_split_semantics(sem);
    const Framework whole =
        f.rebased(with_dummies(f.table_ptr(), {ArgKind::Dummy0, ArgKind::Dummy1, ArgKind::Dummy2}));
    const SplitSpec spec = derive_splitting(whole, a1);

    SplitSolution result;
    result.possibly_incomplete = !split_is_complete(SplitMode::Combined, sem);
    for (const Extension& e1 : enumerate(spec.f1, sem, options)) {
        const PipelineTrace trace = build_reduced(spec, e1);
        for (const Extension& e2 : enumerate(trace.final_frame, sem, options)) {
            result.extensions.insert(recombine(whole, e1, e2));
        }
    }
    return result;
}

SplitSolution solve_split(SplitMode mode, const Framework& f, Extension a1, Semantics sem,
                          EnumerateOptions options) {
    switch (mode) {
        case SplitMode::Attack: return solve_attack_split(f, a1, sem, options);
        case SplitMode::Support: return solve_support_split(f, a1, sem, options);
        case SplitMode::Combined: break;
    }
    return solve_split(f, a1, sem, options);
}

}  // namespace bsaf
