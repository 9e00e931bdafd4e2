#include "bsaf/support_split.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bsaf {

SupportSplitSpec derive_support_splitting(const Framework& f, Extension a1) {
    f.require_subset(a1, "cut");
    const ArgSet a2 = f.args() - a1;

    std::vector<Link> r1, r2, s1, s2, s3, bad;
    for (const Link& l : f.attacks()) {
        if (a1.contains(l.head) && l.tail.subset_of(a1)) {
            r1.push_back(l);
        } else if (a2.contains(l.head) && l.tail.subset_of(a2)) {
            r2.push_back(l);
        } else {
            bad.push_back(l);
        }
    }
    for (const Link& l : f.supports()) {
        if (a1.contains(l.head)) {
            (l.tail.subset_of(a1) ? s1 : s3).push_back(l);
        } else if (l.tail.subset_of(a2)) {
            s2.push_back(l);
        } else {
            bad.push_back(l);
        }
    }
    if (!bad.empty()) {
        std::string msg = "not a support splitting; crossing links:";
        for (const Link& l : bad) msg += " " + format_link(f.table(), l);
        throw InvalidCut(msg, bad);
    }
    return SupportSplitSpec{f, Framework(f.table_ptr(), a1, std::move(r1), std::move(s1)),
                            Framework(f.table_ptr(), a2, std::move(r2), std::move(s2)), std::move(s3)};
}

TailFamily support_incompatible(const SupportSplitSpec& spec, Extension e1) {
    spec.f1.require_subset(e1, "E1");
    const ArgSet a1 = spec.f1.args();
    TailFamily out;
    for (const Link& l : spec.s3) {
        if ((l.tail & a1).subset_of(e1) && !e1.contains(l.head)) out.insert(l.tail);
    }
    return out;
}

TailFamily closure_defeated(const SupportSplitSpec& spec, Extension e1) {
    const ArgSet a1 = spec.f1.args();
    const Extension defeated = range_plus(spec.whole, e1);
    TailFamily out;
    for (const ArgSet& tail : support_incompatible(spec, e1)) {
        if (!tail.intersects(a1) && closure(spec.whole, tail).intersects(defeated)) out.insert(tail);
    }
    return out;
}

TailFamily chain_defeated(const SupportSplitSpec& spec, Extension e1) {
    const ArgSet a2 = spec.f2.args();
    const Extension defeated = range_plus(spec.whole, e1);
    const TailFamily published = closure_defeated(spec, e1);
    std::vector<ArgSet> parts;
    for (const Link& l : spec.s3) {
        const ArgSet part = l.tail & a2;
        if (std::find(parts.begin(), parts.end(), part) == parts.end()) parts.push_back(part);
    }
    constexpr std::size_t kMaxParts = 24;
    if (parts.size() > kMaxParts) {
        throw CapExceeded("chain defeat search limited to " + std::to_string(kMaxParts) + " tail parts, got " +
                          std::to_string(parts.size()));
    }

    std::vector<ArgSet> hits;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << parts.size()); ++mask) {
        ArgSet z;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (mask >> i & 1) z |= parts[i];
        }
        if (closure(spec.whole, z).intersects(defeated)) hits.push_back(z);
    }
    auto covered = [&](ArgSet z) {
        for (const ArgSet& t : published) {
            if ((t & a2).subset_of(z)) return true;
        }
        for (const ArgSet& h : hits) {
            if (h != z && h.subset_of(z)) return true;
        }
        return false;
    };
    TailFamily out;
    for (const ArgSet& z : hits) {
        if (!covered(z)) out.insert(z);
    }
    return out;
}

namespace {

TailFamily type1_sets(const SupportSplitSpec& spec, Extension e1, TypeOneScope scope) {
    TailFamily sets = closure_defeated(spec, e1);
    if (scope == TypeOneScope::Chained) sets.merge(chain_defeated(spec, e1));
    return sets;
}

Framework add_type1(const Framework& f2, const TablePtr& table, const TailFamily& defeated) {
    if (defeated.empty()) return f2;
    const ArgId star1 = *table->find(dummy_name(ArgKind::Dummy1));
    ArgSet args = f2.args();
    args.insert(star1);
    std::vector<Link> attacks = f2.attacks();
    attacks.push_back(Link{ArgSet{}, star1});
    std::vector<Link> supports = f2.supports();
    for (const ArgSet& tail : defeated) supports.push_back(Link{tail & f2.args(), star1});
    return Framework(table, args, std::move(attacks), std::move(supports));
}

Framework add_type2(const Framework& f2, const TablePtr& table, const TailFamily& constrained) {
    if (constrained.empty()) return f2;
    const ArgId star2 = *table->find(dummy_name(ArgKind::Dummy2));
    ArgSet args = f2.args();
    args.insert(star2);
    std::vector<Link> attacks = f2.attacks();
    std::vector<Link> supports = f2.supports();
    for (const ArgSet& tail : constrained) {
        const ArgSet local = tail & f2.args();
        ArgSet self = local;
        self.insert(star2);
        attacks.push_back(Link{self, star2});
        supports.push_back(Link{local, star2});
    }
    return Framework(table, args, std::move(attacks), std::move(supports));
}

TailFamily without(const TailFamily& all, const TailFamily& removed) {
    TailFamily out;
    for (const ArgSet& t : all) {
        if (removed.count(t) == 0) out.insert(t);
    }
    return out;
}

}  // namespace

Framework type1_modification(const SupportSplitSpec& spec, Extension e1, TypeOneScope scope) {
    const TailFamily defeated = type1_sets(spec, e1, scope);
    if (defeated.empty()) return spec.f2;
    return add_type1(spec.f2, with_dummies(spec.f2.table_ptr(), {ArgKind::Dummy1}), defeated);
}

Framework type2_modification(const SupportSplitSpec& spec, Extension e1) {
    const TailFamily rest = without(support_incompatible(spec, e1), closure_defeated(spec, e1));
    if (rest.empty()) return spec.f2;
    return add_type2(spec.f2, with_dummies(spec.f2.table_ptr(), {ArgKind::Dummy2}), rest);
}

Framework s_reduct(const SupportSplitSpec& spec, Extension e1, TypeOneScope scope) {
    const TailFamily incompatible = support_incompatible(spec, e1);
    const TailFamily defeated = type1_sets(spec, e1, scope);
    if (incompatible.empty() && defeated.empty()) return spec.f2;
    // Both modifications draw their dummies from one table so the union
    // lines up index for index.
    const TablePtr table = with_dummies(spec.f2.table_ptr(), {ArgKind::Dummy1, ArgKind::Dummy2});
    const Framework f2 = spec.f2.rebased(table);
    const TailFamily constrained = without(incompatible, closure_defeated(spec, e1));
    return union_frameworks(add_type1(f2, table, defeated), add_type2(f2, table, constrained));
}

SplitSolution solve_support_split(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options,
                                  TypeOneScope scope) {
    require_split_semantics(sem);
    const Framework whole = f.rebased(with_dummies(f.table_ptr(), {ArgKind::Dummy1, ArgKind::Dummy2}));
    const SupportSplitSpec spec = derive_support_splitting(whole, a1);

    SplitSolution result;
    result.possibly_incomplete = !split_is_complete(SplitMode::Support, sem);
    for (const Extension& e1 : enumerate(spec.f1, sem, options)) {
        const Framework reduced = s_reduct(spec, e1, scope);
        for (const Extension& e2 : enumerate(reduced, sem, options)) {
            result.extensions.insert(recombine(whole, e1, e2));
        }
    }
    return result;
}

}  // namespace bsaf
