#include "bsaf/attack_split.hpp"

#include <string>
#include <utility>

namespace bsaf {

namespace {

std::string describe(const ArgumentTable& table, const std::vector<Link>& links) {
    std::string out;
    for (const Link& l : links) {
        if (!out.empty()) out += ", ";
        out += format_link(table, l);
    }
    return out;
}

}  // namespace

AttackSplitSpec derive_attack_splitting(const Framework& f, Extension a1) {
    f.require_subset(a1, "cut");
    const ArgSet a2 = f.args() - a1;

    std::vector<Link> r1, r2, r3, s1, s2, bad;
    for (const Link& l : f.attacks()) {
        if (a1.contains(l.head)) {
            (l.tail.subset_of(a1) ? r1 : bad).push_back(l);
        } else if (l.tail.intersects(a1)) {
            r3.push_back(l);
        } else {
            r2.push_back(l);
        }
    }
    for (const Link& l : f.supports()) {
        if (a1.contains(l.head) && l.tail.subset_of(a1)) {
            s1.push_back(l);
        } else if (a2.contains(l.head) && l.tail.subset_of(a2)) {
            s2.push_back(l);
        } else {
            bad.push_back(l);
        }
    }
    if (!bad.empty()) {
        throw InvalidCut("not an attack splitting; crossing links: " + describe(f.table(), bad), bad);
    }
    return AttackSplitSpec{f,
                           Framework(f.table_ptr(), a1, std::move(r1), std::move(s1)),
                           Framework(f.table_ptr(), a2, std::move(r2), std::move(s2)),
                           std::move(r3),
                           {},
                           false};
}

Framework close_attack(const Framework& f, const Link& link) {
    if (!f.has_attack(link)) throw InvalidArgument("attack " + format_link(f.table(), link) + " not in framework");
    std::vector<Link> attacks;
    for (const Link& a : f.attacks()) {
        if (a != link) attacks.push_back(a);
    }
    attacks.push_back(Link{closure(f, link.tail), link.head});
    return Framework(f.table_ptr(), f.args(), std::move(attacks), f.supports());
}

AttackSplitSpec close_negative_links(AttackSplitSpec spec) {
    spec.closed_r3.clear();
    for (const Link& l : spec.r3) spec.closed_r3.push_back(Link{closure(spec.whole, l.tail), l.head});
    canonicalize(spec.closed_r3);
    spec.links_closed = true;
    return spec;
}

namespace {

void require_closed(const AttackSplitSpec& spec, Extension e1) {
    if (!spec.links_closed) throw InvalidArgument("negative links have not been closed");
    spec.f1.require_subset(e1, "E1");
}

}  // namespace

Extension attack_split_defeated(const AttackSplitSpec& spec, Extension e1) {
    require_closed(spec, e1);
    Extension out = range_plus(spec.f1, e1);
    for (const Link& l : spec.closed_r3) {
        if (l.tail.subset_of(e1)) out.insert(l.head);
    }
    return out;
}

Framework r_reduct(const AttackSplitSpec& spec, Extension e1) {
    const Extension defeated = attack_split_defeated(spec, e1);
    const ArgSet a1 = spec.f1.args();
    const ArgSet a2 = spec.f2.args();
    std::vector<Link> attacks = spec.f2.attacks();
    for (const Link& l : spec.closed_r3) {
        if (!l.tail.intersects(defeated) && (l.tail & a1).subset_of(e1)) {
            attacks.push_back(Link{l.tail & a2, l.head});
        }
    }
    return Framework(spec.f2.table_ptr(), a2, std::move(attacks), spec.f2.supports());
}

std::vector<Link> undecided_links(const AttackSplitSpec& spec, Extension e1) {
    const Extension defeated = attack_split_defeated(spec, e1);
    const ArgSet a1 = spec.f1.args();
    std::vector<Link> out;
    for (const Link& l : spec.closed_r3) {
        if (!l.tail.intersects(defeated) && !(l.tail & a1).subset_of(e1)) out.push_back(l);
    }
    return out;
}

Framework modify(const Framework& reduct, const std::vector<Link>& undecided) {
    if (undecided.empty()) return reduct;
    TablePtr table = with_dummies(reduct.table_ptr(), {ArgKind::Dummy0});
    const ArgId star0 = *table->find(dummy_name(ArgKind::Dummy0));
    const ArgSet a2 = reduct.args();

    ArgSet args = a2;
    args.insert(star0);
    std::vector<Link> attacks = reduct.attacks();
    attacks.push_back(Link{ArgSet{star0}, star0});
    for (const Link& l : undecided) {
        if (!a2.contains(l.head)) continue;
        Link joint{l.tail & a2, l.head};
        joint.tail.insert(star0);
        attacks.push_back(joint);
    }
    return Framework(std::move(table), args, std::move(attacks), reduct.supports());
}

Framework attack_split_star(const AttackSplitSpec& spec, Extension e1) {
    return modify(r_reduct(spec, e1), undecided_links(spec, e1));
}

SplitSolution solve_attack_split(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options) {
    require_split_semantics(sem);
    // Intern *0 once so every per-E1 frame shares one table.
    const Framework whole = f.rebased(with_dummies(f.table_ptr(), {ArgKind::Dummy0}));
    const AttackSplitSpec spec = close_negative_links(derive_attack_splitting(whole, a1));

    SplitSolution result;
    result.possibly_incomplete = !split_is_complete(SplitMode::Attack, sem);
    for (const Extension& e1 : enumerate(spec.f1, sem, options)) {
        const Framework star = attack_split_star(spec, e1);
        for (const Extension& e2 : enumerate(star, sem, options)) {
            result.extensions.insert(recombine(whole, e1, e2));
        }
    }
    return result;
}

}  // namespace bsaf
