#include "bsaf/semantics.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bsaf {

std::string_view to_string(Semantics sem) {
    switch (sem) {
        case Semantics::ConflictFree: return "cf";
        case Semantics::Admissible: return "adm";
        case Semantics::Complete: return "com";
        case Semantics::Grounded: return "grd";
        case Semantics::Preferred: return "pref";
        case Semantics::Stable: return "stb";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    for (Semantics s : kAllSemantics) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

namespace {

// Per-framework evaluation state shared by the decision procedures: attacks
// are normalized to closed tails once, up front.
class Evaluator {
public:
    explicit Evaluator(const Framework& f) : f_(f) {
        closed_attacks_.reserve(f.attacks().size());
        for (const Link& a : f.attacks()) closed_attacks_.push_back(Link{close(a.tail), a.head});
    }

    ArgSet close(ArgSet e) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Link& s : f_.supports()) {
                if (!e.contains(s.head) && s.tail.subset_of(e)) {
                    e.insert(s.head);
                    changed = true;
                }
            }
        }
        return e;
    }

    ArgSet defeated(ArgSet e) const {
        ArgSet out;
        for (const Link& a : f_.attacks()) {
            if (a.tail.subset_of(e)) out.insert(a.head);
        }
        return out;
    }

    bool conflict_free(ArgSet e) const { return !defeated(e).intersects(e); }

    // Arguments a such that e attacks cl(T) for every attack (T,a).
    ArgSet defended(ArgSet e) const {
        const ArgSet hit = defeated(e);
        ArgSet out = f_.args();
        for (const Link& a : closed_attacks_) {
            if (!a.tail.intersects(hit)) out.erase(a.head);
        }
        return out;
    }

    bool admissible(ArgSet e) const {
        return conflict_free(e) && close(e) == e && e.subset_of(defended(e));
    }

    bool complete(ArgSet e) const { return admissible(e) && defended(e).subset_of(e); }

    bool stable(ArgSet e) const { return admissible(e) && (e | defeated(e)) == f_.args(); }

    bool member(ArgSet e, Semantics sem) const {
        switch (sem) {
            case Semantics::ConflictFree: return conflict_free(e);
            case Semantics::Admissible: return admissible(e);
            case Semantics::Complete: return complete(e);
            case Semantics::Stable: return stable(e);
            case Semantics::Grounded:
            case Semantics::Preferred: break;
        }
        throw InvalidArgument("membership for " + std::string(to_string(sem)) + " needs enumerate()");
    }

private:
    const Framework& f_;
    std::vector<Link> closed_attacks_;
};

}  // namespace

bool is_conflict_free(const Framework& f, Extension e) {
    f.require_subset(e);
    return Evaluator(f).conflict_free(e);
}

bool defends(const Framework& f, Extension e, ArgId a) {
    f.require_subset(e);
    if (!f.args().contains(a)) throw InvalidArgument("unknown argument id");
    return Evaluator(f).defended(e).contains(a);
}

bool defends_naive(const Framework& f, Extension e, ArgId a, std::size_t max_args) {
    f.require_subset(e);
    if (!f.args().contains(a)) throw InvalidArgument("unknown argument id");
    if (f.args().size() > max_args) {
        throw CapExceeded("defends_naive limited to " + std::to_string(max_args) + " arguments");
    }
    bool ok = true;
    for_each_subset(f.args(), [&](ArgSet attacker) {
        if (!ok || !is_closed(f, attacker)) return;
        if (range_plus(f, attacker).contains(a) && !attacks_set(f, e, attacker)) ok = false;
    });
    return ok;
}

bool is_admissible(const Framework& f, Extension e) {
    f.require_subset(e);
    return Evaluator(f).admissible(e);
}

bool is_complete(const Framework& f, Extension e) {
    f.require_subset(e);
    return Evaluator(f).complete(e);
}

bool is_stable(const Framework& f, Extension e) {
    f.require_subset(e);
    return Evaluator(f).stable(e);
}

bool is_member(const Framework& f, Extension e, Semantics sem) {
    f.require_subset(e);
    return Evaluator(f).member(e, sem);
}

ExtensionSet minimal_elements(const ExtensionSet& family) {
    ExtensionSet out;
    for (const Extension& e : family) {
        bool minimal = std::none_of(family.begin(), family.end(),
                                    [&](const Extension& o) { return o != e && o.subset_of(e); });
        if (minimal) out.insert(e);
    }
    return out;
}

ExtensionSet maximal_elements(const ExtensionSet& family) {
    ExtensionSet out;
    for (const Extension& e : family) {
        bool maximal = std::none_of(family.begin(), family.end(),
                                    [&](const Extension& o) { return o != e && e.subset_of(o); });
        if (maximal) out.insert(e);
    }
    return out;
}

ExtensionSet enumerate(const Framework& f, Semantics sem, EnumerateOptions options) {
    if (f.args().size() > options.max_args) {
        throw CapExceeded("enumeration limited to " + std::to_string(options.max_args) + " arguments, got " +
                          std::to_string(f.args().size()));
    }
    const Evaluator eval(f);
    const Semantics filter = sem == Semantics::Grounded    ? Semantics::Complete
                             : sem == Semantics::Preferred ? Semantics::Admissible
                                                           : sem;
    ExtensionSet found;
    for_each_subset(f.args(), [&](ArgSet e) {
        if (filter != Semantics::ConflictFree && eval.close(e) != e) return;
        if (eval.member(e, filter)) found.insert(e);
    });
    if (sem == Semantics::Grounded) return minimal_elements(found);
    if (sem == Semantics::Preferred) return maximal_elements(found);
    return found;
}

}  // namespace bsaf
