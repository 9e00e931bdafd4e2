#include "bsaf/core.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace bsaf {

InvalidCut::InvalidCut(const std::string& what, std::vector<Link> offending)
    : Error(what), offending_(std::move(offending)) {}
InvalidCut::~InvalidCut() = default;
InvalidCut::InvalidCut(const InvalidCut&) = default;
InvalidCut& InvalidCut::operator=(const InvalidCut&) = default;

std::string_view dummy_name(ArgKind kind) {
    switch (kind) {
        case ArgKind::Dummy0: return "*0";
        case ArgKind::Dummy1: return "*1";
        case ArgKind::Dummy2: return "*2";
        case ArgKind::User: break;
    }
    return "";
}

bool is_valid_user_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

ArgId ArgumentTable::add(std::string name, ArgKind kind) {
    if (kind == ArgKind::User) {
        if (!is_valid_user_name(name)) throw InvalidArgument("invalid argument name '" + name + "'");
    } else if (name != dummy_name(kind)) {
        throw InvalidArgument("dummy argument must be named " + std::string(dummy_name(kind)));
    }
    if (by_name_.count(name) != 0) throw InvalidArgument("duplicate argument '" + name + "'");
    if (args_.size() >= kMaxArguments) {
        throw InvalidArgument("too many arguments (limit " + std::to_string(kMaxArguments) + ")");
    }
    ArgId id{static_cast<std::uint32_t>(args_.size())};
    by_name_.emplace(name, id);
    args_.push_back(Argument{std::move(name), kind});
    return id;
}

std::optional<ArgId> ArgumentTable::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

ArgSet ArgumentTable::dummies() const {
    ArgSet out;
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (args_[i].kind != ArgKind::User) out.insert(ArgId{static_cast<std::uint32_t>(i)});
    }
    return out;
}

bool ArgumentTable::is_prefix_of(const ArgumentTable& other) const {
    if (args_.size() > other.args_.size()) return false;
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (args_[i].name != other.args_[i].name || args_[i].kind != other.args_[i].kind) return false;
    }
    return true;
}

TablePtr with_dummies(const TablePtr& table, std::initializer_list<ArgKind> kinds) {
    std::shared_ptr<ArgumentTable> extended;
    for (ArgKind kind : kinds) {
        const ArgumentTable& current = extended ? *extended : *table;
        if (auto found = current.find(dummy_name(kind))) {
            if (current[*found].kind != kind) throw InvalidArgument("dummy name clash");
            continue;
        }
        if (!extended) extended = std::make_shared<ArgumentTable>(*table);
        extended->add(std::string(dummy_name(kind)), kind);
    }
    if (!extended) return table;
    return extended;
}

void canonicalize(std::vector<Link>& links) {
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
}

Framework::Framework() : table_(std::make_shared<ArgumentTable>()) {}

Framework::Framework(TablePtr table, ArgSet args, std::vector<Link> attacks, std::vector<Link> supports)
    : table_(std::move(table)), args_(args), attacks_(std::move(attacks)), supports_(std::move(supports)) {
    if (!table_) throw InvalidArgument("framework needs an argument table");
    if (!args_.subset_of(ArgSet::first_n(table_->size()))) {
        throw InvalidArgument("framework argument outside its table");
    }
    auto check = [&](const std::vector<Link>& links, const char* what) {
        for (const Link& l : links) {
            if (!l.tail.subset_of(args_) || !args_.contains(l.head)) {
                throw InvalidArgument(std::string(what) + " references an argument outside the framework");
            }
        }
    };
    check(attacks_, "attack");
    check(supports_, "support");
    canonicalize(attacks_);
    canonicalize(supports_);
}

ArgId Framework::id(std::string_view name) const {
    auto found = table_->find(name);
    if (!found || !args_.contains(*found)) {
        throw InvalidArgument("unknown argument '" + std::string(name) + "'");
    }
    return *found;
}

ArgSet Framework::set(std::initializer_list<std::string_view> names) const {
    ArgSet out;
    for (std::string_view n : names) out.insert(id(n));
    return out;
}

bool Framework::has_attack(const Link& link) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), link);
}

bool Framework::has_support(const Link& link) const {
    return std::binary_search(supports_.begin(), supports_.end(), link);
}

Framework Framework::rebased(TablePtr extended) const {
    if (!table_->is_prefix_of(*extended)) throw InvalidArgument("rebase target does not extend the table");
    Framework out = *this;
    out.table_ = std::move(extended);
    return out;
}

void Framework::require_subset(ArgSet e, std::string_view what) const {
    if (!e.subset_of(args_)) {
        throw InvalidArgument(std::string(what) + " contains arguments outside the framework");
    }
}

namespace {

using NamedLink = std::pair<std::vector<std::string>, std::string>;

std::vector<std::string> names_of(const ArgumentTable& table, ArgSet s) {
    std::vector<std::string> out;
    for (ArgId id : s) out.push_back(table[id].name);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NamedLink> named_links(const ArgumentTable& table, const std::vector<Link>& links) {
    std::vector<NamedLink> out;
    out.reserve(links.size());
    for (const Link& l : links) out.emplace_back(names_of(table, l.tail), table[l.head].name);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool operator==(const Framework& a, const Framework& b) {
    if (a.table_ == b.table_) {
        return a.args_ == b.args_ && a.attacks_ == b.attacks_ && a.supports_ == b.supports_;
    }
    return names_of(*a.table_, a.args_) == names_of(*b.table_, b.args_) &&
           named_links(*a.table_, a.attacks_) == named_links(*b.table_, b.attacks_) &&
           named_links(*a.table_, a.supports_) == named_links(*b.table_, b.supports_);
}

FrameworkBuilder::FrameworkBuilder() : table_(std::make_shared<ArgumentTable>()) {}

FrameworkBuilder& FrameworkBuilder::arg(std::string name) {
    table_->add(std::move(name));
    return *this;
}

FrameworkBuilder& FrameworkBuilder::args(std::initializer_list<std::string_view> names) {
    for (std::string_view n : names) table_->add(std::string(n));
    return *this;
}

Link FrameworkBuilder::make_link(std::initializer_list<std::string_view> tail, std::string_view head) const {
    auto lookup = [&](std::string_view n) {
        auto found = table_->find(n);
        if (!found) throw InvalidArgument("unknown argument '" + std::string(n) + "'");
        return *found;
    };
    Link link{{}, lookup(head)};
    for (std::string_view t : tail) link.tail.insert(lookup(t));
    return link;
}

FrameworkBuilder& FrameworkBuilder::attack(std::initializer_list<std::string_view> tail, std::string_view head) {
    attacks_.push_back(make_link(tail, head));
    return *this;
}

FrameworkBuilder& FrameworkBuilder::support(std::initializer_list<std::string_view> tail, std::string_view head) {
    supports_.push_back(make_link(tail, head));
    return *this;
}

Framework FrameworkBuilder::build() const {
    auto snapshot = std::make_shared<const ArgumentTable>(*table_);
    return Framework(snapshot, ArgSet::first_n(snapshot->size()), attacks_, supports_);
}

Framework restrict_to(const Framework& f, ArgSet part) {
    f.require_subset(part, "restriction");
    auto inside = [&](const std::vector<Link>& links) {
        std::vector<Link> out;
        for (const Link& l : links) {
            if (l.tail.subset_of(part) && part.contains(l.head)) out.push_back(l);
        }
        return out;
    };
    return Framework(f.table_ptr(), part, inside(f.attacks()), inside(f.supports()));
}

Extension supp_step(const Framework& f, Extension e) {
    f.require_subset(e);
    Extension out = e;
    for (const Link& s : f.supports()) {
        if (s.tail.subset_of(e)) out.insert(s.head);
    }
    return out;
}

Extension closure(const Framework& f, Extension e) {
    f.require_subset(e);
    // Fixpoint of supp_step, applied in place; terminates within |args| rounds.
    Extension current = e;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Link& s : f.supports()) {
            if (!current.contains(s.head) && s.tail.subset_of(current)) {
                current.insert(s.head);
                changed = true;
            }
        }
    }
    return current;
}

bool is_closed(const Framework& f, Extension e) { return closure(f, e) == e; }

Extension range_plus(const Framework& f, Extension e) {
    f.require_subset(e);
    Extension out;
    for (const Link& a : f.attacks()) {
        if (a.tail.subset_of(e)) out.insert(a.head);
    }
    return out;
}

Extension range_oplus(const Framework& f, Extension e) { return e | range_plus(f, e); }

bool attacks_set(const Framework& f, Extension attacker, Extension target) {
    f.require_subset(attacker, "attacker");
    f.require_subset(target, "target");
    return std::any_of(f.attacks().begin(), f.attacks().end(), [&](const Link& a) {
        return target.contains(a.head) && a.tail.subset_of(attacker);
    });
}

ArgLabel label_argument(const Framework& f, Extension e, ArgId a) {
    f.require_subset(e);
    if (!f.args().contains(a)) throw InvalidArgument("unknown argument id");
    if (e.contains(a)) return ArgLabel::In;
    if (range_plus(f, e).contains(a)) return ArgLabel::Out;
    return ArgLabel::Undecided;
}

Framework union_frameworks(const Framework& f1, const Framework& f2) {
    const ArgumentTable& t1 = f1.table();
    const ArgumentTable& t2 = f2.table();

    auto merge_links = [](std::vector<Link> a, const std::vector<Link>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    if (t2.is_prefix_of(t1)) {
        return Framework(f1.table_ptr(), f1.args() | f2.args(), merge_links(f1.attacks(), f2.attacks()),
                         merge_links(f1.supports(), f2.supports()));
    }
    if (t1.is_prefix_of(t2)) {
        return Framework(f2.table_ptr(), f1.args() | f2.args(), merge_links(f1.attacks(), f2.attacks()),
                         merge_links(f1.supports(), f2.supports()));
    }

    // General case: intern f2's arguments into a copy of f1's table by name.
    auto merged = std::make_shared<ArgumentTable>(t1);
    std::vector<ArgId> remap(t2.size());
    for (ArgId id : f2.args()) {
        const Argument& arg = t2[id];
        if (auto found = merged->find(arg.name)) {
            if ((*merged)[*found].kind != arg.kind) {
                throw InvalidArgument("argument '" + arg.name + "' has conflicting kinds");
            }
            remap[id.value] = *found;
        } else {
            remap[id.value] = merged->add(arg.name, arg.kind);
        }
    }
    auto map_set = [&](ArgSet s) {
        ArgSet out;
        for (ArgId id : s) out.insert(remap[id.value]);
        return out;
    };
    auto map_links = [&](const std::vector<Link>& links) {
        std::vector<Link> out;
        for (const Link& l : links) out.push_back(Link{map_set(l.tail), remap[l.head.value]});
        return out;
    };
    return Framework(merged, f1.args() | map_set(f2.args()), merge_links(f1.attacks(), map_links(f2.attacks())),
                     merge_links(f1.supports(), map_links(f2.supports())));
}

std::string format_set(const ArgumentTable& table, ArgSet e) {
    std::string out = "{";
    bool first = true;
    for (ArgId id : e) {
        if (!first) out += ',';
        out += table[id].name;
        first = false;
    }
    out += '}';
    return out;
}

std::string format_link(const ArgumentTable& table, const Link& link) {
    return "(" + format_set(table, link.tail) + "," + table[link.head].name + ")";
}

}  // namespace bsaf
