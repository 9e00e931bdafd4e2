#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bsaf/arg_set.hpp"
#include "bsaf/error.hpp"

namespace bsaf {

enum class ArgKind { User, Dummy0, Dummy1, Dummy2 };

/// Reserved spelling of a dummy argument: `*0`, `*1` or `*2`.
std::string_view dummy_name(ArgKind kind);

/// True for names matching `[A-Za-z0-9_]+`.
bool is_valid_user_name(std::string_view name);

struct Argument {
    std::string name;
    ArgKind kind = ArgKind::User;
};

/// Interning table mapping argument names to dense indices. Tables are
/// append-only; a table extended with dummies keeps every existing index, so
/// sets built against the original stay valid against the extension.
class ArgumentTable {
public:
    /// Throws InvalidArgument on duplicates, malformed names, or overflow.
    ArgId add(std::string name, ArgKind kind = ArgKind::User);

    std::optional<ArgId> find(std::string_view name) const;
    const Argument& operator[](ArgId id) const { return args_.at(id.value); }
    std::size_t size() const { return args_.size(); }

    /// Indices of all dummy entries.
    ArgSet dummies() const;

    /// Same names and kinds on every index of `*this`.
    bool is_prefix_of(const ArgumentTable& other) const;

private:
    std::vector<Argument> args_;
    std::unordered_map<std::string, ArgId> by_name_;
};

using TablePtr = std::shared_ptr<const ArgumentTable>;

/// Returns `table` extended with the requested dummies; existing entries are
/// reused, so the pointer is returned unchanged when nothing is missing.
TablePtr with_dummies(const TablePtr& table, std::initializer_list<ArgKind> kinds);

/// A collective attack or support (tail, head). Ordered by head, then by tail.
struct Link {
    ArgSet tail;
    ArgId head;

    friend bool operator==(const Link&, const Link&) = default;
    friend std::strong_ordering operator<=>(const Link& a, const Link& b) {
        if (auto c = a.head <=> b.head; c != 0) return c;
        return a.tail <=> b.tail;
    }
};

/// Sorts and deduplicates in place.
void canonicalize(std::vector<Link>& links);

/// An accepted set of arguments; carries no semantics by itself.
using Extension = ArgSet;

enum class ArgLabel { In, Out, Undecided };

/// A BSAF (A, R, S) over a shared argument table. Immutable once built.
class Framework {
public:
    Framework();
    /// Throws InvalidArgument if a link references an argument outside `args`.
    Framework(TablePtr table, ArgSet args, std::vector<Link> attacks, std::vector<Link> supports);

    const TablePtr& table_ptr() const { return table_; }
    const ArgumentTable& table() const { return *table_; }
    ArgSet args() const { return args_; }
    const std::vector<Link>& attacks() const { return attacks_; }
    const std::vector<Link>& supports() const { return supports_; }

    std::string_view name(ArgId id) const { return (*table_)[id].name; }

    /// Id of an owned argument; throws InvalidArgument otherwise.
    ArgId id(std::string_view name) const;
    /// Set of owned arguments by name; throws InvalidArgument on unknown names.
    ArgSet set(std::initializer_list<std::string_view> names) const;

    bool has_attack(const Link& link) const;
    bool has_support(const Link& link) const;

    /// Same framework over an extension of its table.
    Framework rebased(TablePtr extended) const;

    /// Throws InvalidArgument unless `e` is a subset of args().
    void require_subset(ArgSet e, std::string_view what = "set") const;

    /// Structural equality by argument names (tables may differ).
    friend bool operator==(const Framework& a, const Framework& b);

private:
    TablePtr table_;
    ArgSet args_;
    std::vector<Link> attacks_;
    std::vector<Link> supports_;
};

/// Incremental construction by name, mostly for fixtures and tests.
class FrameworkBuilder {
public:
    FrameworkBuilder();

    FrameworkBuilder& arg(std::string name);
    FrameworkBuilder& args(std::initializer_list<std::string_view> names);
    FrameworkBuilder& attack(std::initializer_list<std::string_view> tail, std::string_view head);
    FrameworkBuilder& support(std::initializer_list<std::string_view> tail, std::string_view head);

    Framework build() const;

private:
    Link make_link(std::initializer_list<std::string_view> tail, std::string_view head) const;

    std::shared_ptr<ArgumentTable> table_;
    std::vector<Link> attacks_;
    std::vector<Link> supports_;
};

/// The sub-framework induced by `part`: arguments in `part` and the links
/// lying wholly inside it.
Framework restrict_to(const Framework& f, ArgSet part);

/// e ∪ {h | (T,h) ∈ S, T ⊆ e}.
Extension supp_step(const Framework& f, Extension e);
/// Least superset of e closed under supp_step.
Extension closure(const Framework& f, Extension e);
bool is_closed(const Framework& f, Extension e);

/// Heads of attacks whose tails lie inside e.
Extension range_plus(const Framework& f, Extension e);
/// e together with range_plus(e).
Extension range_oplus(const Framework& f, Extension e);

/// True iff some attack (T,b) has T ⊆ attacker and b ∈ target.
bool attacks_set(const Framework& f, Extension attacker, Extension target);

/// In when a ∈ e, Out when e attacks a, Undecided otherwise. In takes
/// precedence for sets that are not conflict-free.
ArgLabel label_argument(const Framework& f, Extension e, ArgId a);

/// Componentwise union. Arguments are matched by name; throws InvalidArgument
/// if one name carries different kinds in the two tables.
Framework union_frameworks(const Framework& f1, const Framework& f2);

/// "{a,b}" style rendering, members in index order.
std::string format_set(const ArgumentTable& table, ArgSet e);
std::string format_link(const ArgumentTable& table, const Link& link);

}  // namespace bsaf
