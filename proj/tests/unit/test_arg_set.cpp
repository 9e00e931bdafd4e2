#include <catch_amalgamated.hpp>

#include <vector>

#include "bsaf/arg_set.hpp"

using bsaf::ArgId;
using bsaf::ArgSet;

namespace {
ArgId id(std::uint32_t v) { return ArgId{v}; }
}  // namespace

TEST_CASE("set algebra", "[arg_set]") {
    ArgSet a{id(0), id(2)};
    ArgSet b{id(2), id(5)};
    CHECK((a | b) == ArgSet{id(0), id(2), id(5)});
    CHECK((a & b) == ArgSet{id(2)});
    CHECK((a - b) == ArgSet{id(0)});
    CHECK(a.size() == 2);
    CHECK(a.intersects(b));
    CHECK_FALSE(a.subset_of(b));
    CHECK(ArgSet{id(2)}.subset_of(a));
    CHECK(ArgSet{}.subset_of(a));
    CHECK(ArgSet::first_n(64).size() == 64);
    CHECK(ArgSet::first_n(0).empty());
}

TEST_CASE("iteration is ascending", "[arg_set]") {
    ArgSet s{id(63), id(1), id(7)};
    std::vector<std::uint32_t> seen;
    for (ArgId x : s) seen.push_back(x.value);
    CHECK(seen == std::vector<std::uint32_t>{1, 7, 63});
}

TEST_CASE("ordering is lexicographic over members", "[arg_set]") {
    CHECK(ArgSet{} < ArgSet{id(0)});
    CHECK(ArgSet{id(0)} < ArgSet{id(0), id(1)});
    CHECK(ArgSet{id(0), id(5)} < ArgSet{id(1)});
    CHECK(ArgSet{id(1), id(2)} > ArgSet{id(1)});
}

TEST_CASE("for_each_subset visits every subset once", "[arg_set]") {
    ArgSet u{id(1), id(3), id(4)};
    std::vector<ArgSet> seen;
    bsaf::for_each_subset(u, [&](ArgSet s) { seen.push_back(s); });
    REQUIRE(seen.size() == 8);
    for (ArgSet s : seen) CHECK(s.subset_of(u));
    CHECK(seen.front().empty());
    CHECK(seen.back() == u);
}
