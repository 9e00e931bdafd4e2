#include <catch_amalgamated.hpp>

#include "bsaf/harness.hpp"
#include "bsaf/io.hpp"
#include "bsaf/semantics.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace bsaf;

namespace {

Framework single() { return FrameworkBuilder().args({"a"}).build(); }
Framework mutual() { return FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").attack({"b"}, "a").build(); }

}  // namespace

TEST_CASE("semantics names round-trip", "[semantics]") {
    for (Semantics s : kAllSemantics) CHECK(parse_semantics(to_string(s)) == s);
    CHECK_FALSE(parse_semantics("naive"));
}

TEST_CASE("is_conflict_free", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    CHECK(is_conflict_free(ex1, ex1.set({"a", "e"})));
    CHECK(is_conflict_free(ex1, ArgSet{}));
    CHECK_FALSE(is_conflict_free(ex1, ex1.set({"c", "d"})));
}

TEST_CASE("defends", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    CHECK(defends(ex1, ex1.set({"d", "e"}), ex1.id("c")));
    CHECK_FALSE(defends(ex1, ex1.set({"d"}), ex1.id("c")));
    CHECK(defends(ex1, ArgSet{}, ex1.id("a")));

    Framework empty = FrameworkBuilder().args({"a", "b"}).attack({}, "a").build();
    for (Extension e : {ArgSet{}, empty.set({"a"}), empty.set({"b"}), empty.args()}) {
        CHECK_FALSE(defends(empty, e, empty.id("a")));
        CHECK_FALSE(defends_naive(empty, e, empty.id("a")));
    }
}

TEST_CASE("defends_naive agrees with defends on the six-argument fixture", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    std::size_t cases = 0;
    for_each_subset(ex1.args(), [&](ArgSet e) {
        for (ArgId a : ex1.args()) {
            CHECK(defends(ex1, e, a) == defends_naive(ex1, e, a));
            ++cases;
        }
    });
    CHECK(cases == 64 * 6);
    CHECK(defends_naive(single(), ArgSet{}, ArgId{0}));
}

TEST_CASE("defends_naive refuses large frames", "[semantics]") {
    const Framework big = gen_random(GenConfig{3, 18, 0.1, 0.0, 1, true});
    CHECK_THROWS_AS(defends_naive(big, ArgSet{}, ArgId{0}), CapExceeded);
}

TEST_CASE("is_admissible", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    CHECK(is_admissible(ex1, ex1.set({"b", "e"})));
    CHECK_FALSE(is_admissible(ex1, ex1.set({"a", "b"})));
    CHECK_FALSE(is_admissible(ex1, ex1.set({"a", "b", "c"})));
    CHECK(is_admissible(ex1, ArgSet{}));

    Framework empty_support = FrameworkBuilder().args({"h"}).support({}, "h").build();
    CHECK_FALSE(is_admissible(empty_support, ArgSet{}));
}

TEST_CASE("is_complete", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    for_each_subset(ex1.args(), [&](ArgSet e) { CHECK_FALSE(is_complete(ex1, e)); });
    const Framework one = single();
    CHECK(is_complete(one, one.set({"a"})));
    CHECK_FALSE(is_complete(one, ArgSet{}));
    CHECK(is_complete(mutual(), ArgSet{}));
}

TEST_CASE("is_stable", "[semantics]") {
    const Framework one = single();
    CHECK(is_stable(one, one.set({"a"})));
    const Framework ex1 = fixtures::example1();
    CHECK_FALSE(is_stable(ex1, ex1.set({"a", "e"})));
    const Framework m = mutual();
    CHECK(is_stable(m, m.set({"a"})));
}

TEST_CASE("is_member rejects set-valued semantics", "[semantics]") {
    const Framework one = single();
    CHECK_THROWS_AS(is_member(one, ArgSet{}, Semantics::Grounded), InvalidArgument);
    CHECK_THROWS_AS(is_member(one, ArgSet{}, Semantics::Preferred), InvalidArgument);
    CHECK(is_member(one, ArgSet{}, Semantics::Admissible));
}

TEST_CASE("enumerate on the reference frames", "[semantics]") {
    const Framework ex1 = fixtures::example1();
    CHECK(ref::names(ex1, enumerate(ex1, Semantics::Admissible)) ==
          ref::family({{}, {"a"}, {"b"}, {"e"}, {"a", "e"}, {"b", "e"}}));
    CHECK(enumerate(ex1, Semantics::Complete).empty());
    CHECK(enumerate(ex1, Semantics::Grounded).empty());

    const Framework g = fixtures::grounded_counterexample();
    CHECK(ref::names(g, enumerate(g, Semantics::Grounded)) == ref::family({{"a", "d", "e"}}));
}

TEST_CASE("enumerate refuses frames above the cap", "[semantics]") {
    const Framework big = gen_random(GenConfig{5, 21, 0.1, 0.0, 1, true});
    CHECK_THROWS_AS(enumerate(big, Semantics::Admissible), CapExceeded);
    CHECK_NOTHROW(enumerate(big, Semantics::Admissible, EnumerateOptions{21}).size());
}

TEST_CASE("grounded may have several members", "[semantics]") {
    const Framework f = parse_framework(
        "bsaf 1\n"
        "arg a0\narg a1\narg a2\narg a3\narg a4\narg a5\n"
        "att a0 a2 a3 -> a0\natt a0 a2 a4 -> a2\natt a0 a5 -> a2\natt a1 a3 -> a2\natt a1 a5 -> a3\n"
        "att a2 -> a3\natt a0 a1 a2 -> a4\natt a1 a2 -> a4\natt a4 -> a4\natt a0 a1 -> a5\natt a3 -> a5\n"
        "sup a1 -> a0\nsup a3 -> a0\nsup a5 -> a1\nsup a3 a4 a5 -> a2\nsup a4 a5 -> a3\n");
    const ExtensionSet grd = enumerate(f, Semantics::Grounded);
    CHECK(ref::names(f, grd) == ref::family({{"a0", "a1", "a2"}, {"a0", "a1", "a3"}}));
    CHECK(ref::extensions(ref::from(f), Semantics::Grounded) == ref::names(f, grd));
}

TEST_CASE("enumerate matches the reference semantics", "[semantics]") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        GenConfig cfg{seed, 2 + seed % 5, 0.25, 0.25, 2, seed % 3 != 0};
        const Framework f = gen_random(cfg);
        const ref::RefFramework r = ref::from(f);
        for (Semantics sem : kAllSemantics) {
            INFO("seed " << seed << " semantics " << to_string(sem));
            CHECK(ref::names(f, enumerate(f, sem)) == ref::extensions(r, sem));
        }
    }
}

TEST_CASE("enumerated extensions pass their own predicates", "[semantics]") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const Framework f = gen_random(GenConfig{seed, 6, 0.2, 0.2, 3, false});
        const ExtensionSet adm = enumerate(f, Semantics::Admissible);
        const ExtensionSet com = enumerate(f, Semantics::Complete);
        const ExtensionSet stb = enumerate(f, Semantics::Stable);
        const ExtensionSet pref = enumerate(f, Semantics::Preferred);
        const ExtensionSet grd = enumerate(f, Semantics::Grounded);
        for (Semantics sem : {Semantics::ConflictFree, Semantics::Admissible, Semantics::Complete, Semantics::Stable}) {
            for (Extension e : enumerate(f, sem)) CHECK(is_member(f, e, sem));
        }
        for (Extension e : adm) CHECK(is_closed(f, e));
        for (Extension e : com) CHECK(adm.count(e));
        for (Extension e : pref) CHECK(adm.count(e));
        for (Extension e : stb) {
            CHECK(adm.count(e));
            CHECK(pref.count(e));
        }
        CHECK(grd.empty() == com.empty());
    }
}

TEST_CASE("defends equals defends_naive on random frames", "[semantics]") {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        const Framework f = gen_random(GenConfig{seed, 2 + seed % 6, 0.3, 0.3, 3, seed % 2 == 0});
        SplitMix64 rng(seed);
        for (int k = 0; k < 8; ++k) {
            Extension e = ArgSet::from_bits(rng.next()) & f.args();
            ArgId a{static_cast<std::uint32_t>(rng.below(f.args().size()))};
            CHECK(defends(f, e, a) == defends_naive(f, e, a));
        }
    }
}

TEST_CASE("minimal and maximal elements", "[semantics]") {
    ArgId a{0}, b{1};
    ExtensionSet fam{ArgSet{a}, ArgSet{a, b}, ArgSet{b}};
    CHECK(minimal_elements(fam) == ExtensionSet{ArgSet{a}, ArgSet{b}});
    CHECK(maximal_elements(fam) == ExtensionSet{ArgSet{a, b}});
    CHECK(minimal_elements({}).empty());
}
