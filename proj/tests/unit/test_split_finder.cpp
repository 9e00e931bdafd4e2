#include <catch_amalgamated.hpp>

#include "bsaf/combined_split.hpp"
#include "bsaf/harness.hpp"
#include "bsaf/split_finder.hpp"
#include "fixtures.hpp"

using namespace bsaf;

namespace {

using Edge = std::pair<ArgId, ArgId>;

Framework chain(std::initializer_list<std::string_view> names) {
    FrameworkBuilder b;
    b.args(names);
    const std::string_view* prev = nullptr;
    for (const std::string_view& n : names) {
        if (prev) b.attack({*prev}, n);
        prev = &n;
    }
    return b.build();
}

}  // namespace

TEST_CASE("dependency_graph", "[split_finder]") {
    Framework att = FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").build();
    CHECK(dependency_graph(att).edges == std::vector<Edge>{{att.id("a"), att.id("b")}});

    Framework sup = FrameworkBuilder().args({"a", "b"}).support({"b"}, "a").build();
    CHECK(dependency_graph(sup).edges == std::vector<Edge>{{sup.id("a"), sup.id("b")}});

    const Framework ex1 = fixtures::example1();
    auto e = [&](const char* x, const char* y) { return Edge{ex1.id(x), ex1.id(y)}; };
    std::vector<Edge> expected{e("f", "c"), e("d", "f"), e("e", "f"), e("c", "d"), e("c", "a"), e("c", "b")};
    std::sort(expected.begin(), expected.end());
    const DependencyGraph g = dependency_graph(ex1);
    CHECK(g.edges == expected);
    CHECK(g.nodes == ex1.args());

    Framework dup = FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").support({"a"}, "b").support({"b"}, "a").build();
    CHECK(dependency_graph(dup).edges.size() == 2);
}

TEST_CASE("condense", "[split_finder]") {
    Framework ab = chain({"a", "b"});
    CHECK(condense(dependency_graph(ab)) == std::vector<ArgSet>{ab.set({"a"}), ab.set({"b"})});

    Framework mutual = FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").attack({"b"}, "a").build();
    CHECK(condense(dependency_graph(mutual)) == std::vector<ArgSet>{mutual.args()});

    const Framework ex1 = fixtures::example1();
    CHECK(condense(dependency_graph(ex1)) ==
          std::vector<ArgSet>{ex1.set({"e"}), ex1.set({"c", "d", "f"}), ex1.set({"a"}), ex1.set({"b"})});

    Framework isolated = FrameworkBuilder().args({"p", "q", "r"}).attack({"r"}, "q").build();
    CHECK(condense(dependency_graph(isolated)) ==
          std::vector<ArgSet>{isolated.set({"p"}), isolated.set({"r"}), isolated.set({"q"})});
}

TEST_CASE("enumerate_cuts", "[split_finder]") {
    Framework mutual = FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").attack({"b"}, "a").build();
    CHECK(enumerate_cuts(mutual).empty());

    Framework abc = chain({"a", "b", "c"});
    CHECK(enumerate_cuts(abc) == std::vector<Extension>{abc.set({"a"}), abc.set({"a", "b"})});

    const Framework ex1 = fixtures::example1();
    CHECK(enumerate_cuts(ex1) ==
          std::vector<Extension>{ex1.set({"e"}), ex1.set({"c", "d", "e", "f"}), ex1.set({"a", "c", "d", "e", "f"})});
}

TEST_CASE("best_cut", "[split_finder]") {
    Framework four = chain({"a", "b", "c", "d"});
    CHECK(best_cut(four) == four.set({"a", "b"}));

    Framework mutual = FrameworkBuilder().args({"a", "b"}).attack({"a"}, "b").attack({"b"}, "a").build();
    CHECK_FALSE(best_cut(mutual));
    CHECK_FALSE(best_cut(FrameworkBuilder().args({"a"}).build()));

    Framework tie = FrameworkBuilder()
                        .args({"a", "b", "c", "d"})
                        .attack({"a"}, "b")
                        .attack({"b"}, "c")
                        .attack({"c"}, "b")
                        .attack({"c"}, "d")
                        .build();
    CHECK(enumerate_cuts(tie) == std::vector<Extension>{tie.set({"a"}), tie.set({"a", "b", "c"})});
    CHECK(best_cut(tie) == tie.set({"a"}));

    CHECK(best_cut(fixtures::example1()) == fixtures::example1().set({"c", "d", "e", "f"}));
}

TEST_CASE("split finder soundness on random frames", "[split_finder]") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const Framework f = gen_random(GenConfig{seed, 2 + seed % 9, 0.12, 0.12, 2, seed % 2 == 0});
        const DependencyGraph g = dependency_graph(f);
        const std::vector<ArgSet> order = condense(g);

        ArgSet seen;
        for (ArgSet scc : order) {
            CHECK_FALSE(scc.intersects(seen));
            seen |= scc;
        }
        CHECK(seen == f.args());
        auto position = [&](ArgId v) {
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (order[i].contains(v)) return i;
            }
            return order.size();
        };
        for (const auto& [from, to] : g.edges) CHECK(position(from) <= position(to));

        const std::vector<Extension> cuts = enumerate_cuts(f);
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            CHECK_NOTHROW(derive_splitting(f, cuts[i]));
            CHECK_FALSE(cuts[i].empty());
            CHECK(cuts[i] != f.args());
            if (i > 0) CHECK(cuts[i - 1].size() < cuts[i].size());
        }
        if (!cuts.empty() && f.args().size() <= 8) {
            const Extension a1 = *best_cut(f);
            CHECK(solve_split(f, a1, Semantics::Admissible).extensions == enumerate(f, Semantics::Admissible));
        }
    }
}
