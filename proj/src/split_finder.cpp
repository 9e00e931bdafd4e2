#include "bsaf/split_finder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <queue>

namespace bsaf {

DependencyGraph dependency_graph(const Framework& f) {
    DependencyGraph g;
    g.nodes = f.args();
    for (const Link& a : f.attacks()) {
        for (ArgId t : a.tail) g.edges.emplace_back(t, a.head);
    }
    for (const Link& s : f.supports()) {
        for (ArgId t : s.tail) g.edges.emplace_back(s.head, t);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

namespace {

// Tarjan's algorithm over at most kMaxArguments nodes; successor sets are bitmasks.
class Tarjan {
public:
    explicit Tarjan(const DependencyGraph& g) : nodes_(g.nodes) {
        for (const auto& [from, to] : g.edges) succ_[from.value].insert(to);
        for (ArgId v : nodes_) {
            if (index_[v.value] < 0) visit(v);
        }
    }

    std::vector<ArgSet> components() && { return std::move(components_); }

private:
    void visit(ArgId v) {
        index_[v.value] = low_[v.value] = next_index_++;
        stack_.push_back(v);
        on_stack_.insert(v);
        for (ArgId w : succ_[v.value] & nodes_) {
            if (index_[w.value] < 0) {
                visit(w);
                low_[v.value] = std::min(low_[v.value], low_[w.value]);
            } else if (on_stack_.contains(w)) {
                low_[v.value] = std::min(low_[v.value], index_[w.value]);
            }
        }
        if (low_[v.value] == index_[v.value]) {
            ArgSet component;
            ArgId w;
            do {
                w = stack_.back();
                stack_.pop_back();
                on_stack_.erase(w);
                component.insert(w);
            } while (w != v);
            components_.push_back(component);
        }
    }

    ArgSet nodes_;
    std::array<ArgSet, kMaxArguments> succ_{};
    std::array<int, kMaxArguments> index_ = filled(-1);
    std::array<int, kMaxArguments> low_ = filled(0);
    int next_index_ = 0;
    std::vector<ArgId> stack_;
    ArgSet on_stack_;
    std::vector<ArgSet> components_;

    static std::array<int, kMaxArguments> filled(int v) {
        std::array<int, kMaxArguments> a{};
        a.fill(v);
        return a;
    }
};

int min_member(ArgSet s) { return std::countr_zero(s.bits()); }

}  // namespace

std::vector<ArgSet> condense(const DependencyGraph& g) {
    std::vector<ArgSet> comps = Tarjan(g).components();
    const std::size_t k = comps.size();

    std::array<std::size_t, kMaxArguments> comp_of{};
    for (std::size_t c = 0; c < k; ++c) {
        for (ArgId v : comps[c]) comp_of[v.value] = c;
    }
    std::vector<std::vector<std::size_t>> succ(k);
    std::vector<std::size_t> indegree(k, 0);
    for (const auto& [from, to] : g.edges) {
        if (!g.nodes.contains(from) || !g.nodes.contains(to)) continue;
        std::size_t a = comp_of[from.value];
        std::size_t b = comp_of[to.value];
        if (a == b) continue;
        succ[a].push_back(b);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (std::size_t b : s) ++indegree[b];
    }

    // Kahn's algorithm; among ready components the one holding the smallest index goes first.
    auto later = [&](std::size_t a, std::size_t b) { return min_member(comps[a]) > min_member(comps[b]); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
    for (std::size_t c = 0; c < k; ++c) {
        if (indegree[c] == 0) ready.push(c);
    }
    std::vector<ArgSet> order;
    order.reserve(k);
    while (!ready.empty()) {
        std::size_t c = ready.top();
        ready.pop();
        order.push_back(comps[c]);
        for (std::size_t b : succ[c]) {
            if (--indegree[b] == 0) ready.push(b);
        }
    }
    return order;
}

std::vector<Extension> enumerate_cuts(const Framework& f) {
    const std::vector<ArgSet> order = condense(dependency_graph(f));
    std::vector<Extension> cuts;
    Extension prefix;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        prefix |= order[i];
        cuts.push_back(prefix);
    }
    return cuts;
}

std::optional<Extension> best_cut(const Framework& f) {
    const std::size_t n = f.args().size();
    std::optional<Extension> best;
    auto key = [&](Extension a1) {
        long imbalance = std::labs(static_cast<long>(a1.size()) - static_cast<long>(n - a1.size()));
        return std::make_pair(imbalance, a1.size());
    };
    for (const Extension& cut : enumerate_cuts(f)) {
        if (!best || key(cut) < key(*best) || (key(cut) == key(*best) && cut < *best)) best = cut;
    }
    return best;
}

}  // namespace bsaf
