#include "bsaf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>

#include "bsaf/attack_split.hpp"
#include "bsaf/io.hpp"
#include "bsaf/split_finder.hpp"
#include "bsaf/support_split.hpp"

namespace bsaf {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

bool SplitMix64::chance(double p) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i) {
    SplitMix64 mix(seed ^ (i * 0xd1b54a32d192ed03ULL));
    return mix.next();
}

void validate(const GenConfig& cfg) {
    if (cfg.n_args < 1 || cfg.n_args > kMaxArguments - 3) {
        throw InvalidArgument("n_args must be in [1, " + std::to_string(kMaxArguments - 3) + "]");
    }
    if (!(cfg.p_attack >= 0 && cfg.p_attack <= 1) || !(cfg.p_support >= 0 && cfg.p_support <= 1)) {
        throw InvalidArgument("probabilities must be in [0, 1]");
    }
    if (cfg.max_tail < 1) throw InvalidArgument("max_tail must be at least 1");
}

namespace {

// Pools of admissible tail members for a link with the given head.
using PoolFn = ArgSet (*)(ArgSet a1, ArgSet all, ArgId head, bool attack, SplitMode mode);

ArgSet free_pool(ArgSet, ArgSet all, ArgId, bool, SplitMode) { return all; }

ArgSet cut_pool(ArgSet a1, ArgSet all, ArgId head, bool attack, SplitMode mode) {
    const ArgSet a2 = all - a1;
    const bool in_a1 = a1.contains(head);
    if (attack) {
        if (in_a1) return a1;
        return mode == SplitMode::Support ? a2 : all;
    }
    if (!in_a1) return a2;
    return mode == SplitMode::Attack ? a1 : all;
}

ArgId pick(SplitMix64& rng, ArgSet pool) {
    std::uint64_t k = rng.below(pool.size());
    auto it = pool.begin();
    while (k-- > 0) ++it;
    return *it;
}

Framework generate(const GenConfig& cfg, SplitMix64& rng, ArgSet a1, SplitMode mode, PoolFn pool_of) {
    validate(cfg);
    auto table = std::make_shared<ArgumentTable>();
    for (std::size_t i = 0; i < cfg.n_args; ++i) table->add("a" + std::to_string(i));
    const ArgSet all = ArgSet::first_n(cfg.n_args);

    auto tail_from = [&](ArgId anchor, ArgSet pool) {
        ArgSet tail{anchor};
        const std::size_t want = rng.between(1, cfg.max_tail);
        pool.erase(anchor);
        while (tail.size() < want && !pool.empty()) {
            ArgId extra = pick(rng, pool);
            tail.insert(extra);
            pool.erase(extra);
        }
        return tail;
    };

    std::vector<Link> attacks;
    std::vector<Link> supports;
    for (ArgId h : all) {
        const ArgSet att_pool = pool_of(a1, all, h, true, mode);
        ArgSet sup_pool = pool_of(a1, all, h, false, mode);
        sup_pool.erase(h);
        if (cfg.support_dag) sup_pool -= ArgSet::first_n(h.value + 1);
        for (ArgId t : all) {
            if (rng.chance(cfg.p_attack) && att_pool.contains(t)) attacks.push_back(Link{tail_from(t, att_pool), h});
            if (rng.chance(cfg.p_support) && sup_pool.contains(t)) supports.push_back(Link{tail_from(t, sup_pool), h});
        }
    }
    return Framework(std::move(table), all, std::move(attacks), std::move(supports));
}

}  // namespace

Framework gen_random(const GenConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return generate(cfg, rng, ArgSet{}, SplitMode::Combined, free_pool);
}

SplitInstance gen_split_instance(const GenConfig& cfg, SplitMode mode) {
    if (cfg.n_args < 2) throw InvalidArgument("a split instance needs at least two arguments");
    SplitMix64 rng(cfg.seed);
    const Extension a1 = ArgSet::first_n(rng.between(1, cfg.n_args - 1));
    return SplitInstance{generate(cfg, rng, a1, mode, cut_pool), a1};
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::SoundSubset: return "sound-subset";
        case Verdict::Violation: return "violation";
    }
    return "?";
}

DiffReport differential(const Framework& f, Extension a1, Semantics sem, SplitMode mode, EnumerateOptions options) {
    DiffReport report;
    report.semantics = sem;
    report.mode = mode;
    report.cut = a1;
    const ExtensionSet split = solve_split(mode, f, a1, sem, options).extensions;
    const ExtensionSet oracle = enumerate(f, sem, options);
    std::set_difference(oracle.begin(), oracle.end(), split.begin(), split.end(),
                        std::inserter(report.missing, report.missing.end()));
    std::set_difference(split.begin(), split.end(), oracle.begin(), oracle.end(),
                        std::inserter(report.extra, report.extra.end()));
    if (!report.extra.empty()) {
        report.verdict = Verdict::Violation;
    } else if (!report.missing.empty()) {
        report.verdict = Verdict::SoundSubset;
    } else {
        report.verdict = Verdict::Equal;
    }
    return report;
}

bool acceptable(const DiffReport& report) {
    switch (report.verdict) {
        case Verdict::Equal: return true;
        case Verdict::SoundSubset: return !split_is_complete(report.mode, report.semantics);
        case Verdict::Violation: return false;
    }
    return false;
}

BenchRecord bench(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options) {
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

    const auto t0 = clock::now();
    const ExtensionSet oracle = enumerate(f, sem, options);
    const auto t1 = clock::now();
    const ExtensionSet split = solve_split(f, a1, sem, options).extensions;
    const auto t2 = clock::now();

    const bool subset = std::includes(oracle.begin(), oracle.end(), split.begin(), split.end());
    if (!subset || (split_is_complete(SplitMode::Combined, sem) && split.size() != oracle.size())) {
        throw Error("split solve disagrees with the oracle: " + std::to_string(split.size()) + " vs " +
                    std::to_string(oracle.size()) + " extensions");
    }
    return BenchRecord{f.args().size(), a1.size(), sem, ms(t1 - t0), ms(t2 - t1), oracle.size()};
}

std::string_view bench_csv_header() { return "n,cut_size,semantics,oracle_ms,split_ms,ext_count"; }

std::string to_csv(const BenchRecord& r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%s,%.3f,%.3f,%zu", r.n, r.cut_size, std::string(to_string(r.semantics)).c_str(),
                  r.oracle_ms, r.split_ms, r.ext_count);
    return buf;
}

namespace {

bool accepts(const Framework& f, Extension a1, SplitMode mode) {
    try {
        switch (mode) {
            case SplitMode::Attack: derive_attack_splitting(f, a1); break;
            case SplitMode::Support: derive_support_splitting(f, a1); break;
            case SplitMode::Combined: derive_splitting(f, a1); break;
        }
        return true;
    } catch (const InvalidCut&) {
        return false;
    }
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    if (cfg.max_args < 2) throw InvalidArgument("max_args must be at least 2");
    CampaignResult result;
    auto record = [&](std::uint64_t seed, const Framework& f, const DiffReport& r) {
        ++result.cases;
        if (r.verdict == Verdict::Equal) ++result.equal;
        if (r.verdict == Verdict::SoundSubset) ++result.sound_subset;
        if (!acceptable(r)) result.failures.push_back(CampaignFailure{seed, serialize_framework(f), r});
    };
    constexpr SplitMode kModes[] = {SplitMode::Attack, SplitMode::Support, SplitMode::Combined};

    for (std::size_t i = 0; i < cfg.count; ++i) {
        const std::uint64_t seed = case_seed(cfg.seed, i);
        SplitMix64 rng(seed);
        GenConfig gen{rng.next(), static_cast<std::size_t>(rng.between(2, cfg.max_args)), cfg.p_attack,
                      cfg.p_support, cfg.max_tail, true};
        for (SplitMode mode : kModes) {
            const SplitInstance inst = gen_split_instance(gen, mode);
            record(gen.seed, inst.f, differential(inst.f, inst.a1, cfg.semantics, mode));
        }
        const Framework f = gen_random(gen);
        for (const Extension& cut : enumerate_cuts(f)) {
            for (SplitMode mode : kModes) {
                if (accepts(f, cut, mode)) record(gen.seed, f, differential(f, cut, cfg.semantics, mode));
            }
        }
    }
    return result;
}

}  // namespace bsaf
