#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bsaf/combined_split.hpp"
#include "bsaf/core.hpp"
#include "bsaf/semantics.hpp"
#include "bsaf/split_common.hpp"

namespace bsaf {

/// splitmix64 stream; the same seed yields the same sequence on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability p.
    bool chance(double p);

private:
    std::uint64_t state_;
};

/// Seed of the i-th independent case derived from a campaign seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i);

struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t n_args = 6;
    double p_attack = 0.2;
    double p_support = 0.1;
    std::size_t max_tail = 2;
    /// Support tails only use arguments with a larger index than the head.
    bool support_dag = true;
};

/// Throws InvalidArgument on out-of-range fields.
void validate(const GenConfig& cfg);

/// Arguments a0..a{n-1}. For every head h and anchor t, an attack and a
/// support are each included with their probability; the tail is t plus
/// random extra members, 1 to max_tail in size.
Framework gen_random(const GenConfig& cfg);

/// A random framework together with an A1 that is a valid cut for `mode`.
/// A1 is a random non-trivial prefix of a0..a{n-1}; links that would cross
/// the cut in a forbidden direction are never generated. Needs n_args ≥ 2.
struct SplitInstance {
    Framework f;
    Extension a1;
};
SplitInstance gen_split_instance(const GenConfig& cfg, SplitMode mode);

enum class Verdict { Equal, SoundSubset, Violation };
std::string_view to_string(Verdict v);

struct DiffReport {
    Semantics semantics = Semantics::Admissible;
    SplitMode mode = SplitMode::Combined;
    Extension cut;
    ExtensionSet missing;  // oracle only
    ExtensionSet extra;    // split only
    Verdict verdict = Verdict::Equal;
};

/// Compares the split solve of `mode` with enumerate(f, sem).
DiffReport differential(const Framework& f, Extension a1, Semantics sem, SplitMode mode,
                        EnumerateOptions options = {});

/// Equal always passes; SoundSubset passes only where the split solve is
/// not guaranteed complete; Violation never does.
bool acceptable(const DiffReport& report);

struct BenchRecord {
    std::size_t n = 0;
    std::size_t cut_size = 0;
    Semantics semantics = Semantics::Admissible;
    double oracle_ms = 0;
    double split_ms = 0;
    std::size_t ext_count = 0;
};

/// Times enumerate() against the combined split solve. Throws Error when the
/// results disagree beyond what the semantics permits.
BenchRecord bench(const Framework& f, Extension a1, Semantics sem, EnumerateOptions options = {});
std::string_view bench_csv_header();
std::string to_csv(const BenchRecord& r);

struct CampaignConfig {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_args = 8;
    Semantics semantics = Semantics::Admissible;
    double p_attack = 0.2;
    double p_support = 0.15;
    std::size_t max_tail = 2;
};

struct CampaignFailure {
    std::uint64_t seed;
    std::string framework;
    DiffReport report;
};

struct CampaignResult {
    std::size_t cases = 0;
    std::size_t equal = 0;
    std::size_t sound_subset = 0;
    std::vector<CampaignFailure> failures;
};

/// Per case: one planted instance for each splitting mode, plus every split
/// finder cut of a free random frame under each mode that accepts it.
CampaignResult run_campaign(const CampaignConfig& cfg);

}  // namespace bsaf
