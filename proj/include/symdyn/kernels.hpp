#pragma once

// Data-parallel loops over materialized symbol windows. Each kernel has a
// straightforward serial reference (kept for testing and benchmarking) and
// an OpenMP version used by the dynamics module. Results are identical and
// independent of the thread schedule.

#include "symdyn/rle_word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace symdyn::kernels {

using Text = std::span<const Symbol>;

struct Sample {
    std::uint32_t source = 0;
    std::uint64_t offset = 0;

    friend bool operator==(const Sample&, const Sample&) = default;
};

// A sampled point is texts[source] read from offset on.
struct SampleSet {
    std::vector<Text> texts;
    std::vector<Sample> samples;
};

// Longest common prefix of a and b, capped.
std::uint32_t lcp(Text a, Text b, std::uint32_t cap);

// For n in [1, horizon]: the first sample (in sample order) whose image
// after n shifts starts with `pattern`, if any.
using HitWitnesses = std::vector<std::optional<Sample>>;

// For n in [1, horizon]: two samples whose images after n shifts differ in
// their first k symbols, if any.
using SplitWitnesses = std::vector<std::optional<std::pair<Sample, Sample>>>;

// For a U depth d: the largest trigger depth among times n in [1, horizon]
// at which some sample of level >= d fails to start with the first o_depth
// symbols of the reference. A (d, dV) pair is violated iff need >= dV.
struct NeedEntry {
    std::uint32_t need = 0;
    bool violated = false;
    std::uint64_t time = 0;         // least n attaining need
    std::uint32_t violator = 0;     // first sample (index into samples) failing O at time
    std::uint32_t trigger = 0;      // EqP: first sample attaining need at time
};

// Trigger depths: for EvP, trigger_text is the x point's window and the
// trigger at n is lcp(trigger_text[n..], reference); for EqP (empty
// trigger_text) it is the max over the samples of level >= d.
struct PairProblem {
    const SampleSet* set = nullptr;
    std::vector<std::uint32_t> level;  // per sample, >= 1, capped at levels
    std::uint32_t levels = 0;
    Text reference;
    std::uint32_t o_depth = 1;
    std::optional<Text> trigger_text;
    std::size_t horizon = 0;
};

struct ZeroViolation {
    std::uint64_t time = 0;
    std::uint64_t offset = 0;

    friend bool operator==(const ZeroViolation&, const ZeroViolation&) = default;
};

namespace serial {

// min(cap, lcp(text[i..], reference)) for every i.
std::vector<std::uint32_t> lcp_profile(Text text, Text reference, std::uint32_t cap);
HitWitnesses hits(const SampleSet& set, Text pattern, std::size_t horizon);
SplitWitnesses splits(const SampleSet& set, std::size_t k, std::size_t horizon);
// Index d in [0, levels]; entry 0 is unused.
std::vector<NeedEntry> pair_needs(const PairProblem& p);
// Times l in [1, horizon] with x[l..l+n) = 0^n and some offset j with
// y[j+l..j+l+n) != 0^n.
std::vector<ZeroViolation> zero_block_violations(Text x, Text y, const std::vector<std::uint64_t>& offsets,
                                                 std::size_t n, std::size_t horizon);

}  // namespace serial

namespace parallel {

// min(cap, lcp(text[i..], reference)) for every i.
std::vector<std::uint32_t> lcp_profile(Text text, Text reference, std::uint32_t cap);
HitWitnesses hits(const SampleSet& set, Text pattern, std::size_t horizon);
SplitWitnesses splits(const SampleSet& set, std::size_t k, std::size_t horizon);
// Index d in [0, levels]; entry 0 is unused.
std::vector<NeedEntry> pair_needs(const PairProblem& p);
std::vector<ZeroViolation> zero_block_violations(Text x, Text y, const std::vector<std::uint64_t>& offsets,
                                                 std::size_t n, std::size_t horizon);

}  // namespace parallel

// Lengths of the runs of `symbol` starting at each index.
std::vector<std::uint32_t> run_lengths(Text text, Symbol symbol);

}  // namespace symdyn::kernels
