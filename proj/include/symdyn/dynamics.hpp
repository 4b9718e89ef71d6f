#pragma once

// Finite-horizon analysis of shift spaces given as the closure of a few
// generator orbits. The closure is uncountable, so every query runs over a
// sample: generator shifts up to an orbit depth plus declared limit points.
// All answers are lower approximations or evidence and carry their sampling
// parameters.

#include "symdyn/kernels.hpp"
#include "symdyn/symbolic_point.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symdyn::dynamics {

struct SpaceModel {
    std::string name;
    unsigned alphabet_size = 2;
    std::vector<SymbolicPoint> generators;
    std::vector<SymbolicPoint> limit_points;
    std::size_t orbit_depth_default = 10'000;
    // Closed position intervals that are all-zero in every generator. Only
    // filled by models with a member-independent zero schedule.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_block_schedule;

    void validate() const;
};

// D_k: pairs of points agreeing on their first k symbols.
struct EntourageDepth {
    std::size_t k = 1;

    explicit EntourageDepth(std::size_t depth);
};

struct SamplingInfo {
    std::string model;
    std::size_t orbit_depth = 0;
    std::size_t horizon = 0;
    std::vector<std::string> generators;
    std::vector<std::string> limit_points;
    std::size_t points_sampled = 0;
};

nlohmann::json to_json(const SamplingInfo& s);

struct Classification {
    std::uint64_t max_gap = 0;
    std::uint64_t longest_run = 0;
    std::uint64_t complement_count = 0;
};

struct HittingReport {
    std::vector<std::uint64_t> times;  // sorted, inside [1, horizon]
    std::uint64_t horizon = 0;
    std::uint64_t max_gap = 0;
    std::uint64_t longest_run = 0;
    std::uint64_t complement_count = 0;
    // One per time: the sampled point(s) realizing it.
    std::vector<std::vector<std::string>> witnesses;
    SamplingInfo sampling;
};

// Statistics over [1, horizon]. Gaps are measured between consecutive
// elements of {0} u times u {horizon}.
Classification classify(const std::vector<std::uint64_t>& times, std::uint64_t horizon);
Classification classify(const HittingReport& r);

// Lower approximation of N(U,V) = {n >= 1 : shift^n(U) meets V}.
HittingReport hitting_times(const SpaceModel& model, const Cylinder& U, const Cylinder& V, std::uint64_t horizon);
// Times at which two sampled points of U disagree on their first k symbols.
HittingReport sensitivity_times(const SpaceModel& model, const Cylinder& U, EntourageDepth D, std::uint64_t horizon);
// Times realizing both facts; the witnesses are joint.
HittingReport splitting_times(const SpaceModel& model, const Cylinder& U, const Cylinder& V, EntourageDepth D,
                              std::uint64_t horizon);

nlohmann::json to_json(const HittingReport& r);

enum class PairKind { EqP, EvP };
enum class VerdictStatus { Satisfied, ViolatedUpTo, Inconclusive };

std::string to_string(PairKind k);
std::string to_string(VerdictStatus s);

struct PairQuery {
    PairKind kind = PairKind::EvP;
    SymbolicPoint x = SymbolicPoint::fixed(0);
    SymbolicPoint y = SymbolicPoint::fixed(0);
    std::size_t o_depth = 1;
    std::size_t max_uv_depth = 4;
    std::uint64_t horizon = 10'000;
};

// Every V depth up to max_v_depth fails against U at this depth, witnessed
// by one time and one sampled point whose image leaves O.
struct PairViolation {
    std::size_t u_depth = 0;
    std::size_t max_v_depth = 0;
    std::uint64_t time = 0;
    std::string point;
    std::string image_prefix;
    std::string trigger;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    PairKind kind = PairKind::EvP;
    std::size_t u_depth = 0;
    std::size_t v_depth = 0;
    std::size_t depth = 0;  // max U/V depth tried
    std::size_t o_depth = 0;
    std::uint64_t horizon = 0;
    std::size_t pairs_tried = 0;
    std::vector<PairViolation> violations;
    SamplingInfo sampling;
};

nlohmann::json to_json(const Verdict& v);

// Precomputed evaluation of every (U depth, V depth) pair of one query.
class PairAnalysis {
public:
    PairAnalysis(const SpaceModel& model, const PairQuery& query);

    bool satisfied(std::size_t u_depth, std::size_t v_depth) const;
    // Tries pairs by max(dU, dV), then dU, then dV; the first satisfied wins.
    Verdict verdict() const;
    const PairQuery& query() const { return query_; }

private:
    PairQuery query_;
    std::vector<kernels::NeedEntry> needs_;   // index: U depth
    std::vector<PairViolation> violations_;  // index: U depth
    SamplingInfo sampling_;
};

Verdict check_pair(const SpaceModel& model, const PairQuery& query);

struct TrivialScan {
    // The depth-prefix of y stops recurring in x (no structural occurrence
    // past some checkpoint); hits holds the sampled time set for reference.
    bool eventually_empty_evidence = false;
    std::optional<std::uint64_t> last_hit;
    HittingReport hits;
};

TrivialScan trivial_pair_scan(const SpaceModel& model, const SymbolicPoint& x, const SymbolicPoint& y,
                              std::size_t depth, std::uint64_t horizon);

// Recurrence evidence for candidate in omega(p): the depth-prefix of the
// candidate occurs in p at a position >= N for N = horizon*i/8, i = 0..8.
// Occurrences are searched structurally past the horizon, bounded by a run
// budget.
struct OmegaEvidence {
    bool recurrent = false;
    std::vector<std::pair<std::uint64_t, std::optional<Position>>> checkpoints;  // (N, occurrence >= N)
};

OmegaEvidence omega_membership_evidence(const SymbolicPoint& p, const SymbolicPoint& candidate, std::size_t depth,
                                        std::uint64_t horizon, std::size_t run_budget = 100'000);

struct PeriodicCandidate {
    std::string word;
    std::uint64_t repetitions = 0;
    std::uint64_t repetition_cap = 0;  // max(8, horizon / |word|)
    bool survived = false;
    std::string found_in;
    std::optional<Position> position;
};

struct PeriodicScan {
    std::size_t max_period = 0;
    std::uint64_t horizon = 0;
    std::vector<PeriodicCandidate> candidates;
    std::vector<std::string> survivors;
};

PeriodicScan periodic_scan(const SpaceModel& model, std::size_t max_period, std::uint64_t horizon);

nlohmann::json to_json(const PeriodicScan& s);

}  // namespace symdyn::dynamics
