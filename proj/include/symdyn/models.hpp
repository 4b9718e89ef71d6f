#pragma once

// Bundled space models: the x/y system, the family of sequences
// W_1 0 W_2 0^2 W_3 0^3 ... over {0..m}, and the X_1 X_2 X_3 ... system with
// X_n = 1 0^n.

#include "symdyn/dynamics.hpp"
#include "symdyn/witness.hpp"

#include <string>

namespace symdyn::models {

using dynamics::SpaceModel;

// Generators x and y; limit points 0^inf, 1^inf, 10^inf.
SpaceModel xy_model(std::size_t orbit_depth = 10'000);
SpaceModel single_point_model(const SymbolicPoint& p, std::size_t orbit_depth = 10'000);

// Picks the symbols of each W_k of a family member.
struct Chooser {
    enum class Kind { Constant, Cyclic, Hashed };
    Kind kind = Kind::Cyclic;
    std::uint64_t seed = 0;

    // Symbol in [1, m] at index i of W_k for the given member.
    Symbol pick(unsigned m, std::uint64_t member, const BigInt& k, const BigInt& i) const;
};

std::string to_string(Chooser::Kind k);
Chooser::Kind parse_chooser(const std::string& name);

// W_k occupies [k(k-1), k^2 - 1] and the block 0^k occupies [k^2, k^2 + k - 1].
class FamilyMember final : public Generator {
public:
    FamilyMember(unsigned m, Chooser chooser, std::uint64_t member);

    unsigned alphabet_size() const override { return m_ + 1; }
    LeafRun leaf_at(const Position& q) const override;
    nlohmann::json descriptor() const override;
    std::string name() const override;

private:
    unsigned m_;
    Chooser chooser_;
    std::uint64_t member_;
};

SymbolicPoint family_member(unsigned m, Chooser chooser, std::uint64_t member);

// Members 0..count-1 plus 0^inf, with the zero-block schedule up to the
// sampled window.
SpaceModel example_family_model(unsigned m, Chooser chooser, std::size_t count, std::size_t orbit_depth = 10'000);

// Intervals [k^2, k^2 + k - 1] starting at or before limit.
std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_block_schedule(std::uint64_t limit);

struct IndependenceCheck {
    bool holds = true;
    std::uint64_t times_checked = 0;
    std::size_t members = 0;
    // First disagreement: time t and block length n.
    std::optional<std::pair<std::uint64_t, std::size_t>> counterexample;
};

// For all t <= horizon and n <= max_n: shift(member, t) in [0^n] for one
// generator iff for all of them.
IndependenceCheck member_independence(const SpaceModel& model, std::uint64_t horizon, std::size_t max_n);

// x = X_1 X_2 X_3 ..., X_k = 1 0^k starting at (k-1)(k+2)/2.
class BlockSequence final : public Generator {
public:
    unsigned alphabet_size() const override { return 2; }
    LeafRun leaf_at(const Position& q) const override;
    nlohmann::json descriptor() const override;
    std::string name() const override { return "x3"; }
};

SymbolicPoint block_sequence();
// z_n = X_1 .. X_n 0^inf
SymbolicPoint truncated_block_sequence(std::size_t n);
// Start of X_k.
Position block_start(std::size_t k);

// Generators x3, z_1..z_bound, 0^inf; limit points 0^k 1 0^inf for k <= bound.
SpaceModel evcty_example_model(std::size_t z_bound = 16, std::size_t orbit_depth = 10'000);

// O = [0], U = the x3-prefix of the given depth, V = [0^v_depth]; z_N in U
// sits in V at the start k of X_{N+1} while shift(x3, k) is in [1].
witness::WitnessCertificate witness_not_eqp_ex3(std::size_t u_depth, std::size_t v_depth);

// x, y, 0inf, 1inf, 10inf, closing:N, x3, z:N, member:K, ev:<pre>:<period>.
// In the ex2 and ex3 models "x" names the model's distinguished point.
SymbolicPoint parse_point(const std::string& text, const std::string& model = "s7");
SpaceModel model_by_name(const std::string& name, std::size_t orbit_depth = 10'000);

}  // namespace symdyn::models
