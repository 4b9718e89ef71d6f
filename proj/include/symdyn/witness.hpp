#pragma once

// Closed-form refutation data for the pair conditions of the x/y system,
// each reduced to a list of cylinder-membership facts that are checked by
// direct symbol resolution at (possibly astronomically large) times.

#include "symdyn/symbolic_point.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symdyn::witness {

enum class Claim {
    NotEvP_x_10inf,
    NotEqP_y_0inf,
    NotEqP_y_1inf,
    NotEqP_y_general,
    NotEqP_ex3_x_0inf,
};

std::string to_string(Claim c);

struct MembershipFact {
    std::string label;
    SymbolicPoint point;
    // Evaluate at shift(point, time) rather than at the point itself.
    bool at_time = true;
    RleWord cylinder;
    bool expected = true;
};

struct WitnessCertificate {
    Claim claim = Claim::NotEvP_x_10inf;
    std::vector<std::pair<std::string, BigInt>> parameters;
    RleWord O, U, V;
    SymbolicPoint comparison_point = SymbolicPoint::fixed(0);
    Position time;
    std::vector<MembershipFact> facts;
};

struct CheckedFact {
    std::string label;
    bool expected = true;
    bool observed = true;
};

struct Validation {
    bool valid = false;
    std::vector<CheckedFact> checked_facts;
};

Validation validate_certificate(const WitnessCertificate& w);

// Same certificate with its time moved by delta (must stay >= 0).
WitnessCertificate perturb_time(const WitnessCertificate& w, const BigInt& delta);

// O=[10], U=[C_0..C_m], V=[10^l], comparison point C_0..C_m Q_{m+1} W_{m+1}...
WitnessCertificate witness_not_evp_x_10inf(std::size_t m, std::size_t l);
// target is the fixed point's symbol (0 or 1).
WitnessCertificate witness_not_eqp_y_fixed(Symbol target, std::size_t n);
// p = prefix 0^infinity; O=[prefix], V=[p_0..p_n].
WitnessCertificate witness_not_eqp_y_general(const RleWord& prefix, std::size_t n);

nlohmann::json to_json(const WitnessCertificate& w);
nlohmann::json to_json(const Validation& v);

}  // namespace symdyn::witness
