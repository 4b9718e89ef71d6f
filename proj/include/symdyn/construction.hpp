#pragma once

// The recursive word families C_n, Q_n, W_n, the points x = C_0 C_1 C_2 ...
// and y = W_0 W_1 W_2 ..., their exact length arithmetic, and first-hitting
// times.
//
//   C_0 = 10,  C_n = 1^(8^n |C_0..C_{n-1}|) 0^(2^n |C_0..C_{n-1}|)
//   Q_n = 0^|C_n|
//   W_0 = C_0 Q_1,  W_n = W_0 .. W_{n-1} C_0 .. C_n Q_{n+1}

#include "symdyn/symbolic_point.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <vector>

namespace symdyn::construction {

// Memoized exact lengths. Fills are idempotent and guarded, so one shared
// table serves concurrent readers.
class LengthTable {
public:
    static LengthTable& shared();

    const BigInt& len_c(std::size_t n);
    const BigInt& cum_c(std::size_t n);
    // Length of the 1-part of C_n (n >= 1): 8^n |C_0..C_{n-1}|.
    const BigInt& one_part(std::size_t n);
    const BigInt& len_q(std::size_t n);
    const BigInt& len_w(std::size_t n);
    const BigInt& cum_w(std::size_t n);
    // |C_0..C_{n-1}| and |W_0..W_{n-1}|, zero for n = 0.
    BigInt cum_c_before(std::size_t n);
    BigInt cum_w_before(std::size_t n);

    // Index k of the block containing q in C_0 C_1 ... (resp. W_0 W_1 ...).
    std::size_t c_block_at(const Position& q);
    std::size_t w_block_at(const Position& q);

private:
    void ensure_c(std::size_t n);
    void ensure_w(std::size_t n);

    std::shared_mutex mutex_;
    std::deque<BigInt> len_c_;
    std::deque<BigInt> cum_c_;
    std::deque<BigInt> one_part_;
    std::deque<BigInt> len_w_;
    std::deque<BigInt> cum_w_;
};

struct LengthSlice {
    std::size_t n = 0;
    BigInt len_c, len_q, len_w, cum_c, cum_w;
};
// len_q is reported as |Q_n| for n >= 1 and 0 for n = 0 (Q_0 is undefined).
LengthSlice lengths(std::size_t n);

RleWord c_runs(std::size_t n);
RleWord q_word(std::size_t n);
// C_from .. C_to
RleWord c_block(std::size_t from, std::size_t to);
// W_n built run by run; refuses beyond run_cap runs.
RleWord w_word(std::size_t n, std::size_t run_cap = kDefaultMaterializationCap);
// W_0 .. W_n
RleWord w_block(std::size_t n, std::size_t run_cap = kDefaultMaterializationCap);

SymbolicPoint point_x();
SymbolicPoint point_y();
// z' = C_0 .. C_n Q_{n+1} W_{n+1} W_{n+2} ...
SymbolicPoint closing_point(std::size_t n);
// Where closing_point(n) sits in the orbit of y.
Position closing_offset_in_y(std::size_t n);

// Least t in [0, horizon] with shift(p, t) in c. Note t = 0 is allowed here,
// unlike the hitting-time sets of the dynamics module which start at 1.
std::optional<Position> tau(const SymbolicPoint& p, const Cylinder& c, const Position& horizon);

struct InequalityCheck {
    bool holds = false;
    BigInt lhs;
    BigInt rhs;
};

// 6 * 8^(n+1) |C_{n+1}|  >=  |W_0..W_n C_0..C_{n+1}| + 2|W_n|
InequalityCheck verify_claim1(std::size_t n);
// 6 * 8^(n+1+k) |C_{n+1+k}|  >=  |W_0..W_{n+k} C_0..C_{n+1+k}| + sum_{i<k} |W_{n+1+i}|
InequalityCheck verify_corollary(std::size_t n, std::size_t k);

struct OnePartCheck {
    bool holds = false;
    BigInt one_part_len;  // 8^(n+2) |C_0..C_{n+1}|
    BigInt claim1_lhs;    // 6 * 8^(n+1) |C_{n+1}|
    BigInt bound;         // claim1_lhs + 2 * 8^(n+1) |C_{n+1}|
};
OnePartCheck verify_one_part_remark(std::size_t n);

enum class HittingStatus { Holds, Fails, Inconclusive };

struct HittingOrderRow {
    std::size_t k = 0;
    BigInt tau_x_ck;            // first entry of x into [C_k]
    std::optional<BigInt> tau_z_qkc0;  // first entry of closing_point(n) into [Q_k C_0]
    BigInt lemma_bound;         // 6 * 8^(k-1) |C_{k-1}|
    BigInt x_zero_part_entry;   // first entry of x into [0^(2^k |C_0..C_{k-1}|)]
    bool closed_form_agrees = false;  // searched tau_x and entry match their closed forms
    HittingStatus status = HittingStatus::Inconclusive;
};

// Rows for k in (n, k_max]. Checks tau_x <= tau_z <= x_zero_part_entry and
// tau_z <= lemma_bound.
std::vector<HittingOrderRow> verify_hitting_order(std::size_t n, std::size_t k_max);

struct EvidenceViolation {
    std::uint64_t time = 0;    // l with shift(x, l) in V
    std::uint64_t offset = 0;  // j with shift(y, j) in U but shift(y, j + l) not in O
};

struct EvidenceReport {
    std::size_t n = 0;
    std::uint64_t time_horizon = 0;
    std::uint64_t orbit_depth = 0;
    std::uint64_t times_checked = 0;   // l <= horizon with shift(x, l) in V
    std::uint64_t points_checked = 0;  // offsets j <= orbit depth with shift(y, j) in U
    std::uint64_t violation_count = 0;
    std::vector<EvidenceViolation> violations;  // first 100
};

// U = [C_0..C_n], V = O = [0^n]. Checks every sampled z = shift(y, j) in U
// against every trigger time l in [1, horizon] of x.
EvidenceReport check_evp_x_0inf(std::size_t n, std::uint64_t time_horizon, std::uint64_t orbit_depth);

nlohmann::json to_json(const EvidenceReport& r);

}  // namespace symdyn::construction
