#include "symdyn/construction.hpp"

#include "symdyn/error.hpp"

#include <mutex>

namespace symdyn::construction {

LengthTable& LengthTable::shared() {
    static LengthTable table;
    return table;
}

void LengthTable::ensure_c(std::size_t n) {
    {
        std::shared_lock lock(mutex_);
        if (len_c_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    if (len_c_.empty()) {
        len_c_.emplace_back(2);
        cum_c_.emplace_back(2);
        one_part_.emplace_back(1);
    }
    while (len_c_.size() <= n) {
        const std::size_t k = len_c_.size();
        const BigInt& before = cum_c_.back();
        BigInt ones = pow_u(8, k) * before;
        BigInt len = ones + pow_u(2, k) * before;
        one_part_.push_back(std::move(ones));
        cum_c_.push_back(before + len);
        len_c_.push_back(std::move(len));
    }
}

void LengthTable::ensure_w(std::size_t n) {
    ensure_c(n + 1);
    {
        std::shared_lock lock(mutex_);
        if (len_w_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    while (len_w_.size() <= n) {
        const std::size_t k = len_w_.size();
        BigInt before = k == 0 ? BigInt(0) : cum_w_.back();
        BigInt len = before + cum_c_[k] + len_c_[k + 1];
        cum_w_.push_back(before + len);
        len_w_.push_back(std::move(len));
    }
}

const BigInt& LengthTable::len_c(std::size_t n) {
    ensure_c(n);
    std::shared_lock lock(mutex_);
    return len_c_[n];
}

const BigInt& LengthTable::cum_c(std::size_t n) {
    ensure_c(n);
    std::shared_lock lock(mutex_);
    return cum_c_[n];
}

const BigInt& LengthTable::one_part(std::size_t n) {
    require(n >= 1, ErrorKind::Precondition, "the 1-part is defined for C_n with n >= 1");
    ensure_c(n);
    std::shared_lock lock(mutex_);
    return one_part_[n];
}

const BigInt& LengthTable::len_q(std::size_t n) {
    require(n >= 1, ErrorKind::Precondition, "Q_n is defined for n >= 1");
    return len_c(n);
}

const BigInt& LengthTable::len_w(std::size_t n) {
    ensure_w(n);
    std::shared_lock lock(mutex_);
    return len_w_[n];
}

const BigInt& LengthTable::cum_w(std::size_t n) {
    ensure_w(n);
    std::shared_lock lock(mutex_);
    return cum_w_[n];
}

BigInt LengthTable::cum_c_before(std::size_t n) { return n == 0 ? BigInt(0) : cum_c(n - 1); }
BigInt LengthTable::cum_w_before(std::size_t n) { return n == 0 ? BigInt(0) : cum_w(n - 1); }

std::size_t LengthTable::c_block_at(const Position& q) {
    std::size_t k = 0;
    while (cum_c(k) <= q) ++k;
    return k;
}

std::size_t LengthTable::w_block_at(const Position& q) {
    std::size_t k = 0;
    while (cum_w(k) <= q) ++k;
    return k;
}

LengthSlice lengths(std::size_t n) {
    auto& t = LengthTable::shared();
    LengthSlice s;
    s.n = n;
    s.len_c = t.len_c(n);
    s.len_q = n == 0 ? BigInt(0) : t.len_q(n);
    s.len_w = t.len_w(n);
    s.cum_c = t.cum_c(n);
    s.cum_w = t.cum_w(n);
    return s;
}

RleWord c_runs(std::size_t n) {
    if (n == 0) return RleWord::literal("10");
    auto& t = LengthTable::shared();
    return RleWord::make(2, {Run{1, t.one_part(n)}, Run{0, t.len_c(n) - t.one_part(n)}});
}

RleWord q_word(std::size_t n) { return RleWord::repeat(0, LengthTable::shared().len_q(n)); }

RleWord c_block(std::size_t from, std::size_t to) {
    require(from <= to, ErrorKind::Precondition, "empty C block range");
    RleWord out(2);
    for (std::size_t i = from; i <= to; ++i) out = concat(out, c_runs(i));
    return out;
}

namespace {

void append_w(std::vector<Run>& runs, std::size_t n, std::size_t run_cap) {
    for (std::size_t i = 0; i < n; ++i) append_w(runs, i, run_cap);
    for (std::size_t i = 0; i <= n; ++i) {
        const RleWord c = c_runs(i);
        runs.insert(runs.end(), c.runs().begin(), c.runs().end());
    }
    runs.push_back(Run{0, LengthTable::shared().len_q(n + 1)});
    require(runs.size() <= run_cap, ErrorKind::MaterializationRefused,
            "W word exceeds " + std::to_string(run_cap) + " runs");
}

}  // namespace

RleWord w_word(std::size_t n, std::size_t run_cap) {
    std::vector<Run> runs;
    append_w(runs, n, run_cap);
    return RleWord::make(2, runs);
}

RleWord w_block(std::size_t n, std::size_t run_cap) {
    std::vector<Run> runs;
    for (std::size_t i = 0; i <= n; ++i) append_w(runs, i, run_cap);
    return RleWord::make(2, runs);
}

namespace {

// Leaf of C_0 C_1 C_2 ... at relative position q, placed at `base`.
LeafRun c_sequence_leaf(const Position& q, const Position& base) {
    auto& t = LengthTable::shared();
    std::size_t k = t.c_block_at(q);
    if (k == 0) return q == 0 ? LeafRun{1, base, base} : LeafRun{0, base + 1, base + 1};
    const BigInt& start = t.cum_c(k - 1);
    const BigInt& ones = t.one_part(k);
    if (q < start + ones) return LeafRun{1, base + start, base + start + ones - 1};
    return LeafRun{0, base + start + ones, base + t.cum_c(k) - 1};
}

// Leaf of W_k at relative position r, W_k placed at `base`. Descends through
// the W_0 .. W_{k-1} prefix until r lands in a closing segment.
LeafRun w_leaf(std::size_t k, Position r, Position base) {
    auto& t = LengthTable::shared();
    for (;;) {
        BigInt before = t.cum_w_before(k);
        if (r < before) {
            std::size_t i = t.w_block_at(r);
            BigInt skip = t.cum_w_before(i);
            r -= skip;
            base += skip;
            k = i;
            continue;
        }
        r -= before;
        base += before;
        const BigInt& closing_c = t.cum_c(k);
        if (r < closing_c) return c_sequence_leaf(r, base);
        return LeafRun{0, base + closing_c, base + closing_c + t.len_q(k + 1) - 1};
    }
}

LeafRun y_leaf(const Position& q) {
    auto& t = LengthTable::shared();
    std::size_t j = t.w_block_at(q);
    BigInt base = t.cum_w_before(j);
    return w_leaf(j, q - base, base);
}

class XGenerator final : public Generator {
public:
    unsigned alphabet_size() const override { return 2; }
    LeafRun leaf_at(const Position& q) const override { return c_sequence_leaf(q, 0); }
    nlohmann::json descriptor() const override { return {{"kind", "x"}, {"params", nlohmann::json::object()}}; }
    std::string name() const override { return "x"; }
};

class YGenerator final : public Generator {
public:
    unsigned alphabet_size() const override { return 2; }
    LeafRun leaf_at(const Position& q) const override { return y_leaf(q); }
    nlohmann::json descriptor() const override { return {{"kind", "y"}, {"params", nlohmann::json::object()}}; }
    std::string name() const override { return "y"; }
};

class ClosingGenerator final : public Generator {
public:
    explicit ClosingGenerator(std::size_t n) : n_(n) {}

    unsigned alphabet_size() const override { return 2; }

    LeafRun leaf_at(const Position& q) const override {
        auto& t = LengthTable::shared();
        const BigInt& head = t.cum_c(n_);
        if (q < head) return c_sequence_leaf(q, 0);
        const BigInt& tail = t.cum_c(n_ + 1);
        if (q < tail) return LeafRun{0, head, tail - 1};
        // W_{n+1} W_{n+2} ... is y from |W_0..W_n| on.
        const BigInt& in_y = t.cum_w(n_);
        LeafRun leaf = y_leaf(q - tail + in_y);
        leaf.start += tail - in_y;
        if (leaf.end) *leaf.end += tail - in_y;
        return leaf;
    }

    nlohmann::json descriptor() const override {
        return {{"kind", "closing"}, {"params", {{"n", n_}}}};
    }
    std::string name() const override { return "z'_" + std::to_string(n_); }

private:
    std::size_t n_;
};

}  // namespace

SymbolicPoint point_x() {
    static const auto gen = std::make_shared<XGenerator>();
    return SymbolicPoint(gen);
}

SymbolicPoint point_y() {
    static const auto gen = std::make_shared<YGenerator>();
    return SymbolicPoint(gen);
}

SymbolicPoint closing_point(std::size_t n) { return SymbolicPoint(std::make_shared<ClosingGenerator>(n)); }

Position closing_offset_in_y(std::size_t n) {
    // The closing segment of W_n sits right after the W_0 .. W_{n-1} prefix
    // of W_n, which itself starts at |W_0 .. W_{n-1}|.
    return 2 * LengthTable::shared().cum_w_before(n);
}

std::optional<Position> tau(const SymbolicPoint& p, const Cylinder& c, const Position& horizon) {
    return find_first(p.runs(), c.word, horizon);
}

InequalityCheck verify_claim1(std::size_t n) {
    auto& t = LengthTable::shared();
    InequalityCheck out;
    out.lhs = 6 * pow_u(8, n + 1) * t.len_c(n + 1);
    out.rhs = t.cum_w(n) + t.cum_c(n + 1) + 2 * t.len_w(n);
    out.holds = out.lhs >= out.rhs;
    return out;
}

InequalityCheck verify_corollary(std::size_t n, std::size_t k) {
    auto& t = LengthTable::shared();
    InequalityCheck out;
    out.lhs = 6 * pow_u(8, n + 1 + k) * t.len_c(n + 1 + k);
    BigInt tail = 0;
    for (std::size_t i = 0; i < k; ++i) tail += t.len_w(n + 1 + i);
    out.rhs = t.cum_w(n + k) + t.cum_c(n + 1 + k) + tail;
    out.holds = out.lhs >= out.rhs;
    return out;
}

OnePartCheck verify_one_part_remark(std::size_t n) {
    auto& t = LengthTable::shared();
    OnePartCheck out;
    out.one_part_len = t.one_part(n + 2);
    BigInt unit = pow_u(8, n + 1) * t.len_c(n + 1);
    out.claim1_lhs = 6 * unit;
    out.bound = out.claim1_lhs + 2 * unit;
    out.holds = out.one_part_len >= out.bound && out.bound > out.claim1_lhs;
    return out;
}

std::vector<HittingOrderRow> verify_hitting_order(std::size_t n, std::size_t k_max) {
    require(n < k_max, ErrorKind::Precondition,
            "need n < k_max, got n=" + std::to_string(n) + " k_max=" + std::to_string(k_max));
    auto& t = LengthTable::shared();
    const SymbolicPoint x = point_x();
    const SymbolicPoint z = closing_point(n);
    std::vector<HittingOrderRow> rows;
    for (std::size_t k = n + 1; k <= k_max; ++k) {
        HittingOrderRow row;
        row.k = k;
        const BigInt before = t.cum_c(k - 1);
        row.lemma_bound = 6 * pow_u(8, k - 1) * t.len_c(k - 1);
        row.x_zero_part_entry = before + t.one_part(k);

        auto searched_x = tau(x, Cylinder(c_runs(k)), before);
        auto zero_part = RleWord::repeat(0, t.len_c(k) - t.one_part(k));
        auto searched_entry = tau(x, Cylinder(zero_part), row.x_zero_part_entry);
        row.tau_x_ck = searched_x.value_or(-1);
        row.closed_form_agrees = searched_x == before && searched_entry == row.x_zero_part_entry;

        row.tau_z_qkc0 = tau(z, Cylinder(concat(q_word(k), c_runs(0))), row.x_zero_part_entry);
        if (!searched_x || !row.tau_z_qkc0) {
            row.status = HittingStatus::Inconclusive;
        } else {
            bool chain = row.tau_x_ck <= *row.tau_z_qkc0 && *row.tau_z_qkc0 <= row.x_zero_part_entry &&
                         *row.tau_z_qkc0 <= row.lemma_bound && row.lemma_bound <= row.x_zero_part_entry;
            row.status = chain && row.closed_form_agrees ? HittingStatus::Holds : HittingStatus::Fails;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace symdyn::construction
