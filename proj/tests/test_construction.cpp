#include "oracle.hpp"
#include "support.hpp"
#include "symdyn/construction.hpp"
#include "symdyn/witness.hpp"

#include <doctest.h>

using namespace symdyn;
using namespace symdyn::construction;

namespace {

// Lengths straight from the definitions, kept apart from LengthTable.
struct BigLengths {
    std::vector<BigInt> c, w;

    explicit BigLengths(std::size_t n_max) {
        BigInt cum = 2;
        c.push_back(2);
        for (std::size_t n = 1; n <= n_max + 2; ++n) {
            c.push_back((pow_u(8, n) + pow_u(2, n)) * cum);
            cum += c.back();
        }
        for (std::size_t n = 0; n <= n_max + 1; ++n) {
            BigInt len = 0;
            for (std::size_t i = 0; i < n; ++i) len += w[i];
            for (std::size_t i = 0; i <= n; ++i) len += c[i];
            w.push_back(len + c[n + 1]);
        }
    }
    BigInt sum_c(std::size_t to) const {
        BigInt s = 0;
        for (std::size_t i = 0; i <= to; ++i) s += c[i];
        return s;
    }
    BigInt sum_w(std::size_t to) const {
        BigInt s = 0;
        for (std::size_t i = 0; i <= to; ++i) s += w[i];
        return s;
    }
};

Cylinder cyl(const std::string& digits) { return Cylinder(RleWord::literal(digits)); }

}  // namespace

TEST_CASE("word runs") {
    CHECK(c_runs(1).runs() == std::vector<Run>{{1, 16}, {0, 4}});
    CHECK(c_runs(2).runs() == std::vector<Run>{{1, 1408}, {0, 88}});
    CHECK(c_runs(0).length() == 2);
    CHECK(c_runs(2).length() == 1496);
    CHECK(c_runs(2).symbol_at(1495) == 0);
    CHECK(error_kind([] { q_word(0); }) == ErrorKind::Precondition);
}

TEST_CASE("lengths match expanded words for n <= 3") {
    // W_3 ends in Q_4 of about 3.2e9 zeros, so it is expanded up to that
    // block and the zeros are counted from the expanded C_0..C_3.
    const auto c = oracle::c_words(3);
    auto w = oracle::w_words(2);
    std::size_t cum_c = 0;
    for (const auto& ci : c) cum_c += ci.size();
    const std::size_t q4 = ((std::size_t{1} << 12) + 16) * cum_c;
    std::string w3_head = w[0] + w[1] + w[2];
    for (const auto& ci : c) w3_head += ci;
    std::size_t cum_w = 0;
    cum_c = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
        cum_c += c[n].size();
        const std::size_t len_w = n < 3 ? w[n].size() : w3_head.size() + q4;
        cum_w += len_w;
        const auto s = lengths(n);
        CHECK(s.len_c == c[n].size());
        CHECK(s.cum_c == cum_c);
        CHECK(s.len_w == len_w);
        CHECK(s.cum_w == cum_w);
        CHECK(s.len_q == (n == 0 ? 0 : c[n].size()));
        CHECK(c_runs(n).to_string(10'000'000) == c[n]);
        if (n <= 2) CHECK(w_word(n).to_string(10'000'000) == w[n]);
    }
}

TEST_CASE("lengths match the independent recurrence up to n = 70") {
    const BigLengths ref(70);
    for (std::size_t n = 0; n <= 70; ++n) {
        const auto s = lengths(n);
        CHECK(s.len_c == ref.c[n]);
        CHECK(s.len_w == ref.w[n]);
        CHECK(s.cum_c == ref.sum_c(n));
        CHECK(s.cum_w == ref.sum_w(n));
    }
    CHECK(fits_u64(lengths(5).cum_c));
    CHECK_FALSE(fits_u64(lengths(6).len_c));
}

TEST_CASE("claim1 values") {
    auto r0 = verify_claim1(0);
    CHECK(r0.lhs == 960);
    CHECK(r0.rhs == 88);
    CHECK(r0.holds);
    auto r1 = verify_claim1(1);
    CHECK(r1.lhs == 574464);
    CHECK(r1.rhs == 6160);
    const BigLengths ref(66);
    for (std::size_t n = 0; n <= 64; ++n) {
        const auto r = verify_claim1(n);
        CHECK(r.holds);
        CHECK(r.lhs == 6 * pow_u(8, n + 1) * ref.c[n + 1]);
        CHECK(r.rhs == ref.sum_w(n) + ref.sum_c(n + 1) + 2 * ref.w[n]);
    }
}

TEST_CASE("corollary and one-part remark") {
    const BigLengths ref(24);
    for (std::size_t n = 0; n <= 20; ++n)
        for (std::size_t k = 0; n + k <= 20; ++k) {
            const auto r = verify_corollary(n, k);
            CHECK(r.holds);
            BigInt rhs = ref.sum_w(n + k) + ref.sum_c(n + 1 + k);
            for (std::size_t i = 0; i < k; ++i) rhs += ref.w[n + 1 + i];
            CHECK(r.rhs == rhs);
            CHECK(r.lhs == 6 * pow_u(8, n + 1 + k) * ref.c[n + 1 + k]);
        }
    auto o0 = verify_one_part_remark(0);
    CHECK(o0.one_part_len == 1408);
    CHECK(o0.claim1_lhs == 960);
    CHECK(o0.holds);
    for (std::size_t n = 0; n <= 64; ++n) CHECK(verify_one_part_remark(n).holds);
}

TEST_CASE("tau values are minimal") {
    const std::string xs = oracle::x_prefix(4000), ys = oracle::y_prefix(4000);
    const auto c = oracle::c_words(2);
    CHECK(tau(point_x(), Cylinder(c_runs(2)), 10'000) == Position(22));
    CHECK(tau(point_y(), Cylinder(concat(q_word(1), c_runs(0))), 10'000) == Position(2));
    CHECK(tau(point_x(), cyl("0000"), 10'000) == Position(18));
    CHECK(oracle::naive_find(xs, c[2]) == std::size_t{22});
    CHECK(oracle::naive_find(ys, std::string(20, '0') + "10") == std::size_t{2});
    CHECK(oracle::naive_find(xs, "0000") == std::size_t{18});
    for (std::size_t t = 0; t < 22; ++t) CHECK_FALSE(point_x().shift(t).in_cylinder(c_runs(2)));
    for (std::size_t t = 0; t < 18; ++t) CHECK_FALSE(point_x().shift(t).in_cylinder(RleWord::literal("0000")));
    for (std::size_t t = 0; t < 2; ++t) CHECK_FALSE(point_y().shift(t).in_cylinder(concat(q_word(1), c_runs(0))));
    CHECK(tau(point_x(), cyl("0000"), 17) == std::nullopt);
    CHECK(tau(point_x(), cyl("1"), 0) == Position(0));
}

TEST_CASE("tau agrees with naive search on short patterns") {
    const std::string xs = oracle::x_prefix(50'000), ys = oracle::y_prefix(50'000);
    for (unsigned bits = 1; bits < 64; ++bits) {
        for (std::size_t len = 1; len <= 6; ++len) {
            std::string pat;
            for (std::size_t i = 0; i < len; ++i) pat += static_cast<char>('0' + ((bits >> i) & 1));
            const auto fx = oracle::naive_find(xs.substr(0, 40'000 + len), pat);
            const auto fy = oracle::naive_find(ys.substr(0, 40'000 + len), pat);
            const auto tx = tau(point_x(), cyl(pat), 40'000);
            const auto ty = tau(point_y(), cyl(pat), 40'000);
            CHECK(tx.has_value() == fx.has_value());
            if (fx && tx) CHECK(*tx == *fx);
            CHECK(ty.has_value() == fy.has_value());
            if (fy && ty) CHECK(*ty == *fy);
        }
    }
}

TEST_CASE("closing points") {
    CHECK(closing_point(1).in_cylinder(concat({c_runs(0), c_runs(1), q_word(2)})));
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(eq_up_to(closing_point(n), point_y().shift(closing_offset_in_y(n)), 20'000));
        CHECK(eq_up_to(closing_point(n), point_x(), lengths(n).cum_c));
        CHECK_FALSE(eq_up_to(closing_point(n), point_x(), lengths(n).cum_c + 1));
    }
}

TEST_CASE("hitting order chain") {
    const auto rows = verify_hitting_order(1, 6);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CHECK(r.status == HittingStatus::Holds);
        CHECK(r.closed_form_agrees);
        REQUIRE(r.tau_z_qkc0.has_value());
        CHECK(r.tau_x_ck <= *r.tau_z_qkc0);
        CHECK(*r.tau_z_qkc0 <= r.x_zero_part_entry);
        CHECK(*r.tau_z_qkc0 <= r.lemma_bound);
    }
    CHECK(rows.front().k == 2);
    CHECK(rows.front().tau_x_ck == 22);
    CHECK(error_kind([] { verify_hitting_order(3, 3); }) == ErrorKind::Precondition);
}

TEST_CASE("even continuity evidence for (x, 0^inf)") {
    const auto r1 = check_evp_x_0inf(1, 10'000, 10'000);
    CHECK(r1.violation_count == 0);
    CHECK(r1.times_checked > 0);
    CHECK(r1.points_checked > 0);
    const auto r2 = check_evp_x_0inf(2, 20'000, 20'000);
    CHECK(r2.violation_count == 0);
    CHECK(error_kind([] { check_evp_x_0inf(0, 10, 10); }) == ErrorKind::Precondition);
}

TEST_CASE("witness certificates validate and break under time shifts") {
    using namespace symdyn::witness;
    std::vector<WitnessCertificate> certs;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t l = 1; l <= m; ++l) certs.push_back(witness_not_evp_x_10inf(m, l));
    for (Symbol t : {Symbol{0}, Symbol{1}})
        for (std::size_t n = 1; n <= 3; ++n) certs.push_back(witness_not_eqp_y_fixed(t, n));
    for (const std::string p : {"10", "01", "100"})
        for (std::size_t n = p.size(); n <= 4; ++n) certs.push_back(witness_not_eqp_y_general(RleWord::literal(p), n));
    for (const auto& c : certs) {
        CHECK(validate_certificate(c).valid);
        CHECK_FALSE(validate_certificate(perturb_time(c, 1)).valid);
        CHECK_FALSE(validate_certificate(perturb_time(c, -1)).valid);
    }
}

TEST_CASE("certificate closed forms") {
    using namespace symdyn::witness;
    const auto a = witness_not_evp_x_10inf(1, 1);
    CHECK(a.time == 1429);
    CHECK(point_x().symbol_at(1429) == 1);
    CHECK(point_x().symbol_at(1430) == 0);
    CHECK(closing_point(1).symbol_at(1429) == 0);
    const std::string xs = oracle::x_prefix(4000);
    CHECK(xs[1429] == '1');
    CHECK(xs[1430] == '0');
    CHECK(witness_not_evp_x_10inf(2, 2).time == 1518 + pow_u(8, 3) * 1518 - 1);
    CHECK(error_kind([] { witness_not_evp_x_10inf(1, 2); }) == ErrorKind::Precondition);

    auto param = [](const WitnessCertificate& w, const std::string& name) {
        for (const auto& [k, v] : w.parameters)
            if (k == name) return v;
        return BigInt(-1);
    };
    CHECK(param(witness_not_eqp_y_fixed(0, 2), "l") == 4);
    CHECK(param(witness_not_eqp_y_fixed(1, 2), "l") == 4);
    CHECK(error_kind([] { witness_not_eqp_y_fixed(0, 0); }) == ErrorKind::Precondition);
    CHECK(error_kind([] { witness_not_eqp_y_general(RleWord::literal("11"), 3); }) == ErrorKind::Precondition);

    const auto g = witness_not_eqp_y_general(RleWord::literal("10"), 2);
    CHECK(g.O.symbol_at(1) == 0);
    CHECK(validate_certificate(g).valid);

    const auto j = to_json(a);
    CHECK(j["time"] == "1429");
}
