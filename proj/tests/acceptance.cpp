// One line per acceptance criterion: PASS/FAIL, elapsed time and its limit.

#include "oracle.hpp"
#include "symdyn/construction.hpp"
#include "symdyn/interval_map.hpp"
#include "symdyn/models.hpp"
#include "symdyn/witness.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace symdyn;
using namespace symdyn::construction;

namespace {

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<std::string()> body;  // empty string: pass; otherwise the failure reason
};

std::string fail_if(bool bad, const std::string& why) { return bad ? why : std::string(); }

std::string criterion1() {
    const auto r = verify_claim1(0);
    return fail_if(!(r.lhs == 960 && r.rhs == 88 && r.holds), "claim1(0) = " + to_decimal(r.lhs) + ", " + to_decimal(r.rhs));
}

std::string criterion2() {
    for (std::size_t n = 0; n <= 64; ++n) {
        if (!verify_claim1(n).holds) return "claim1 fails at n=" + std::to_string(n);
        if (!verify_one_part_remark(n).holds) return "one-part fails at n=" + std::to_string(n);
    }
    for (std::size_t n = 0; n <= 20; ++n)
        for (std::size_t k = 0; n + k <= 20; ++k)
            if (!verify_corollary(n, k).holds) return "corollary fails at " + std::to_string(n) + "," + std::to_string(k);
    return {};
}

std::string criterion3() {
    const RleWord c2 = c_runs(2), q1c0 = concat(q_word(1), c_runs(0)), z4 = RleWord::repeat(0, 4);
    const std::vector<std::tuple<SymbolicPoint, RleWord, unsigned>> cases{
        {point_x(), c2, 22}, {point_y(), q1c0, 2}, {point_x(), z4, 18}};
    for (const auto& [p, w, want] : cases) {
        if (tau(p, Cylinder(w), 10'000) != Position(want)) return "tau mismatch, expected " + std::to_string(want);
        for (unsigned t = 0; t < want; ++t)
            if (p.shift(t).in_cylinder(w)) return "earlier entry at " + std::to_string(t);
        if (!p.shift(want).in_cylinder(w)) return "no entry at " + std::to_string(want);
    }
    return {};
}

std::string criterion4() {
    const std::size_t n = 100'000;
    const std::string xs = oracle::x_prefix(n), ys = oracle::y_prefix(n);
    const auto x = point_x(), y = point_y();
    for (std::size_t q = 0; q < n; ++q) {
        if (x.symbol_at(q) != static_cast<Symbol>(xs[q] - '0')) return "x differs at " + std::to_string(q);
        if (y.symbol_at(q) != static_cast<Symbol>(ys[q] - '0')) return "y differs at " + std::to_string(q);
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10'000; ++i) {
        const std::size_t tl = 1 + rng() % 10'000, pl = 1 + rng() % 24;
        const std::size_t mean_run = 1 + rng() % 64;
        auto gen = [&](std::size_t len) {
            std::string s;
            char c = static_cast<char>('0' + (rng() & 1));
            while (s.size() < len) {
                s.append(1 + rng() % mean_run, c);
                c = c == '0' ? '1' : '0';
            }
            s.resize(len);
            return s;
        };
        std::string t = gen(tl), p = gen(pl);
        // Half the patterns are cut from the text so that hits are common.
        if ((i & 1) && pl <= tl) p = t.substr(rng() % (tl - pl + 1), pl);
        const auto got = find_first(RleWord::literal(t), RleWord::literal(p));
        const auto want = oracle::naive_find(t, p);
        if (got.has_value() != want.has_value() || (want && *got != Position(*want)))
            return "find_first differs on case " + std::to_string(i);
    }
    return {};
}

std::string criterion5() {
    using namespace witness;
    std::vector<WitnessCertificate> certs;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t l = 1; l <= m; ++l) certs.push_back(witness_not_evp_x_10inf(m, l));
    for (Symbol t : {Symbol{0}, Symbol{1}})
        for (std::size_t n = 1; n <= 3; ++n) certs.push_back(witness_not_eqp_y_fixed(t, n));
    // The construction needs n >= |prefix|.
    for (const std::string p : {"10", "01", "100"})
        for (std::size_t n = p.size(); n <= 4; ++n) certs.push_back(witness_not_eqp_y_general(RleWord::literal(p), n));
    bool big = false;
    for (const auto& c : certs) {
        const std::string tag = to_string(c.claim) + " at " + to_decimal(c.time);
        if (!validate_certificate(c).valid) return tag + " does not validate";
        if (validate_certificate(perturb_time(c, 1)).valid) return tag + " survives +1";
        if (validate_certificate(perturb_time(c, -1)).valid) return tag + " survives -1";
        big = big || c.time > pow_u(10, 9);
    }
    return fail_if(!big, "no certificate time beyond 10^9");
}

std::string criterion6() {
    const auto r = check_evp_x_0inf(2, 100'000, 100'000);
    return fail_if(r.violation_count != 0 || r.times_checked == 0,
                   std::to_string(r.violation_count) + " violations over " + std::to_string(r.times_checked) + " times");
}

std::string criterion7() {
    for (const auto& row : verify_hitting_order(1, 6))
        if (row.status != HittingStatus::Holds) return "fails at k=" + std::to_string(row.k);
    return {};
}

std::string criterion8() {
    const auto r = dynamics::periodic_scan(models::xy_model(), 4, 10'000);
    return fail_if(r.survivors != std::vector<std::string>{"0", "1"}, "unexpected survivors");
}

std::string criterion9() {
    using namespace interval;
    const auto f = example_es_map();
    for (const auto& b : f.interior_breakpoints())
        if (!f.continuous_at(b)) return "discontinuous at " + to_fraction(b);
    if (f.interior_breakpoints().size() != 4) return "expected four breakpoints";
    if (f.eval(Rational(3, 4)) != Rational(1, 3) || f.eval(1) != 1) return "f(3/4) or f(1) wrong";
    if (!verify_invariant_interval(f, {0, Rational(1, 2)})) return "[0,1/2] not invariant";
    for (int a = 0; a <= 10; ++a) {
        Rational da(a, 50), db(10 - a, 50);
        da.canonicalize();
        db.canonicalize();
        auto base = orbit(f, Rational(3, 5) + da, 50);
        auto other = orbit(f, Rational(3, 5) + db, 50);
        for (std::size_t j = 1; j <= 50; ++j)
            if (base[j] != other[j]) return "no collapse on [3/5,4/5]";
    }
    WitnessSearch s;
    s.eps = Rational(1, 1000);
    s.x = Rational(7, 10);
    auto w = eventual_sensitivity_witness(f, s);
    if (!w || w->n != 1 || w->k != 8 || w->y != Rational(348477, 1048576)) return "x=7/10 witness differs";
    s.x = 1;
    w = eventual_sensitivity_witness(f, s);
    if (!w || w->n != 1 || w->k != 5 || w->y != Rational(130941, 131072)) return "x=1 witness differs";
    return {};
}

std::string criterion10() {
    using namespace dynamics;
    const auto ex2 = models::example_family_model(2, {}, 2);
    const auto ind = models::member_independence(ex2, 10'000, 16);
    if (!ind.holds || ind.members != 2) return "member independence fails";
    PairQuery q;
    q.kind = PairKind::EqP;
    q.x = ex2.generators[0];
    q.o_depth = 2;
    const PairAnalysis a(ex2, q);
    const auto v = a.verdict();
    // The proof's U = [W_1 0 W_2] has depth 4.
    if (v.status != VerdictStatus::Satisfied || !a.satisfied(4, v.v_depth)) return "ex2 EqP not satisfied";
    const auto ex3 = models::evcty_example_model();
    q.kind = PairKind::EvP;
    q.x = models::block_sequence();
    q.o_depth = 1;
    q.horizon = 1000;
    if (check_pair(ex3, q).status != VerdictStatus::Satisfied) return "ex3 EvP not satisfied";
    if (!witness::validate_certificate(models::witness_not_eqp_ex3(9, 3)).valid) return "ex3 witness invalid";
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "claim1 base constants 960 / 88", 1, criterion1},
        {2, "claim1, one-part and corollary ranges", 10, criterion2},
        {3, "hitting times 22, 2, 18 and their minimality", 1, criterion3},
        {4, "oracle equivalence of symbol_at and find_first", 30, criterion4},
        {5, "refutation certificates and their perturbations", 20, criterion5},
        {6, "even continuity evidence for (x, 0^inf)", 20, criterion6},
        {7, "hitting-order chain for n=1, k<=6", 5, criterion7},
        {8, "periodic scan survivors", 10, criterion8},
        {9, "interval map", 10, criterion9},
        {10, "auxiliary example systems", 10, criterion10},
    };
    int failures = 0;
    double total = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = c.body();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += s;
        const bool pass = why.empty() && s < c.limit_s;
        if (why.empty() && !pass) why = "over time limit";
        failures += !pass;
        std::printf("[%s] %2d %-50s %8.3fs (limit %gs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, s, c.limit_s,
                    why.empty() ? "" : "  ", why.c_str());
    }
    std::printf("%d/%zu criteria passed in %.3fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
    return failures == 0 && total < 120 ? 0 : 1;
}
