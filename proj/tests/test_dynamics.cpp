#include "support.hpp"
#include "symdyn/construction.hpp"
#include "symdyn/models.hpp"

#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <set>

using namespace symdyn;
using namespace symdyn::dynamics;
using construction::point_x;
using construction::point_y;

namespace {

Cylinder cyl(const std::string& digits) { return Cylinder(RleWord::literal(digits)); }
SymbolicPoint zero_inf() { return SymbolicPoint::fixed(0); }
SymbolicPoint ten_inf() { return SymbolicPoint::eventually_periodic(RleWord::literal("1"), RleWord::literal("0")); }

PairQuery query(PairKind kind, SymbolicPoint x, SymbolicPoint y, std::size_t o, std::size_t uv, std::uint64_t h) {
    PairQuery q;
    q.kind = kind;
    q.x = std::move(x);
    q.y = std::move(y);
    q.o_depth = o;
    q.max_uv_depth = uv;
    q.horizon = h;
    return q;
}

// Sample points of a model, materialized as strings, for brute-force checks.
std::vector<std::string> sample_strings(const SpaceModel& m, std::size_t depth, std::size_t len) {
    auto str = [](const SymbolicPoint& p, std::size_t n) {
        std::string s;
        for (auto c : p.materialize(n)) s += static_cast<char>('0' + c);
        return s;
    };
    std::vector<std::string> out;
    for (const auto& g : m.generators) {
        const std::string all = str(g, depth + len);
        for (std::size_t o = 0; o <= depth; ++o) out.push_back(all.substr(o, len));
    }
    for (const auto& p : m.limit_points) out.push_back(str(p, len));
    return out;
}

}  // namespace

TEST_CASE("classify examples") {
    std::vector<std::uint64_t> all(100), evens;
    for (std::uint64_t i = 0; i < 100; ++i) all[i] = i + 1;
    for (std::uint64_t i = 2; i <= 100; i += 2) evens.push_back(i);
    auto a = classify(all, 100);
    CHECK(a.max_gap == 1);
    CHECK(a.longest_run == 100);
    CHECK(a.complement_count == 0);
    auto b = classify(evens, 100);
    CHECK(b.max_gap == 2);
    CHECK(b.longest_run == 1);
    CHECK(b.complement_count == 50);
    CHECK(classify({1}, 100).max_gap == 99);
}

TEST_CASE("hitting, sensitivity and splitting examples") {
    const auto s7 = models::xy_model();
    const auto single = models::single_point_model(zero_inf());
    CHECK(hitting_times(single, cyl("0"), cyl("1"), 1000).times.empty());
    CHECK(sensitivity_times(single, cyl("0"), EntourageDepth(1), 1000).times.empty());

    const auto all = hitting_times(s7, cyl("1"), cyl("1"), 100);
    CHECK(all.times.size() == 100);

    const auto u = Cylinder(construction::c_block(0, 1));
    const auto h = hitting_times(s7, u, Cylinder(construction::c_runs(2)), 2000);
    CHECK(std::find(h.times.begin(), h.times.end(), 22) != h.times.end());

    CHECK_FALSE(sensitivity_times(s7, cyl("1"), EntourageDepth(1), 100).times.empty());
    const auto sens = sensitivity_times(s7, u, EntourageDepth(1), 2000);
    CHECK_FALSE(sens.times.empty());
    const auto split = splitting_times(s7, u, cyl("00"), EntourageDepth(1), 2000);
    CHECK_FALSE(split.times.empty());
    CHECK(splitting_times(s7, u, cyl("11111111111111111111111111111111111111"), EntourageDepth(1), 10).times.empty());
    CHECK(error_kind([] { EntourageDepth(0); }) == ErrorKind::Precondition);
}

TEST_CASE("splitting equals hitting intersected with sensitivity") {
    const auto s7 = models::xy_model(2000);
    const auto ex2 = models::model_by_name("ex2", 2000);
    for (const auto* m : {&s7, &ex2}) {
        for (const std::string u : {"1", "10", "0", "100"})
            for (const std::string v : {"0", "00", "1", "01"})
                for (std::size_t k : {1, 2, 4}) {
                    const auto hit = hitting_times(*m, cyl(u), cyl(v), 1500).times;
                    const auto sens = sensitivity_times(*m, cyl(u), EntourageDepth(k), 1500).times;
                    const auto split = splitting_times(*m, cyl(u), cyl(v), EntourageDepth(k), 1500);
                    std::vector<std::uint64_t> both;
                    std::set_intersection(hit.begin(), hit.end(), sens.begin(), sens.end(), std::back_inserter(both));
                    CHECK(split.times == both);
                }
    }
}

TEST_CASE("classify statistics recompute from the times") {
    const auto s7 = models::xy_model(2000);
    const auto r = hitting_times(s7, cyl("1"), cyl("0000"), 3000);
    const auto c = classify(r.times, r.horizon);
    CHECK(c.max_gap == r.max_gap);
    CHECK(c.longest_run == r.longest_run);
    CHECK(c.complement_count == r.complement_count);
    CHECK(r.witnesses.size() == r.times.size());
    const auto j = to_json(r);
    CHECK(j["times"].size() == r.times.size());
}

TEST_CASE("check_pair on the x/y system") {
    const auto s7 = models::xy_model();
    const auto v = check_pair(s7, query(PairKind::EvP, point_x(), zero_inf(), 2, 4, 10'000));
    REQUIRE(v.status == VerdictStatus::Satisfied);
    CHECK(v.u_depth == 3);
    CHECK(v.v_depth == 2);
    // The U = [C_0 C_1 C_2] neighbourhood from the proof passes as well.
    const PairAnalysis analysis(s7, query(PairKind::EvP, point_x(), zero_inf(), 2, 1518, 10'000));
    CHECK(analysis.satisfied(1518, 2));

    const auto bad = check_pair(s7, query(PairKind::EvP, point_x(), ten_inf(), 2, 2, 2000));
    CHECK(bad.status == VerdictStatus::ViolatedUpTo);
    CHECK_FALSE(bad.violations.empty());
    for (const auto& viol : bad.violations) CHECK(viol.time <= 2000);

    const auto single = models::single_point_model(zero_inf());
    const auto triv = check_pair(single, query(PairKind::EqP, zero_inf(), zero_inf(), 1, 4, 1000));
    CHECK(triv.status == VerdictStatus::Satisfied);
    CHECK(triv.u_depth == 1);
    CHECK(triv.v_depth == 1);
    const auto j = to_json(v);
    CHECK(j["status"] == "satisfied");
    CHECK(j["U_depth"] == 3);
    CHECK(j.contains("sampled"));
}

TEST_CASE("EvP satisfaction is monotone in the depths") {
    const auto s7 = models::xy_model(3000);
    for (const auto& y : {zero_inf(), ten_inf(), SymbolicPoint::fixed(1)})
        for (std::size_t o : {1, 2, 3}) {
            const PairAnalysis a(s7, query(PairKind::EvP, point_x(), y, o, 8, 3000));
            const PairAnalysis e(s7, query(PairKind::EqP, point_x(), y, o, 8, 3000));
            for (std::size_t du = 1; du < 8; ++du)
                for (std::size_t dv = 1; dv < 8; ++dv) {
                    if (a.satisfied(du, dv)) {
                        CHECK(a.satisfied(du + 1, dv));
                        CHECK(a.satisfied(du, dv + 1));
                        CHECK(a.satisfied(du + 1, dv + 1));
                    }
                    // An EvP failure is an EqP failure.
                    if (!a.satisfied(du, dv)) CHECK_FALSE(e.satisfied(du, dv));
                }
        }
}

TEST_CASE("check_pair agrees with a brute-force evaluation") {
    const std::size_t depth = 150, horizon = 120;
    const auto s7 = models::xy_model(depth);
    const auto pts = sample_strings(s7, depth, horizon + 64);
    auto xs = [&] {
        std::string s;
        for (auto c : point_x().materialize(horizon + 64)) s += static_cast<char>('0' + c);
        return s;
    }();
    for (const auto& [y, ys] : {std::pair{zero_inf(), std::string(64, '0')}, std::pair{ten_inf(), "1" + std::string(63, '0')}}) {
        for (auto kind : {PairKind::EvP, PairKind::EqP}) {
            const std::size_t o = 2;
            const PairAnalysis a(s7, query(kind, point_x(), y, o, 5, horizon));
            for (std::size_t du = 1; du <= 5; ++du)
                for (std::size_t dv = 1; dv <= 5; ++dv) {
                    bool ok = true;
                    for (std::size_t n = 1; n <= horizon && ok; ++n) {
                        bool triggered = false;
                        if (kind == PairKind::EvP) {
                            triggered = xs.compare(n, dv, ys, 0, dv) == 0;
                        } else {
                            for (const auto& p : pts)
                                if (p.compare(0, du, xs, 0, du) == 0 && p.compare(n, dv, ys, 0, dv) == 0) triggered = true;
                        }
                        if (!triggered) continue;
                        for (const auto& p : pts)
                            if (p.compare(0, du, xs, 0, du) == 0 && p.compare(n, o, ys, 0, o) != 0) ok = false;
                    }
                    CHECK_MESSAGE(a.satisfied(du, dv) == ok, to_string(kind), " ", du, " ", dv);
                }
        }
    }
}

TEST_CASE("every generator pair is satisfiable at a finite horizon") {
    for (const std::string name : {"s7", "ex2", "ex3"}) {
        auto m = models::model_by_name(name, 300);
        std::vector<SymbolicPoint> pts = m.generators;
        pts.insert(pts.end(), m.limit_points.begin(), m.limit_points.end());
        if (pts.size() > 6) pts.erase(pts.begin() + 6, pts.end());
        for (const auto& x : m.generators)
            for (const auto& y : pts)
                for (auto kind : {PairKind::EvP, PairKind::EqP}) {
                    const auto v = check_pair(m, query(kind, x, y, 2, 900, 200));
                    CHECK_MESSAGE(v.status == VerdictStatus::Satisfied, name, " ", x.label(), " ", y.label());
                }
    }
}

TEST_CASE("trivial pair scan") {
    const auto s7 = models::xy_model();
    CHECK_FALSE(trivial_pair_scan(s7, point_x(), ten_inf(), 2, 10'000).eventually_empty_evidence);
    const auto single = models::single_point_model(ten_inf());
    CHECK(trivial_pair_scan(single, ten_inf(), point_x(), 3, 10'000).eventually_empty_evidence);
    CHECK_FALSE(trivial_pair_scan(s7, point_x(), point_x(), 1, 10'000).eventually_empty_evidence);
}

TEST_CASE("omega membership evidence") {
    CHECK(omega_membership_evidence(point_x(), zero_inf(), 4, 10'000).recurrent);
    CHECK(omega_membership_evidence(point_x(), ten_inf(), 2, 10'000).recurrent);
    CHECK_FALSE(omega_membership_evidence(ten_inf(), SymbolicPoint::fixed(1), 1, 10'000).recurrent);
    CHECK(omega_membership_evidence(models::block_sequence(), zero_inf(), 3, 10'000).recurrent);
}

TEST_CASE("periodic scan") {
    const auto s7 = models::xy_model();
    for (std::size_t p : {1, 2, 4}) {
        const auto r = periodic_scan(s7, p, 10'000);
        CHECK(r.survivors == std::vector<std::string>{"0", "1"});
        for (const auto& c : r.candidates) CHECK(c.repetition_cap >= 8);
    }
    const auto r2 = periodic_scan(s7, 2, 10'000);
    for (const auto& c : r2.candidates)
        if (c.word == "10") CHECK_FALSE(c.survived);
}

TEST_CASE("family model") {
    const auto m = models::example_family_model(2, {}, 2, 10'000);
    const auto ind = models::member_independence(m, 10'000, 8);
    CHECK(ind.holds);
    CHECK(ind.members == 2);
    const auto v = check_pair(m, query(PairKind::EqP, m.generators[0], zero_inf(), 2, 4, 10'000));
    REQUIRE(v.status == VerdictStatus::Satisfied);
    CHECK(v.u_depth == 3);
    CHECK(v.v_depth == 2);
    // U = [W_1 0 W_2] from the proof has depth 4.
    const PairAnalysis a(m, query(PairKind::EqP, m.generators[0], zero_inf(), 2, 4, 10'000));
    CHECK(a.satisfied(4, 2));
    for (auto [lo, hi] : models::zero_block_schedule(100))
        for (auto t = lo; t <= hi; ++t) CHECK(m.generators[1].symbol_at(t) == 0);
    CHECK(m.generators[0].prefix(4).alphabet_size() == 3);
    // W_1 sits at [0,0], 0^1 at [1,1], W_2 at [2,3].
    CHECK(m.generators[0].symbol_at(0) != 0);
    CHECK(m.generators[0].symbol_at(1) == 0);
    CHECK(m.generators[0].symbol_at(2) != 0);
}

TEST_CASE("block sequence model") {
    const auto x = models::block_sequence();
    CHECK(x.prefix(9).to_string() == "101001000");
    CHECK(models::block_start(1) == 0);
    CHECK(models::block_start(3) == 5);
    const auto m = models::evcty_example_model();
    const auto v = check_pair(m, query(PairKind::EvP, x, zero_inf(), 1, 4, 1000));
    CHECK(v.status == VerdictStatus::Satisfied);
    const auto w = models::witness_not_eqp_ex3(9, 3);
    CHECK(witness::validate_certificate(w).valid);
    CHECK_FALSE(witness::validate_certificate(witness::perturb_time(w, 1)).valid);
    CHECK_FALSE(witness::validate_certificate(witness::perturb_time(w, -1)).valid);
    for (std::size_t u = 1; u <= 12; ++u)
        for (std::size_t vd = 1; vd <= 4; ++vd) CHECK(witness::validate_certificate(models::witness_not_eqp_ex3(u, vd)).valid);
}

TEST_CASE("point parsing") {
    CHECK(models::parse_point("x") == point_x());
    CHECK(models::parse_point("closing:2") == construction::closing_point(2));
    CHECK(models::parse_point("x", "ex3") == models::block_sequence());
    CHECK(models::parse_point("ev:1:0").prefix(3).to_string() == "100");
    CHECK(error_kind([] { models::parse_point("nope"); }) == ErrorKind::Parse);
    CHECK(error_kind([] { models::model_by_name("nope"); }) == ErrorKind::Parse);
}
