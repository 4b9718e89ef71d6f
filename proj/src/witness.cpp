#include "symdyn/witness.hpp"

#include "symdyn/construction.hpp"
#include "symdyn/error.hpp"

namespace symdyn::witness {

using construction::LengthTable;

std::string to_string(Claim c) {
    switch (c) {
        case Claim::NotEvP_x_10inf: return "NotEvP_x_10inf";
        case Claim::NotEqP_y_0inf: return "NotEqP_y_0inf";
        case Claim::NotEqP_y_1inf: return "NotEqP_y_1inf";
        case Claim::NotEqP_y_general: return "NotEqP_y_general";
        case Claim::NotEqP_ex3_x_0inf: return "NotEqP_ex3_x_0inf";
    }
    return "unknown";
}

Validation validate_certificate(const WitnessCertificate& w) {
    Validation v;
    v.valid = !w.facts.empty() && w.time >= 1 && !w.O.empty() && !w.U.empty() && !w.V.empty();
    for (const auto& f : w.facts) {
        SymbolicPoint at = f.at_time ? f.point.shift(w.time) : f.point;
        bool observed = at.in_cylinder(Cylinder(f.cylinder));
        v.checked_facts.push_back(CheckedFact{f.label, f.expected, observed});
        v.valid = v.valid && observed == f.expected;
    }
    return v;
}

WitnessCertificate perturb_time(const WitnessCertificate& w, const BigInt& delta) {
    WitnessCertificate out = w;
    out.time += delta;
    require(out.time >= 0, ErrorKind::OutOfRange, "perturbed time is negative");
    return out;
}

namespace {

// Least m such that `word` is a factor of generated(m), searching m <= limit.
template <typename Gen>
std::optional<std::size_t> first_container(const RleWord& word, Gen generated, std::size_t limit) {
    for (std::size_t m = 0; m <= limit; ++m)
        if (find_first(generated(m), word)) return m;
    return std::nullopt;
}

BigInt u(std::size_t v) { return from_u64(v); }

}  // namespace

WitnessCertificate witness_not_evp_x_10inf(std::size_t m, std::size_t l) {
    require(l >= 1 && m >= l, ErrorKind::Precondition,
            "need m >= l >= 1, got m=" + std::to_string(m) + " l=" + std::to_string(l));
    auto& t = LengthTable::shared();
    const BigInt start = t.cum_c(m);
    const BigInt ones = t.one_part(m + 1);

    WitnessCertificate w;
    w.claim = Claim::NotEvP_x_10inf;
    w.parameters = {{"m", u(m)}, {"l", u(l)}, {"t", start}, {"k", ones}};
    w.O = RleWord::literal("10");
    w.U = construction::c_block(0, m);
    w.V = concat(RleWord::literal("1"), RleWord::repeat(0, u(l)));
    w.comparison_point = construction::closing_point(m);
    w.time = start + ones - 1;

    const SymbolicPoint x = construction::point_x();
    const SymbolicPoint& p = w.comparison_point;
    w.facts = {
        {"x in U", x, false, w.U, true},
        {"p in U", p, false, w.U, true},
        {"shift(x,time) in V", x, true, w.V, true},
        {"shift(p,time) in [0^(2^(m+1))]", p, true, RleWord::repeat(0, pow_u(2, m + 1)), true},
        {"shift(p,time) in O", p, true, w.O, false},
    };
    return w;
}

WitnessCertificate witness_not_eqp_y_fixed(Symbol target, std::size_t n) {
    require(target <= 1, ErrorKind::Precondition, "target must be 0 or 1");
    require(n >= 1, ErrorKind::Precondition, "need n >= 1");
    auto& t = LengthTable::shared();
    const RleWord block = RleWord::repeat(target, u(n));
    const std::size_t m = *first_container(block, construction::c_runs, 64);
    const std::size_t l = std::max(n + 2, m + 2);
    require(2 * pow_u(8, l - 1) * t.len_c(l - 1) > u(n + 1), ErrorKind::Precondition,
            "1-part margin too small");

    const BigInt entry_wl = t.cum_w(l - 1);
    const BigInt time = entry_wl + 2 * t.cum_w(l - 2) + t.cum_c(l - 1);
    const SymbolicPoint y = construction::point_y();
    const SymbolicPoint z = y.shift(entry_wl);
    const RleWord anchor = concat({construction::q_word(l), construction::c_block(0, l), construction::q_word(l + 1)});
    const RleWord ones = RleWord::repeat(1, 2 * pow_u(8, l - 1) * t.len_c(l - 1));

    WitnessCertificate w;
    w.claim = target == 0 ? Claim::NotEqP_y_0inf : Claim::NotEqP_y_1inf;
    w.parameters = {{"n", u(n)}, {"m", u(m)}, {"l", u(l)}, {"t", entry_wl}, {"c", time}};
    w.O = RleWord::repeat(target, 1);
    w.U = construction::w_block(n);
    w.V = block;
    w.comparison_point = z;
    w.time = time;
    w.facts = {
        {"y in U", y, false, w.U, true},
        {"z in U", z, false, w.U, true},
        {"shift(y,time) in [Q_l C_0..C_l Q_(l+1)]", y, true, anchor, true},
        {"shift(z,time) in [1^(2*8^(l-1)|C_(l-1)|)]", z, true, ones, true},
    };
    if (target == 0) {
        w.facts.push_back({"shift(y,time) in V", y, true, w.V, true});
        w.facts.push_back({"shift(z,time) in O", z, true, w.O, false});
    } else {
        w.facts.push_back({"shift(z,time) in V", z, true, w.V, true});
        w.facts.push_back({"shift(y,time) in O", y, true, w.O, false});
    }
    return w;
}

WitnessCertificate witness_not_eqp_y_general(const RleWord& prefix, std::size_t n) {
    require(prefix.alphabet_size() == 2, ErrorKind::AlphabetMismatch, "prefix must be binary");
    bool has0 = false, has1 = false;
    for (const auto& r : prefix.runs()) (r.symbol == 0 ? has0 : has1) = true;
    require(has0 && has1, ErrorKind::Precondition, "prefix must contain both 0 and 1");
    require(u(n) >= prefix.length(), ErrorKind::Precondition, "need n >= |prefix|");
    auto& t = LengthTable::shared();

    // p = prefix 0^infinity, so V = [p_0 .. p_n].
    const RleWord v_word = concat(prefix, RleWord::repeat(0, u(n + 1) - prefix.length()));
    auto m = first_container(v_word, [](std::size_t i) { return construction::w_word(i); }, 12);
    require(m.has_value(), ErrorKind::Inconclusive, "V word is not a factor of W_0..W_12");
    std::size_t l = std::max(n + 2, *m + 2);
    while (!(2 * pow_u(8, l - 1) * t.len_c(l - 1) > u(n + 1))) ++l;

    const BigInt entry_wl = t.cum_w(l - 1);
    // y re-traverses W_0..W_{l-2} C_0..C_{l-1} from here while z is inside
    // the 1-part of C_l; the window closes when y enters [Q_l C_0..C_l Q_{l+1}].
    const BigInt search_from = entry_wl + t.cum_w(l - 2);
    const BigInt window_end = search_from + t.cum_w(l - 2) + t.cum_c(l - 1);
    const SymbolicPoint y = construction::point_y();
    const SymbolicPoint z = y.shift(entry_wl);
    auto hit = find_first(y.shift(search_from).runs(), v_word, window_end - search_from - 1);
    require(hit.has_value(), ErrorKind::Inconclusive, "V not entered inside the search window");

    WitnessCertificate w;
    w.claim = Claim::NotEqP_y_general;
    w.parameters = {{"n", u(n)}, {"m", u(*m)}, {"l", u(l)}, {"t", entry_wl}, {"search_from", search_from},
                    {"window_end", window_end}};
    w.O = prefix;
    w.U = construction::w_block(n);
    w.V = v_word;
    w.comparison_point = z;
    w.time = search_from + *hit;
    w.parameters.emplace_back("c", w.time);
    w.facts = {
        {"y in U", y, false, w.U, true},
        {"z in U", z, false, w.U, true},
        {"shift(y,time) in V", y, true, w.V, true},
        {"shift(z,time) in [1^(n+1)]", z, true, RleWord::repeat(1, u(n + 1)), true},
        {"shift(z,time) in O", z, true, w.O, false},
    };
    return w;
}

nlohmann::json to_json(const WitnessCertificate& w) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : w.parameters) params[k] = to_decimal(v);
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& f : w.facts)
        facts.push_back({{"label", f.label},
                         {"point", f.point.descriptor()},
                         {"at_time", f.at_time},
                         {"cylinder", to_json(f.cylinder)},
                         {"expected", f.expected}});
    return {{"claim", to_string(w.claim)},
            {"parameters", params},
            {"O", to_json(w.O)},
            {"U", to_json(w.U)},
            {"V", to_json(w.V)},
            {"comparison_point", w.comparison_point.descriptor()},
            {"time", to_decimal(w.time)},
            {"facts", facts}};
}

nlohmann::json to_json(const Validation& v) {
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& f : v.checked_facts)
        facts.push_back({{"label", f.label}, {"expected", f.expected}, {"observed", f.observed}});
    return {{"valid", v.valid}, {"checked_facts", facts}};
}

}  // namespace symdyn::witness
