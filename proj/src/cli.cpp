#include "symdyn/cli.hpp"

#include "symdyn/construction.hpp"
#include "symdyn/error.hpp"
#include "symdyn/interval_map.hpp"
#include "symdyn/models.hpp"
#include "symdyn/witness.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace symdyn::cli {

namespace {

using nlohmann::json;

struct Outcome {
    std::string status;
    json data;
};

int exit_code_for(const std::string& status) {
    if (status == "verified" || status == "satisfied") return kOk;
    if (status == "witness" || status == "violated") return kRefuted;
    if (status == "inconclusive") return kInconclusive;
    return kInternal;
}

std::string join(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
    return out;
}

BigInt parse_big(const std::string& s, const std::string& flag) {
    try {
        return parse_decimal(s);
    } catch (const Error&) {
        throw Error(ErrorKind::Parse, flag + " expects a nonnegative decimal integer, got '" + s + "'");
    }
}

std::size_t parse_index(const std::string& s, const std::string& what) {
    BigInt v = parse_big(s, what);
    require(fits_u64(v) && v <= 1'000'000, ErrorKind::Parse, what + " is out of range");
    return to_u64(v);
}

Rational parse_q(const std::string& s, const std::string& flag) {
    try {
        return parse_rational(s);
    } catch (const Error&) {
        throw Error(ErrorKind::Parse, flag + " expects a rational p/q, got '" + s + "'");
    }
}

// C:N, Q:N, W:N, word:<rle-json>, lit:<digits> or bare digits.
RleWord parse_cylinder(const std::string& text, unsigned alphabet = 2) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return RleWord::literal(text, alphabet);
    const std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "C") return construction::c_runs(parse_index(rest, "C index"));
    if (head == "Q") {
        const auto n = parse_index(rest, "Q index");
        require(n >= 1, ErrorKind::Parse, "Q_n needs n >= 1");
        return construction::q_word(n);
    }
    if (head == "W") return construction::w_word(parse_index(rest, "W index"));
    if (head == "lit") return RleWord::literal(rest, alphabet);
    if (head == "word") {
        json j;
        try {
            j = json::parse(rest);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::Parse, std::string("malformed RLE JSON: ") + e.what());
        }
        return rle_word_from_json(j);
    }
    throw Error(ErrorKind::Parse, "unknown cylinder '" + text + "' (expected C:N, Q:N, W:N, word:<json> or lit:<digits>)");
}

json ineq_row(const char* lemma, std::size_t n, const construction::InequalityCheck& c) {
    return {{"lemma", lemma}, {"n", n}, {"lhs", to_decimal(c.lhs)}, {"rhs", to_decimal(c.rhs)}, {"holds", c.holds}};
}

std::string hitting_status(construction::HittingStatus s) {
    switch (s) {
        case construction::HittingStatus::Holds: return "holds";
        case construction::HittingStatus::Fails: return "fails";
        case construction::HittingStatus::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Outcome certificate_outcome(const witness::WitnessCertificate& w, bool validate) {
    // Always validated, so a witness status is never unchecked; --validate
    // adds the per-fact detail.
    json data = {{"certificate", witness::to_json(w)}};
    auto v = witness::validate_certificate(w);
    data["valid"] = v.valid;
    if (validate) data["validation"] = witness::to_json(v);
    require(v.valid, ErrorKind::Inconclusive, "certificate failed validation");
    data["time"] = to_decimal(w.time);
    return {"witness", data};
}

std::string render_text(const json& report) {
    std::string out = "command: " + report["command"].get<std::string>() + "\n";
    out += "status: " + report["status"].get<std::string>() + "\n";
    if (report.contains("error")) out += "error: " + report["error"].get<std::string>() + "\n";
    if (report.contains("data")) out += report["data"].dump(2) + "\n";
    return out;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
    const auto started = std::chrono::steady_clock::now();
    Result result;

    CLI::App app{"Finite-horizon verification of the x/y shift construction and related examples", "symdyn"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "json";
    std::string output;
    int threads = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "Write the report to this path instead of standard output");
    app.add_option("--threads", threads, "OpenMP thread count (0 keeps the runtime default)")
        ->check(CLI::NonNegativeNumber);

    std::function<Outcome()> handler;
    auto on = [&](CLI::App* sub, std::function<Outcome()> fn) { sub->callback([&handler, fn] { handler = fn; }); };

    // lengths
    std::size_t len_n = 0;
    auto* lengths = app.add_subcommand("lengths", "Exact lengths |C_n|, |Q_n|, |W_n| and cumulative sums");
    lengths->add_option("--n", len_n, "Index n")->capture_default_str();
    on(lengths, [&] {
        auto s = construction::lengths(len_n);
        return Outcome{"verified",
                       {{"n", s.n},
                        {"len_c", to_decimal(s.len_c)},
                        {"len_q", to_decimal(s.len_q)},
                        {"len_w", to_decimal(s.len_w)},
                        {"cum_c", to_decimal(s.cum_c)},
                        {"cum_w", to_decimal(s.cum_w)}}};
    });

    // verify ...
    auto* verify = app.add_subcommand("verify", "Exact inequality and hitting-order checks");
    verify->require_subcommand(1);

    std::size_t claim_n_max = 0;
    auto* claim1 = verify->add_subcommand("claim1", "6*8^(n+1)|C_(n+1)| >= |W_0..W_n C_0..C_(n+1)| + 2|W_n|");
    claim1->add_option("--n-max", claim_n_max, "Check n = 0..n-max")->capture_default_str();
    on(claim1, [&] {
        json rows = json::array();
        bool all = true;
        for (std::size_t n = 0; n <= claim_n_max; ++n) {
            auto c = construction::verify_claim1(n);
            all = all && c.holds;
            rows.push_back(ineq_row("claim1", n, c));
        }
        return Outcome{all ? "verified" : "violated", {{"rows", rows}, {"all_hold", all}}};
    });

    std::size_t cor_n = 0, cor_k = 0;
    std::optional<std::size_t> cor_sum_max;
    auto* corollary = verify->add_subcommand("corollary", "Iterated form of claim1 for (n, k)");
    corollary->add_option("--n", cor_n, "n")->capture_default_str();
    corollary->add_option("--k", cor_k, "k")->capture_default_str();
    corollary->add_option("--sum-max", cor_sum_max, "Check every (n, k) with n + k <= sum-max instead");
    on(corollary, [&] {
        json rows = json::array();
        bool all = true;
        auto one = [&](std::size_t n, std::size_t k) {
            auto c = construction::verify_corollary(n, k);
            all = all && c.holds;
            json row = ineq_row("corollary", n, c);
            row["k"] = k;
            rows.push_back(row);
        };
        if (cor_sum_max) {
            for (std::size_t s = 0; s <= *cor_sum_max; ++s)
                for (std::size_t n = 0; n <= s; ++n) one(n, s - n);
        } else {
            one(cor_n, cor_k);
        }
        return Outcome{all ? "verified" : "violated", {{"rows", rows}, {"all_hold", all}}};
    });

    std::size_t op_n_max = 0;
    auto* one_part = verify->add_subcommand("one-part", "8^(n+2)|C_0..C_(n+1)| >= 8 * 8^(n+1)|C_(n+1)|");
    one_part->add_option("--n-max", op_n_max, "Check n = 0..n-max")->capture_default_str();
    on(one_part, [&] {
        json rows = json::array();
        bool all = true;
        for (std::size_t n = 0; n <= op_n_max; ++n) {
            auto c = construction::verify_one_part_remark(n);
            all = all && c.holds;
            rows.push_back({{"lemma", "one_part"},
                            {"n", n},
                            {"one_part_len", to_decimal(c.one_part_len)},
                            {"claim1_lhs", to_decimal(c.claim1_lhs)},
                            {"bound", to_decimal(c.bound)},
                            {"holds", c.holds}});
        }
        return Outcome{all ? "verified" : "violated", {{"rows", rows}, {"all_hold", all}}};
    });

    std::size_t ho_n = 1, ho_k_max = 6;
    auto* hitting_order = verify->add_subcommand("hitting-order", "tau(x,[C_k]) <= tau(z'_n,[Q_k C_0]) <= entry chain");
    hitting_order->add_option("--n", ho_n, "Closing point index n")->capture_default_str();
    hitting_order->add_option("--k-max", ho_k_max, "Largest k")->capture_default_str();
    on(hitting_order, [&] {
        json rows = json::array();
        std::string status = "verified";
        for (const auto& r : construction::verify_hitting_order(ho_n, ho_k_max)) {
            rows.push_back({{"k", r.k},
                            {"tau_x_ck", to_decimal(r.tau_x_ck)},
                            {"tau_z_qkc0", r.tau_z_qkc0 ? json(to_decimal(*r.tau_z_qkc0)) : json(nullptr)},
                            {"lemma_bound", to_decimal(r.lemma_bound)},
                            {"x_zero_part_entry", to_decimal(r.x_zero_part_entry)},
                            {"closed_form_agrees", r.closed_form_agrees},
                            {"status", hitting_status(r.status)}});
            if (r.status == construction::HittingStatus::Fails) status = "violated";
            else if (r.status == construction::HittingStatus::Inconclusive && status == "verified") status = "inconclusive";
        }
        return Outcome{status, {{"n", ho_n}, {"rows", rows}}};
    });

    std::size_t evp_n = 2;
    std::uint64_t evp_horizon = 10'000, evp_depth = 10'000;
    auto* evp = verify->add_subcommand("evp-x-0inf", "Sampled even-continuity check for (x, 0^inf)");
    evp->add_option("--n", evp_n, "U = [C_0..C_n], V = O = [0^n]")->capture_default_str();
    evp->add_option("--horizon", evp_horizon, "Time horizon")->capture_default_str();
    evp->add_option("--orbit-depth", evp_depth, "Orbit depth of y")->capture_default_str();
    on(evp, [&] {
        auto r = construction::check_evp_x_0inf(evp_n, evp_horizon, evp_depth);
        return Outcome{r.violation_count == 0 ? "verified" : "violated", construction::to_json(r)};
    });

    // tau
    std::string tau_point = "x", tau_cyl = "C:2", tau_horizon = "10000";
    auto* tau = app.add_subcommand("tau", "First hitting time (t >= 0) of a point into a cylinder");
    tau->add_option("--point", tau_point, "x, y or closing:N")->capture_default_str();
    tau->add_option("--cylinder", tau_cyl, "C:N, Q:N, W:N, word:<rle-json> or lit:<digits>")->capture_default_str();
    tau->add_option("--horizon", tau_horizon, "Search horizon (decimal, may be large)")->capture_default_str();
    on(tau, [&] {
        const SymbolicPoint p = models::parse_point(tau_point);
        const RleWord c = parse_cylinder(tau_cyl);
        auto t = construction::tau(p, Cylinder(c), parse_big(tau_horizon, "--horizon"));
        json data = {{"point", p.descriptor()}, {"cylinder", to_json(c)}, {"horizon", tau_horizon}};
        data["tau"] = t ? json(to_decimal(*t)) : json(nullptr);
        return Outcome{t ? "verified" : "inconclusive", data};
    });

    // witness ...
    auto* wit = app.add_subcommand("witness", "Closed-form refutation certificates");
    wit->require_subcommand(1);
    bool validate = false;
    std::size_t w_m = 1, w_l = 1, w_n = 1, w_u = 3, w_v = 1;
    std::string w_prefix = "10";
    auto* w1 = wit->add_subcommand("evp-x-10inf", "(x, 10^inf) is not an even continuity pair");
    w1->add_option("--m", w_m, "m >= l")->capture_default_str();
    w1->add_option("--l", w_l, "l >= 1")->capture_default_str();
    w1->add_flag("--validate", validate, "Check every membership fact");
    on(w1, [&] { return certificate_outcome(witness::witness_not_evp_x_10inf(w_m, w_l), validate); });
    auto* w2 = wit->add_subcommand("eqp-y-zero", "(y, 0^inf) is not an equicontinuity pair");
    w2->add_option("--n", w_n, "U = [W_0..W_n], V = [0^n]")->capture_default_str();
    w2->add_flag("--validate", validate, "Check every membership fact");
    on(w2, [&] { return certificate_outcome(witness::witness_not_eqp_y_fixed(0, w_n), validate); });
    auto* w3 = wit->add_subcommand("eqp-y-one", "(y, 1^inf) is not an equicontinuity pair");
    w3->add_option("--n", w_n, "U = [W_0..W_n], V = [1^n]")->capture_default_str();
    w3->add_flag("--validate", validate, "Check every membership fact");
    on(w3, [&] { return certificate_outcome(witness::witness_not_eqp_y_fixed(1, w_n), validate); });
    auto* w4 = wit->add_subcommand("eqp-y-general", "(y, prefix 0^inf) is not an equicontinuity pair");
    w4->add_option("--prefix", w_prefix, "Binary prefix containing both symbols")->capture_default_str();
    w4->add_option("--n", w_n, "n >= |prefix|")->capture_default_str();
    w4->add_flag("--validate", validate, "Check every membership fact");
    on(w4, [&] {
        return certificate_outcome(witness::witness_not_eqp_y_general(RleWord::literal(w_prefix), w_n), validate);
    });
    auto* w5 = wit->add_subcommand("eqp-ex3", "(x3, 0^inf) is not an equicontinuity pair");
    w5->add_option("--u-depth", w_u, "Depth of the x3 prefix U")->capture_default_str();
    w5->add_option("--v-depth", w_v, "V = [0^v-depth]")->capture_default_str();
    w5->add_flag("--validate", validate, "Check every membership fact");
    on(w5, [&] { return certificate_outcome(models::witness_not_eqp_ex3(w_u, w_v), validate); });

    // check pair
    auto* check = app.add_subcommand("check", "Finite-depth pair checks");
    check->require_subcommand(1);
    std::string cp_kind = "evp", cp_model = "s7", cp_x = "x", cp_y = "0inf";
    std::size_t cp_o = 2, cp_uv = 4, cp_orbit = 10'000;
    std::uint64_t cp_horizon = 10'000;
    auto* pair = check->add_subcommand("pair", "Search (U, V) depths satisfying the EqP or EvP implication");
    pair->add_option("--kind", cp_kind, "eqp or evp")->check(CLI::IsMember({"eqp", "evp"}))->capture_default_str();
    pair->add_option("--model", cp_model, "s7, ex2 or ex3")->capture_default_str();
    pair->add_option("--x", cp_x, "Base point")->capture_default_str();
    pair->add_option("--y", cp_y, "Partner point")->capture_default_str();
    pair->add_option("--o-depth", cp_o, "O = [y prefix of this depth]")->capture_default_str();
    pair->add_option("--uv-depth", cp_uv, "Largest U and V depth tried")->capture_default_str();
    pair->add_option("--horizon", cp_horizon, "Time horizon")->capture_default_str();
    pair->add_option("--orbit-depth", cp_orbit, "Generator orbit depth sampled")->capture_default_str();
    on(pair, [&] {
        auto model = models::model_by_name(cp_model, cp_orbit);
        dynamics::PairQuery q;
        q.kind = cp_kind == "eqp" ? dynamics::PairKind::EqP : dynamics::PairKind::EvP;
        q.x = models::parse_point(cp_x, cp_model);
        q.y = models::parse_point(cp_y, cp_model);
        q.o_depth = cp_o;
        q.max_uv_depth = cp_uv;
        q.horizon = cp_horizon;
        auto v = dynamics::check_pair(model, q);
        return Outcome{dynamics::to_string(v.status), dynamics::to_json(v)};
    });

    // hitting
    std::string h_model = "s7", h_u = "1", h_v = "1";
    std::uint64_t h_horizon = 10'000;
    std::size_t h_orbit = 10'000;
    std::optional<std::size_t> h_k;
    auto* hitting = app.add_subcommand("hitting", "Sampled hitting, sensitivity and splitting time sets");
    hitting->add_option("--model", h_model, "s7, ex2 or ex3")->capture_default_str();
    hitting->add_option("--u", h_u, "Cylinder U")->capture_default_str();
    hitting->add_option("--v", h_v, "Cylinder V")->capture_default_str();
    hitting->add_option("--horizon", h_horizon, "Time horizon")->capture_default_str();
    hitting->add_option("--orbit-depth", h_orbit, "Generator orbit depth sampled")->capture_default_str();
    hitting->add_option("--entourage", h_k, "Agreement depth k; adds sensitivity and splitting sets");
    on(hitting, [&] {
        auto model = models::model_by_name(h_model, h_orbit);
        const Cylinder U(parse_cylinder(h_u, model.alphabet_size)), V(parse_cylinder(h_v, model.alphabet_size));
        auto to_stats = [](const dynamics::HittingReport& r) {
            json j = dynamics::to_json(r);
            auto c = dynamics::classify(r);
            j["classification"] = {{"syndetic_evidence", c.max_gap},
                                   {"thick_evidence", c.longest_run},
                                   {"cofinite_evidence", c.complement_count}};
            return j;
        };
        json data = {{"hitting", to_stats(dynamics::hitting_times(model, U, V, h_horizon))}};
        if (h_k) {
            dynamics::EntourageDepth D(*h_k);
            data["sensitivity"] = to_stats(dynamics::sensitivity_times(model, U, D, h_horizon));
            data["splitting"] = to_stats(dynamics::splitting_times(model, U, V, D, h_horizon));
        }
        return Outcome{"verified", data};
    });

    // periodic-scan
    std::size_t ps_max = 4;
    std::uint64_t ps_horizon = 10'000;
    std::string ps_model = "s7";
    auto* periodic = app.add_subcommand("periodic-scan", "Primitive words whose long powers occur in a generator");
    periodic->add_option("--max-period", ps_max, "Largest period")->capture_default_str();
    periodic->add_option("--horizon", ps_horizon, "Occurrence horizon")->capture_default_str();
    periodic->add_option("--model", ps_model, "s7, ex2 or ex3")->capture_default_str();
    on(periodic, [&] {
        auto scan = dynamics::periodic_scan(models::model_by_name(ps_model), ps_max, ps_horizon);
        return Outcome{"verified", dynamics::to_json(scan)};
    });

    // interval ...
    auto* inter = app.add_subcommand("interval", "Exact dynamics of the piecewise-linear example map");
    inter->require_subcommand(1);
    const auto f = interval::example_es_map();
    std::string i_x = "3/4", i_lo = "3/5", i_hi = "4/5", i_eps = "1/1000", i_delta = "1/4", i_grid = "1048576";
    std::size_t i_n = 5, i_n_max = 5, i_k_max = 64, i_count = 101;
    auto* ie = inter->add_subcommand("eval", "f(x)");
    ie->add_option("--x", i_x, "Rational in [0,1]")->capture_default_str();
    on(ie, [&] {
        const Rational x = parse_q(i_x, "--x");
        return Outcome{"verified", {{"x", to_fraction(x)}, {"fx", to_fraction(f.eval(x))}}};
    });
    auto* io = inter->add_subcommand("orbit", "x, f(x), ..., f^n(x)");
    io->add_option("--x", i_x, "Rational in [0,1]")->capture_default_str();
    io->add_option("--n", i_n, "Iterations")->capture_default_str();
    on(io, [&] {
        json vals = json::array();
        for (const auto& v : interval::orbit(f, parse_q(i_x, "--x"), i_n)) vals.push_back(to_fraction(v));
        return Outcome{"verified", {{"orbit", vals}}};
    });
    auto* ic = inter->add_subcommand("constant", "Is f constant on [lo, hi]");
    ic->add_option("--lo", i_lo, "Left end")->capture_default_str();
    ic->add_option("--hi", i_hi, "Right end")->capture_default_str();
    on(ic, [&] {
        auto c = interval::verify_constant_on(f, {parse_q(i_lo, "--lo"), parse_q(i_hi, "--hi")});
        json data = {{"lo", i_lo}, {"hi", i_hi}, {"constant", c.constant}};
        if (c.value) data["value"] = to_fraction(*c.value);
        return Outcome{c.constant ? "verified" : "violated", data};
    });
    auto* ii = inter->add_subcommand("invariant", "Is f([lo, hi]) inside [lo, hi]");
    ii->add_option("--lo", i_lo, "Left end")->capture_default_str();
    ii->add_option("--hi", i_hi, "Right end")->capture_default_str();
    on(ii, [&] {
        const interval::Interval in{parse_q(i_lo, "--lo"), parse_q(i_hi, "--hi")};
        const auto img = f.image(in);
        const bool inv = interval::verify_invariant_interval(f, in);
        return Outcome{inv ? "verified" : "violated",
                       {{"lo", to_fraction(in.lo)},
                        {"hi", to_fraction(in.hi)},
                        {"image", {to_fraction(img.lo), to_fraction(img.hi)}},
                        {"invariant", inv}}};
    });
    auto* iv = inter->add_subcommand("eventual", "Search an eventual-sensitivity witness");
    iv->add_option("--x", i_x, "Base point")->capture_default_str();
    iv->add_option("--eps", i_eps, "Ball radius")->capture_default_str();
    iv->add_option("--delta", i_delta, "Separation constant")->capture_default_str();
    iv->add_option("--n-max", i_n_max, "Largest n")->capture_default_str();
    iv->add_option("--k-max", i_k_max, "Largest k")->capture_default_str();
    iv->add_option("--grid", i_grid, "Grid denominator")->capture_default_str();
    on(iv, [&] {
        interval::WitnessSearch s;
        s.x = parse_q(i_x, "--x");
        s.eps = parse_q(i_eps, "--eps");
        s.delta = parse_q(i_delta, "--delta");
        s.n_max = i_n_max;
        s.k_max = i_k_max;
        s.grid_denominator = parse_big(i_grid, "--grid");
        auto w = interval::eventual_sensitivity_witness(f, s);
        if (!w) return Outcome{"inconclusive", {{"witness", nullptr}}};
        return Outcome{"verified", {{"witness", interval::to_json(*w)}}};
    });
    auto* ip = inter->add_subcommand("plot", "Equally spaced samples plus breakpoints as CSV");
    ip->add_option("--count", i_count, "Number of equally spaced samples")->capture_default_str();
    bool plot_csv = false;
    on(ip, [&] {
        auto samples = interval::plot_samples(f, i_count);
        json rows = json::array();
        for (const auto& [x, fx] : samples) rows.push_back({to_fraction(x), to_fraction(fx)});
        plot_csv = true;
        return Outcome{"verified", {{"samples", rows}, {"csv", interval::plot_csv(samples)}}};
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        result.exit_code = kOk;
        result.output = app.help();
        return result;
    } catch (const CLI::CallForAllHelp& e) {
        result.exit_code = kOk;
        result.output = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = kUsage;
        result.report = {{"command", join(args)}, {"status", "error"}, {"error", e.what()}};
        result.output = result.report.dump() + "\n";
        return result;
    }
    result.output_path = output;
    if (threads > 0) omp_set_num_threads(threads);

    json report = {{"command", join(args)}};
    try {
        require(static_cast<bool>(handler), ErrorKind::Parse, "no command given");
        Outcome o = handler();
        report["status"] = o.status;
        report["data"] = std::move(o.data);
        result.exit_code = exit_code_for(o.status);
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::Inconclusive:
            case ErrorKind::MaterializationRefused:
            case ErrorKind::PrecisionCap:
                report["status"] = "inconclusive";
                result.exit_code = kInconclusive;
                break;
            default:
                report["status"] = "error";
                result.exit_code = kUsage;
        }
        report["error"] = e.what();
    } catch (const std::exception& e) {
        report["status"] = "error";
        report["error"] = e.what();
        result.exit_code = kInternal;
    }
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    result.report = report;
    if (format == "text") {
        result.output = (plot_csv && report.contains("data")) ? report["data"]["csv"].get<std::string>()
                                                              : render_text(report);
    } else {
        result.output = report.dump() + "\n";
    }
    return result;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    Result r = run(args);
    if (r.output_path.empty()) {
        std::cout << r.output << std::flush;
        return r.exit_code;
    }
    // Write next to the target and rename, so readers never see a partial file.
    const std::filesystem::path target(r.output_path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << r.output;
        if (!out) {
            std::cerr << "cannot write " << tmp << "\n";
            return kInternal;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::cerr << "cannot rename " << tmp << " to " << target << ": " << ec.message() << "\n";
        return kInternal;
    }
    return r.exit_code;
}

}  // namespace symdyn::cli
