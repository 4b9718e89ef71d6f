#include "symdyn/dynamics.hpp"

#include "symdyn/error.hpp"

#include <algorithm>

namespace symdyn::dynamics {

using kernels::Sample;
using kernels::SampleSet;
using kernels::Text;

namespace {

constexpr std::uint64_t kMaxHorizon = std::uint64_t{1} << 31;
constexpr std::size_t kMaxWindow = 200'000'000;

// Materialized sample pool: generator windows read from offsets up to the
// orbit depth, limit points and extra points from offset 0 only.
struct Pool {
    std::vector<std::vector<Symbol>> storage;
    std::vector<std::string> names;
    std::vector<std::size_t> max_offset;
    SamplingInfo info;

    void add(const SymbolicPoint& p, std::size_t max_off, std::size_t span) {
        const std::size_t len = max_off + span + 1;
        require(len <= kMaxWindow, ErrorKind::MaterializationRefused,
                "sample window of " + std::to_string(len) + " symbols is too large");
        storage.push_back(p.materialize(len, len));
        names.push_back(p.label());
        max_offset.push_back(max_off);
    }

    std::string label(const Sample& s) const {
        if (s.offset == 0) return names[s.source];
        return "shift(" + names[s.source] + "," + std::to_string(s.offset) + ")";
    }

    SampleSet set() const {
        SampleSet out;
        for (const auto& t : storage) out.texts.emplace_back(t.data(), t.size());
        return out;
    }

    // Every admissible sample whose text starts with `word`.
    std::vector<Sample> starting_with(const std::vector<Symbol>& word) const {
        std::vector<Sample> out;
        for (std::uint32_t i = 0; i < storage.size(); ++i) {
            const auto& t = storage[i];
            for (std::size_t off = 0; off <= max_offset[i]; ++off)
                if (off + word.size() <= t.size() && std::equal(word.begin(), word.end(), t.begin() + off))
                    out.push_back({i, off});
        }
        return out;
    }
};

Pool make_pool(const SpaceModel& model, std::uint64_t horizon, std::size_t span) {
    model.validate();
    require(horizon <= kMaxHorizon, ErrorKind::OutOfRange, "horizon above 2^31");
    Pool pool;
    const std::size_t depth = model.orbit_depth_default;
    for (const auto& g : model.generators) pool.add(g, depth, span);
    for (const auto& p : model.limit_points) pool.add(p, 0, span);
    pool.info.model = model.name;
    pool.info.orbit_depth = depth;
    pool.info.horizon = horizon;
    for (const auto& g : model.generators) pool.info.generators.push_back(g.label());
    for (const auto& p : model.limit_points) pool.info.limit_points.push_back(p.label());
    return pool;
}

std::vector<Symbol> expand_word(const RleWord& w) {
    require(w.length() <= from_u64(kMaxWindow / 4), ErrorKind::MaterializationRefused, "cylinder word too long");
    return w.expand(kMaxWindow);
}

HittingReport finish(std::vector<std::uint64_t> times, std::vector<std::vector<std::string>> witnesses,
                     std::uint64_t horizon, SamplingInfo info) {
    HittingReport r;
    r.times = std::move(times);
    r.witnesses = std::move(witnesses);
    r.horizon = horizon;
    auto c = classify(r.times, horizon);
    r.max_gap = c.max_gap;
    r.longest_run = c.longest_run;
    r.complement_count = c.complement_count;
    r.sampling = std::move(info);
    return r;
}

std::string symbols_to_string(Text t) {
    std::string s;
    for (auto c : t) s += static_cast<char>('0' + c);
    return s;
}

}  // namespace

void SpaceModel::validate() const {
    require(!generators.empty(), ErrorKind::Precondition, "model needs at least one generator");
    for (const auto& g : generators)
        require(g.alphabet_size() == alphabet_size, ErrorKind::AlphabetMismatch, "generator alphabet differs from model");
    for (const auto& p : limit_points)
        require(p.alphabet_size() == alphabet_size, ErrorKind::AlphabetMismatch, "limit point alphabet differs from model");
}

EntourageDepth::EntourageDepth(std::size_t depth) : k(depth) {
    require(depth >= 1, ErrorKind::Precondition, "entourage depth must be >= 1");
}

nlohmann::json to_json(const SamplingInfo& s) {
    return {{"model", s.model},
            {"orbit_depth", s.orbit_depth},
            {"horizon", s.horizon},
            {"generators", s.generators},
            {"limit_points", s.limit_points},
            {"points_sampled", s.points_sampled}};
}

Classification classify(const std::vector<std::uint64_t>& times, std::uint64_t horizon) {
    Classification c;
    std::uint64_t prev = 0, run = 0;
    for (auto t : times) {
        require(t >= 1 && t <= horizon, ErrorKind::OutOfRange, "time outside [1, horizon]");
        require(t > prev, ErrorKind::Precondition, "times must be strictly increasing");
        c.max_gap = std::max(c.max_gap, t - prev);
        run = (run > 0 && t == prev + 1) ? run + 1 : 1;
        c.longest_run = std::max(c.longest_run, run);
        prev = t;
    }
    c.max_gap = std::max(c.max_gap, horizon - prev);
    c.complement_count = horizon - times.size();
    return c;
}

Classification classify(const HittingReport& r) { return classify(r.times, r.horizon); }

HittingReport hitting_times(const SpaceModel& model, const Cylinder& U, const Cylinder& V, std::uint64_t horizon) {
    require(horizon >= 1, ErrorKind::Precondition, "horizon must be >= 1");
    const auto u = expand_word(U.word), v = expand_word(V.word);
    Pool pool = make_pool(model, horizon, horizon + std::max(u.size(), v.size()));
    SampleSet set = pool.set();
    set.samples = pool.starting_with(u);
    pool.info.points_sampled = set.samples.size();

    auto hits = kernels::parallel::hits(set, Text(v.data(), v.size()), horizon);
    std::vector<std::uint64_t> times;
    std::vector<std::vector<std::string>> wit;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (hits[n]) {
            times.push_back(n);
            wit.push_back({pool.label(*hits[n])});
        }
    return finish(std::move(times), std::move(wit), horizon, pool.info);
}

HittingReport sensitivity_times(const SpaceModel& model, const Cylinder& U, EntourageDepth D, std::uint64_t horizon) {
    const auto u = expand_word(U.word);
    Pool pool = make_pool(model, horizon, horizon + std::max(u.size(), D.k));
    SampleSet set = pool.set();
    set.samples = pool.starting_with(u);
    pool.info.points_sampled = set.samples.size();

    auto splits = kernels::parallel::splits(set, D.k, horizon);
    std::vector<std::uint64_t> times;
    std::vector<std::vector<std::string>> wit;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (splits[n]) {
            times.push_back(n);
            wit.push_back({pool.label(splits[n]->first), pool.label(splits[n]->second)});
        }
    return finish(std::move(times), std::move(wit), horizon, pool.info);
}

HittingReport splitting_times(const SpaceModel& model, const Cylinder& U, const Cylinder& V, EntourageDepth D,
                              std::uint64_t horizon) {
    const auto u = expand_word(U.word), v = expand_word(V.word);
    Pool pool = make_pool(model, horizon, horizon + std::max({u.size(), v.size(), D.k}));
    SampleSet set = pool.set();
    set.samples = pool.starting_with(u);
    pool.info.points_sampled = set.samples.size();

    auto hits = kernels::parallel::hits(set, Text(v.data(), v.size()), horizon);
    auto splits = kernels::parallel::splits(set, D.k, horizon);
    std::vector<std::uint64_t> times;
    std::vector<std::vector<std::string>> wit;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (hits[n] && splits[n]) {
            times.push_back(n);
            wit.push_back({pool.label(*hits[n]), pool.label(splits[n]->first), pool.label(splits[n]->second)});
        }
    return finish(std::move(times), std::move(wit), horizon, pool.info);
}

nlohmann::json to_json(const HittingReport& r) {
    nlohmann::json wit = nlohmann::json::array();
    for (std::size_t i = 0; i < r.times.size(); ++i) wit.push_back({{"n", r.times[i]}, {"points", r.witnesses[i]}});
    return {{"times", r.times},
            {"horizon", r.horizon},
            {"max_gap", r.max_gap},
            {"longest_run", r.longest_run},
            {"complement_count", r.complement_count},
            {"witnesses", wit},
            {"sampled", to_json(r.sampling)}};
}

std::string to_string(PairKind k) { return k == PairKind::EqP ? "EqP" : "EvP"; }

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Satisfied: return "satisfied";
        case VerdictStatus::ViolatedUpTo: return "violated";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PairAnalysis::PairAnalysis(const SpaceModel& model, const PairQuery& query) : query_(query) {
    require(query.o_depth >= 1, ErrorKind::Precondition, "O depth must be >= 1");
    require(query.horizon >= 1, ErrorKind::Precondition, "horizon must be >= 1");
    require(query.max_uv_depth >= 1 && query.max_uv_depth <= 1'000'000, ErrorKind::Precondition,
            "U/V depth must be in [1, 10^6]");
    const auto D = static_cast<std::uint32_t>(query.max_uv_depth);
    const auto o_depth = static_cast<std::uint32_t>(query.o_depth);
    const std::uint32_t cap = std::max(D, o_depth);

    Pool pool = make_pool(model, query.horizon, query.horizon + cap);
    pool.add(query.x, 0, query.horizon + cap);
    const std::uint32_t x_source = static_cast<std::uint32_t>(pool.storage.size() - 1);
    const auto y_ref = query.y.materialize(cap, cap);
    const auto& x_text = pool.storage[x_source];
    const Text x_ref(x_text.data(), D);

    SampleSet set = pool.set();
    kernels::PairProblem problem;
    for (std::uint32_t i = 0; i < pool.storage.size(); ++i)
        for (std::size_t off = 0; off <= pool.max_offset[i]; ++off) {
            const std::uint32_t level = kernels::lcp(set.texts[i].subspan(off), x_ref, D);
            if (level == 0) continue;
            set.samples.push_back({i, off});
            problem.level.push_back(level);
        }
    pool.info.points_sampled = set.samples.size();
    problem.set = &set;
    problem.levels = D;
    problem.reference = Text(y_ref.data(), y_ref.size());
    problem.o_depth = o_depth;
    if (query.kind == PairKind::EvP) problem.trigger_text = set.texts[x_source];
    problem.horizon = query.horizon;
    needs_ = kernels::parallel::pair_needs(problem);

    violations_.resize(D + 1);
    for (std::uint32_t d = 1; d <= D; ++d) {
        const auto& e = needs_[d];
        if (!e.violated) continue;
        const Sample& s = set.samples[e.violator];
        PairViolation v;
        v.u_depth = d;
        v.max_v_depth = std::min<std::size_t>(e.need, D);
        v.time = e.time;
        v.point = pool.label(s);
        v.image_prefix = symbols_to_string(set.texts[s.source].subspan(s.offset + e.time, o_depth));
        v.trigger = query.kind == PairKind::EvP ? "shift(" + query.x.label() + "," + std::to_string(e.time) + ")"
                                                : pool.label(set.samples[e.trigger]);
        violations_[d] = v;
    }
    sampling_ = pool.info;
}

bool PairAnalysis::satisfied(std::size_t u_depth, std::size_t v_depth) const {
    require(u_depth >= 1 && u_depth < needs_.size() && v_depth >= 1 && v_depth < needs_.size(), ErrorKind::OutOfRange,
            "U/V depth outside the analysed range");
    const auto& e = needs_[u_depth];
    return !e.violated || e.need < v_depth;
}

Verdict PairAnalysis::verdict() const {
    Verdict v;
    v.kind = query_.kind;
    v.depth = query_.max_uv_depth;
    v.o_depth = query_.o_depth;
    v.horizon = query_.horizon;
    v.sampling = sampling_;
    const std::size_t D = query_.max_uv_depth;
    std::size_t reached = D;
    for (std::size_t m = 1; m <= D && v.status != VerdictStatus::Satisfied; ++m) {
        auto attempt = [&](std::size_t du, std::size_t dv) {
            if (v.status == VerdictStatus::Satisfied) return;
            ++v.pairs_tried;
            if (satisfied(du, dv)) {
                v.status = VerdictStatus::Satisfied;
                v.u_depth = du;
                v.v_depth = dv;
                reached = m;
            }
        };
        for (std::size_t du = 1; du < m; ++du) attempt(du, m);
        for (std::size_t dv = 1; dv <= m; ++dv) attempt(m, dv);
    }
    if (v.status != VerdictStatus::Satisfied) v.status = VerdictStatus::ViolatedUpTo;
    for (std::size_t d = 1; d <= reached; ++d)
        if (needs_[d].violated) v.violations.push_back(violations_[d]);
    return v;
}

Verdict check_pair(const SpaceModel& model, const PairQuery& query) { return PairAnalysis(model, query).verdict(); }

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& w : v.violations)
        viol.push_back({{"U_depth", w.u_depth},
                        {"V_depths", {1, w.max_v_depth}},
                        {"n", w.time},
                        {"point", w.point},
                        {"image_prefix", w.image_prefix},
                        {"trigger", w.trigger}});
    nlohmann::json j = {{"op", "check_pair"},
                        {"kind", to_string(v.kind)},
                        {"status", to_string(v.status)},
                        {"O_depth", v.o_depth},
                        {"depth", v.depth},
                        {"horizon", v.horizon},
                        {"pairs_tried", v.pairs_tried},
                        {"violations", viol},
                        {"sampled", to_json(v.sampling)}};
    if (v.status == VerdictStatus::Satisfied) {
        j["U_depth"] = v.u_depth;
        j["V_depth"] = v.v_depth;
    }
    return j;
}

TrivialScan trivial_pair_scan(const SpaceModel& model, const SymbolicPoint& x, const SymbolicPoint& y,
                              std::size_t depth, std::uint64_t horizon) {
    require(depth >= 1, ErrorKind::Precondition, "depth must be >= 1");
    TrivialScan s;
    s.hits = hitting_times(model, Cylinder(x.prefix(from_u64(depth))), Cylinder(y.prefix(from_u64(depth))), horizon);
    if (!s.hits.times.empty()) s.last_hit = s.hits.times.back();
    // Gaps between hits can grow faster than any horizon, so the sampled
    // times alone say little; the structural recurrence search decides.
    s.eventually_empty_evidence = !omega_membership_evidence(x, y, depth, horizon).recurrent;
    return s;
}

namespace {

RunStream with_budget(RunStream inner, std::size_t budget) {
    return [inner = std::move(inner), budget]() mutable -> std::optional<StreamRun> {
        if (budget == 0) return std::nullopt;
        --budget;
        return inner();
    };
}

}  // namespace

OmegaEvidence omega_membership_evidence(const SymbolicPoint& p, const SymbolicPoint& candidate, std::size_t depth,
                                        std::uint64_t horizon, std::size_t run_budget) {
    require(depth >= 1, ErrorKind::Precondition, "depth must be >= 1");
    const RleWord word = candidate.prefix(from_u64(depth));
    const BigInt unbounded = pow_u(2, 4096);
    OmegaEvidence ev;
    ev.recurrent = true;
    for (std::uint64_t i = 0; i <= 8; ++i) {
        const std::uint64_t N = horizon * i / 8;
        auto hit = find_first(with_budget(p.shift(from_u64(N)).runs(), run_budget), word, unbounded);
        if (hit) *hit += from_u64(N);
        ev.checkpoints.emplace_back(N, hit);
        ev.recurrent = ev.recurrent && hit.has_value();
    }
    return ev;
}

namespace {

bool primitive(const std::vector<Symbol>& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < w.size() && periodic; ++i) periodic = w[i] == w[i - d];
        if (periodic) return false;
    }
    return true;
}

RleWord word_of(const std::vector<Symbol>& w, unsigned alphabet) {
    std::vector<Run> runs;
    for (auto s : w) runs.push_back(Run{s, 1});
    return RleWord::make(alphabet, runs);
}

}  // namespace

PeriodicScan periodic_scan(const SpaceModel& model, std::size_t max_period, std::uint64_t horizon) {
    require(max_period >= 1, ErrorKind::Precondition, "max period must be >= 1");
    require(model.alphabet_size <= 10, ErrorKind::Precondition, "periodic scan prints words with digit symbols");
    model.validate();
    PeriodicScan scan;
    scan.max_period = max_period;
    scan.horizon = horizon;
    const BigInt h = from_u64(horizon);
    for (std::size_t len = 1; len <= max_period; ++len) {
        std::vector<Symbol> w(len, 0);
        while (true) {
            if (primitive(w)) {
                PeriodicCandidate c;
                c.word = symbols_to_string(Text(w.data(), w.size()));
                const std::uint64_t reps = std::max<std::uint64_t>(1, horizon / len);
                c.repetition_cap = std::max<std::uint64_t>(8, horizon / len);
                c.repetitions = std::min(reps, c.repetition_cap);
                const RleWord base = word_of(w, model.alphabet_size);
                // Cheap filter: w^2 must already occur within the horizon.
                const RleWord probe = power(base, std::min<std::uint64_t>(2, c.repetitions));
                const RleWord full = power(base, c.repetitions);
                for (const auto& g : model.generators) {
                    if (!find_first(g.runs(), probe, h)) continue;
                    if (auto at = find_first(g.runs(), full, h)) {
                        c.survived = true;
                        c.found_in = g.label();
                        c.position = *at;
                        break;
                    }
                }
                if (c.survived) scan.survivors.push_back(c.word);
                scan.candidates.push_back(std::move(c));
            }
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1u == model.alphabet_size) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return scan;
}

nlohmann::json to_json(const PeriodicScan& s) {
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : s.candidates) {
        nlohmann::json j = {{"word", c.word},
                            {"repetitions", c.repetitions},
                            {"repetition_cap", c.repetition_cap},
                            {"survived", c.survived}};
        if (c.survived) {
            j["found_in"] = c.found_in;
            j["position"] = to_decimal(*c.position);
        }
        cands.push_back(j);
    }
    return {{"max_period", s.max_period}, {"horizon", s.horizon}, {"candidates", cands}, {"survivors", s.survivors}};
}

}  // namespace symdyn::dynamics
