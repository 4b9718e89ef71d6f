#include "symdyn/models.hpp"

#include "symdyn/construction.hpp"
#include "symdyn/error.hpp"

#include <algorithm>

namespace symdyn::models {

SpaceModel xy_model(std::size_t orbit_depth) {
    SpaceModel m;
    m.name = "s7";
    m.generators = {construction::point_x(), construction::point_y()};
    m.limit_points = {SymbolicPoint::fixed(0), SymbolicPoint::fixed(1),
                      SymbolicPoint::eventually_periodic(RleWord::literal("1"), RleWord::literal("0"))};
    m.orbit_depth_default = orbit_depth;
    return m;
}

SpaceModel single_point_model(const SymbolicPoint& p, std::size_t orbit_depth) {
    SpaceModel m;
    m.name = "single:" + p.label();
    m.alphabet_size = p.alphabet_size();
    m.generators = {p};
    m.orbit_depth_default = orbit_depth;
    return m;
}

namespace {

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t low_bits(const BigInt& v) { return mpz_getlimbn(v.get_mpz_t(), 0); }

}  // namespace

Symbol Chooser::pick(unsigned m, std::uint64_t member, const BigInt& k, const BigInt& i) const {
    std::uint64_t v = 0;
    switch (kind) {
        case Kind::Constant: v = member + seed; break;
        case Kind::Cyclic: v = member + seed + low_bits(k) + low_bits(i); break;
        case Kind::Hashed: v = mix(mix(mix(seed ^ member) ^ low_bits(k)) ^ low_bits(i)); break;
    }
    return static_cast<Symbol>(1 + v % m);
}

std::string to_string(Chooser::Kind k) {
    switch (k) {
        case Chooser::Kind::Constant: return "constant";
        case Chooser::Kind::Cyclic: return "cyclic";
        case Chooser::Kind::Hashed: return "hashed";
    }
    return "cyclic";
}

Chooser::Kind parse_chooser(const std::string& name) {
    if (name == "constant") return Chooser::Kind::Constant;
    if (name == "cyclic") return Chooser::Kind::Cyclic;
    if (name == "hashed") return Chooser::Kind::Hashed;
    throw Error(ErrorKind::Parse, "unknown chooser '" + name + "'");
}

FamilyMember::FamilyMember(unsigned m, Chooser chooser, std::uint64_t member)
    : m_(m), chooser_(chooser), member_(member) {
    require(m >= 2 && m < kMaxAlphabet, ErrorKind::Precondition, "need 2 <= m < 256");
}

LeafRun FamilyMember::leaf_at(const Position& q) const {
    // Largest k >= 1 with k(k-1) <= q.
    BigInt s;
    BigInt d = 4 * q + 1;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    BigInt k = (s + 1) / 2;
    while (k * (k - 1) > q) --k;
    while ((k + 1) * k <= q) ++k;
    const BigInt w_start = k * (k - 1);
    const BigInt z_start = k * k;
    if (q >= z_start) return LeafRun{0, z_start, z_start + k - 1};
    if (chooser_.kind == Chooser::Kind::Constant)
        return LeafRun{chooser_.pick(m_, member_, k, 0), w_start, z_start - 1};
    return LeafRun{chooser_.pick(m_, member_, k, q - w_start), q, q};
}

nlohmann::json FamilyMember::descriptor() const {
    return {{"kind", "ex2_member"},
            {"params",
             {{"m", m_}, {"chooser", to_string(chooser_.kind)}, {"seed", chooser_.seed}, {"member", member_}}}};
}

std::string FamilyMember::name() const { return "w" + std::to_string(member_); }

SymbolicPoint family_member(unsigned m, Chooser chooser, std::uint64_t member) {
    return SymbolicPoint(std::make_shared<FamilyMember>(m, chooser, member));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_block_schedule(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t k = 1; k * k <= limit; ++k) out.emplace_back(k * k, k * k + k - 1);
    return out;
}

SpaceModel example_family_model(unsigned m, Chooser chooser, std::size_t count, std::size_t orbit_depth) {
    require(m >= 2, ErrorKind::Precondition, "need m >= 2");
    require(count >= 1, ErrorKind::Precondition, "need at least one member");
    SpaceModel model;
    model.name = "ex2";
    model.alphabet_size = m + 1;
    for (std::size_t i = 0; i < count; ++i) model.generators.push_back(family_member(m, chooser, i));
    model.generators.push_back(SymbolicPoint::fixed(0, m + 1));
    model.limit_points = {SymbolicPoint::fixed(0, m + 1)};
    model.orbit_depth_default = orbit_depth;
    model.zero_block_schedule = zero_block_schedule(orbit_depth);
    return model;
}

IndependenceCheck member_independence(const SpaceModel& model, std::uint64_t horizon, std::size_t max_n) {
    IndependenceCheck out;
    std::vector<std::vector<std::uint32_t>> zeros;
    for (const auto& g : model.generators) {
        if (g.generator().descriptor().value("kind", "") != "ex2_member") continue;
        const auto text = g.materialize(horizon + max_n + 1, horizon + max_n + 1);
        zeros.push_back(kernels::run_lengths(kernels::Text(text.data(), text.size()), 0));
    }
    out.members = zeros.size();
    require(!zeros.empty(), ErrorKind::Precondition, "model has no family members");
    for (std::uint64_t t = 0; t <= horizon && out.holds; ++t, ++out.times_checked) {
        const auto ref = std::min<std::uint32_t>(zeros.front()[t], max_n);
        for (const auto& z : zeros) {
            const auto here = std::min<std::uint32_t>(z[t], max_n);
            if (here != ref) {
                out.holds = false;
                out.counterexample = std::make_pair(t, static_cast<std::size_t>(std::min(here, ref) + 1));
                break;
            }
        }
    }
    return out;
}

Position block_start(std::size_t k) {
    require(k >= 1, ErrorKind::Precondition, "blocks are numbered from 1");
    const BigInt kk = from_u64(k);
    return (kk - 1) * (kk + 2) / 2;
}

LeafRun BlockSequence::leaf_at(const Position& q) const {
    BigInt s;
    BigInt d = 8 * q + 9;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    BigInt k = (s - 1) / 2;
    auto start = [](const BigInt& j) -> BigInt { return (j - 1) * (j + 2) / 2; };
    if (k < 1) k = 1;
    while (start(k) > q) --k;
    while (start(k + 1) <= q) ++k;
    const BigInt at = start(k);
    if (q == at) return LeafRun{1, at, at};
    return LeafRun{0, at + 1, at + k};
}

nlohmann::json BlockSequence::descriptor() const {
    return {{"kind", "ex3_x"}, {"params", nlohmann::json::object()}};
}

SymbolicPoint block_sequence() { return SymbolicPoint(std::make_shared<BlockSequence>()); }

SymbolicPoint truncated_block_sequence(std::size_t n) {
    require(n >= 1, ErrorKind::Precondition, "z_n needs n >= 1");
    std::vector<Run> runs;
    for (std::size_t k = 1; k <= n; ++k) {
        runs.push_back(Run{1, 1});
        runs.push_back(Run{0, from_u64(k)});
    }
    return SymbolicPoint::eventually_periodic(RleWord::make(2, runs), RleWord::literal("0"));
}

SpaceModel evcty_example_model(std::size_t z_bound, std::size_t orbit_depth) {
    SpaceModel m;
    m.name = "ex3";
    m.generators.push_back(block_sequence());
    for (std::size_t n = 1; n <= z_bound; ++n) m.generators.push_back(truncated_block_sequence(n));
    m.generators.push_back(SymbolicPoint::fixed(0));
    for (std::size_t k = 0; k <= z_bound; ++k) {
        RleWord pre = k == 0 ? RleWord::literal("1") : concat(RleWord::repeat(0, from_u64(k)), RleWord::literal("1"));
        m.limit_points.push_back(SymbolicPoint::eventually_periodic(pre, RleWord::literal("0")));
    }
    m.limit_points.push_back(SymbolicPoint::fixed(0));
    m.orbit_depth_default = orbit_depth;
    return m;
}

witness::WitnessCertificate witness_not_eqp_ex3(std::size_t u_depth, std::size_t v_depth) {
    require(u_depth >= 1 && v_depth >= 1, ErrorKind::Precondition, "depths must be >= 1");
    // Least N such that X_1 .. X_N covers the U prefix.
    std::size_t N = 1;
    while (block_start(N + 1) < from_u64(u_depth)) ++N;
    const SymbolicPoint x = block_sequence();
    const SymbolicPoint z = truncated_block_sequence(N);

    witness::WitnessCertificate w;
    w.claim = witness::Claim::NotEqP_ex3_x_0inf;
    w.time = block_start(N + 1);
    w.parameters = {{"u_depth", from_u64(u_depth)}, {"N", from_u64(N)}, {"k", w.time}};
    w.O = RleWord::literal("0");
    w.U = x.prefix(from_u64(u_depth));
    w.V = RleWord::repeat(0, from_u64(v_depth));
    w.comparison_point = z;
    w.facts = {
        {"x in U", x, false, w.U, true},
        {"z_N in U", z, false, w.U, true},
        {"shift(z_N,k) in V", z, true, w.V, true},
        {"shift(x,k) in [1]", x, true, RleWord::literal("1"), true},
        {"shift(x,k) in O", x, true, w.O, false},
    };
    return w;
}

namespace {

std::size_t parse_index(const std::string& text, const std::string& what) {
    const BigInt v = parse_decimal(text);
    require(fits_u64(v) && v <= 1'000'000, ErrorKind::Parse, what + " index out of range");
    return to_u64(v);
}

bool digits_only(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

unsigned model_alphabet(const std::string& model) { return model == "ex2" ? 3 : 2; }

}  // namespace

SymbolicPoint parse_point(const std::string& text, const std::string& model) {
    const unsigned alphabet = model_alphabet(model);
    if (text == "x") {
        if (model == "ex3") return block_sequence();
        if (model == "ex2") return family_member(2, Chooser{}, 0);
        return construction::point_x();
    }
    if (text == "y") return construction::point_y();
    if (text == "x3") return block_sequence();
    if (text == "0inf") return SymbolicPoint::fixed(0, alphabet);
    if (text == "1inf") return SymbolicPoint::fixed(1, alphabet);
    if (text == "10inf")
        return SymbolicPoint::eventually_periodic(RleWord::literal("1", alphabet), RleWord::literal("0", alphabet));
    auto colon = text.find(':');
    require(colon != std::string::npos, ErrorKind::Parse, "unknown point '" + text + "'");
    const std::string head = text.substr(0, colon), rest = text.substr(colon + 1);
    if (head == "closing") return construction::closing_point(parse_index(rest, "closing"));
    if (head == "z") return truncated_block_sequence(parse_index(rest, "z"));
    if (head == "member") return family_member(2, Chooser{}, parse_index(rest, "member"));
    if (head == "ev") {
        auto second = rest.find(':');
        require(second != std::string::npos, ErrorKind::Parse, "ev points are ev:<preperiod>:<period>");
        const std::string pre = rest.substr(0, second), per = rest.substr(second + 1);
        require((pre.empty() || digits_only(pre)) && digits_only(per), ErrorKind::Parse, "ev words must be digits");
        RleWord pw = pre.empty() ? RleWord(alphabet) : RleWord::literal(pre, alphabet);
        return SymbolicPoint::eventually_periodic(pw, RleWord::literal(per, alphabet));
    }
    throw Error(ErrorKind::Parse, "unknown point '" + text + "'");
}

SpaceModel model_by_name(const std::string& name, std::size_t orbit_depth) {
    if (name == "s7") return xy_model(orbit_depth);
    if (name == "ex2") return example_family_model(2, Chooser{}, 2, orbit_depth);
    if (name == "ex3") return evcty_example_model(16, orbit_depth);
    throw Error(ErrorKind::Parse, "unknown model '" + name + "' (expected s7, ex2 or ex3)");
}

}  // namespace symdyn::models
