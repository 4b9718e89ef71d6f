#include "symdyn/interval_map.hpp"

#include "symdyn/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace symdyn::interval {

namespace {

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

bool in_unit(const Rational& v) { return v >= 0 && v <= 1; }

}  // namespace

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    require(!pieces_.empty(), ErrorKind::Precondition, "map needs at least one piece");
    require(pieces_.front().domain.lo == 0 && pieces_.back().domain.hi == 1, ErrorKind::Precondition,
            "pieces must cover [0,1]");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        require(p.domain.lo < p.domain.hi, ErrorKind::Precondition, "piece domains must be nondegenerate");
        require(in_unit(p.at(p.domain.lo)) && in_unit(p.at(p.domain.hi)), ErrorKind::Precondition,
                "piece range leaves [0,1]");
        if (i + 1 < pieces_.size()) {
            require(p.domain.hi == pieces_[i + 1].domain.lo, ErrorKind::Precondition, "piece endpoints must match");
            require(continuous_at(p.domain.hi), ErrorKind::Precondition,
                    "map is discontinuous at " + to_fraction(p.domain.hi));
        }
    }
}

Rational PiecewiseLinearMap::eval(const Rational& x) const {
    require(in_unit(x), ErrorKind::DomainError, "x = " + to_fraction(x) + " is outside [0,1]");
    for (const auto& p : pieces_)
        if (x <= p.domain.hi) return p.at(x);
    return pieces_.back().at(x);
}

std::vector<Rational> PiecewiseLinearMap::interior_breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) out.push_back(pieces_[i].domain.hi);
    return out;
}

bool PiecewiseLinearMap::continuous_at(const Rational& b) const {
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (pieces_[i].domain.hi == b) return pieces_[i].at(b) == pieces_[i + 1].at(b);
    return true;  // not a breakpoint: inside an affine piece
}

Interval PiecewiseLinearMap::image(const Interval& i) const {
    require(i.lo <= i.hi && in_unit(i.lo) && in_unit(i.hi), ErrorKind::DomainError, "interval must lie in [0,1]");
    std::optional<Interval> out;
    for (const auto& p : pieces_) {
        const Rational a = std::max(p.domain.lo, i.lo), b = std::min(p.domain.hi, i.hi);
        if (a > b) continue;
        Rational u = p.at(a), v = p.at(b);
        if (u > v) std::swap(u, v);
        if (!out) {
            out = Interval{u, v};
        } else {
            out->lo = std::min(out->lo, u);
            out->hi = std::max(out->hi, v);
        }
    }
    return *out;
}

PiecewiseLinearMap example_es_map() {
    return PiecewiseLinearMap({
        {{q(0), q(1, 4)}, q(2), q(0)},
        {{q(1, 4), q(1, 2)}, q(-2), q(1)},
        {{q(1, 2), q(3, 5)}, q(10, 3), q(-5, 3)},
        {{q(3, 5), q(4, 5)}, q(0), q(1, 3)},
        {{q(4, 5), q(1)}, q(10, 3), q(-7, 3)},
    });
}

Rational eval(const PiecewiseLinearMap& f, const Rational& x) { return f.eval(x); }

namespace {

void check_bits(const Rational& v, std::size_t bit_cap) {
    const std::size_t bits = std::max(mpz_sizeinbase(v.get_num_mpz_t(), 2), mpz_sizeinbase(v.get_den_mpz_t(), 2));
    require(bits <= bit_cap, ErrorKind::PrecisionCap,
            "orbit value needs " + std::to_string(bits) + " bits, cap is " + std::to_string(bit_cap));
}

}  // namespace

std::vector<Rational> orbit(const PiecewiseLinearMap& f, const Rational& x0, std::size_t n, std::size_t bit_cap) {
    std::vector<Rational> out{x0};
    check_bits(x0, bit_cap);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(f.eval(out.back()));
        check_bits(out.back(), bit_cap);
    }
    return out;
}

ConstantCheck verify_constant_on(const PiecewiseLinearMap& f, const Interval& i) {
    require(i.lo <= i.hi && in_unit(i.lo) && in_unit(i.hi), ErrorKind::DomainError, "interval must lie in [0,1]");
    for (const auto& p : f.pieces())
        if (p.slope == 0 && p.domain.lo <= i.lo && i.hi <= p.domain.hi) return {true, p.intercept};
    return {};
}

bool verify_invariant_interval(const PiecewiseLinearMap& f, const Interval& i) {
    const Interval img = f.image(i);
    return i.lo <= img.lo && img.hi <= i.hi;
}

namespace {

struct Prepared {
    std::vector<Rational> x_orbit;  // f^0(x) .. f^(n_max + k_max)(x)
    BigInt grid;
};

Prepared prepare(const PiecewiseLinearMap& f, const WitnessSearch& s) {
    require(s.eps > 0 && s.delta > 0, ErrorKind::Precondition, "eps and delta must be positive");
    require(s.grid_denominator >= 1, ErrorKind::Precondition, "grid denominator must be >= 1");
    return {orbit(f, s.x, s.n_max + s.k_max), s.grid_denominator};
}

// Grid indices j with |j/G - c| < eps and 0 <= j/G <= 1.
std::pair<BigInt, BigInt> grid_range(const Rational& c, const Rational& eps, const BigInt& G) {
    const Rational lo = (c - eps) * G, hi = (c + eps) * G;
    BigInt jlo, jhi;
    mpz_fdiv_q(jlo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    jlo += 1;  // strictly above lo
    mpz_cdiv_q(jhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    jhi -= 1;  // strictly below hi
    if (jlo < 0) jlo = 0;
    if (jhi > G) jhi = G;
    return {jlo, jhi};
}

// Least k in [1, k_max] separating y from the x orbit, if any.
std::optional<std::pair<std::size_t, Rational>> first_k(const PiecewiseLinearMap& f, const Prepared& pre,
                                                        const WitnessSearch& s, std::size_t n, Rational y) {
    for (std::size_t k = 1; k <= s.k_max; ++k) {
        y = f.eval(y);
        Rational sep = abs(pre.x_orbit[n + k] - y);
        if (sep >= s.delta) return std::make_pair(k, sep);
    }
    return std::nullopt;
}

EventualSensitivityWitness make_witness(const WitnessSearch& s, const Prepared& pre, std::size_t n, std::size_t k,
                                        const Rational& y, const Rational& sep) {
    EventualSensitivityWitness w;
    w.x = s.x;
    w.eps = s.eps;
    w.delta = s.delta;
    w.n = n;
    w.k = k;
    w.y = y;
    w.fn_x = pre.x_orbit[n];
    w.separation = sep;
    return w;
}

}  // namespace

std::optional<EventualSensitivityWitness> eventual_sensitivity_witness_serial(const PiecewiseLinearMap& f,
                                                                             const WitnessSearch& s) {
    const Prepared pre = prepare(f, s);
    for (std::size_t n = 1; n <= s.n_max; ++n) {
        auto [jlo, jhi] = grid_range(pre.x_orbit[n], s.eps, pre.grid);
        for (BigInt j = jlo; j <= jhi; ++j) {
            Rational y(j, pre.grid);
            y.canonicalize();
            if (auto hit = first_k(f, pre, s, n, y)) return make_witness(s, pre, n, hit->first, y, hit->second);
        }
    }
    return std::nullopt;
}

std::optional<EventualSensitivityWitness> eventual_sensitivity_witness(const PiecewiseLinearMap& f,
                                                                      const WitnessSearch& s) {
    const Prepared pre = prepare(f, s);
    // Orbits stay in [0,1], so no separation exceeds 1.
    if (s.delta > 1) return std::nullopt;
    for (std::size_t n = 1; n <= s.n_max; ++n) {
        auto [jlo, jhi] = grid_range(pre.x_orbit[n], s.eps, pre.grid);
        if (jlo > jhi) continue;
        const BigInt span = jhi - jlo + 1;
        require(fits_u64(span) && span <= 100'000'000, ErrorKind::Precondition, "grid window too large");
        const auto count = static_cast<std::int64_t>(to_u64(span));
        // Least grid offset with a witness; other threads stop past it.
        std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) continue;
            Rational y(jlo + i, pre.grid);
            y.canonicalize();
            if (first_k(f, pre, s, n, y)) {
                std::int64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        if (best.load() != std::numeric_limits<std::int64_t>::max()) {
            Rational y(jlo + best.load(), pre.grid);
            y.canonicalize();
            auto hit = first_k(f, pre, s, n, y);
            return make_witness(s, pre, n, hit->first, y, hit->second);
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Rational, Rational>> plot_samples(const PiecewiseLinearMap& f, std::size_t count) {
    require(count >= 2, ErrorKind::Precondition, "need at least two samples");
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < count; ++i) xs.push_back(q(static_cast<long>(i), static_cast<long>(count - 1)));
    xs.push_back(q(0));
    xs.push_back(q(1));
    for (const auto& b : f.interior_breakpoints()) xs.push_back(b);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& x : xs) out.emplace_back(x, f.eval(x));
    return out;
}

std::string to_decimal_string(const Rational& v, unsigned digits) {
    const BigInt scale = pow_u(10, digits);
    Rational scaled = abs(v) * scale + Rational(1, 2);
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    BigInt whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), r.get_mpz_t(), scale.get_mpz_t());
    std::string f = to_decimal(frac);
    f.insert(0, digits - f.size(), '0');
    std::string out = (v < 0 && r != 0 ? "-" : "") + to_decimal(whole);
    if (digits > 0) out += "." + f;
    return out;
}

std::string plot_csv(const std::vector<std::pair<Rational, Rational>>& samples) {
    std::string out = "x,fx\n";
    for (const auto& [x, fx] : samples) out += to_decimal_string(x) + "," + to_decimal_string(fx) + "\n";
    return out;
}

nlohmann::json to_json(const EventualSensitivityWitness& w) {
    return {{"x", to_fraction(w.x)},       {"eps", to_fraction(w.eps)},
            {"delta", to_fraction(w.delta)}, {"n", w.n},
            {"k", w.k},                       {"y", to_fraction(w.y)},
            {"fn_x", to_fraction(w.fn_x)},   {"separation", to_fraction(w.separation)}};
}

}  // namespace symdyn::interval
