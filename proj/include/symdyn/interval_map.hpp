#pragma once

// Continuous piecewise-linear self-maps of [0,1] with rational data, iterated
// exactly.

#include "symdyn/bigint.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symdyn::interval {

struct Interval {
    Rational lo, hi;
};

struct Piece {
    Interval domain;
    Rational slope, intercept;

    Rational at(const Rational& x) const { return slope * x + intercept; }
};

class PiecewiseLinearMap {
public:
    // Pieces must tile [0,1] in order, agree at shared endpoints and map
    // into [0,1].
    explicit PiecewiseLinearMap(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    Rational eval(const Rational& x) const;
    std::vector<Rational> interior_breakpoints() const;
    // Left and right pieces agree exactly at b.
    bool continuous_at(const Rational& b) const;
    // Exact image of [lo, hi] (an interval, since the map is continuous).
    Interval image(const Interval& i) const;

private:
    std::vector<Piece> pieces_;
};

// 2x on [0,1/4], 1-2x on [1/4,1/2], (10/3)x-5/3 on [1/2,3/5], 1/3 on
// [3/5,4/5], (10/3)x-7/3 on [4/5,1].
PiecewiseLinearMap example_es_map();

Rational eval(const PiecewiseLinearMap& f, const Rational& x);

constexpr std::size_t kDefaultBitCap = 1 << 14;

// [x0, f(x0), ..., f^n(x0)]; PrecisionCap once a numerator or denominator
// exceeds bit_cap bits.
std::vector<Rational> orbit(const PiecewiseLinearMap& f, const Rational& x0, std::size_t n,
                            std::size_t bit_cap = kDefaultBitCap);

struct ConstantCheck {
    bool constant = false;
    std::optional<Rational> value;
};

// A single slope-0 piece covers the interval.
ConstantCheck verify_constant_on(const PiecewiseLinearMap& f, const Interval& i);
bool verify_invariant_interval(const PiecewiseLinearMap& f, const Interval& i);

struct EventualSensitivityWitness {
    Rational x, eps, delta;
    std::size_t n = 0, k = 0;
    Rational y;
    Rational fn_x;        // f^n(x)
    Rational separation;  // |f^(n+k)(x) - f^k(y)|
};

struct WitnessSearch {
    Rational x;
    Rational eps;
    Rational delta{1, 4};
    std::size_t n_max = 5;
    std::size_t k_max = 64;
    BigInt grid_denominator{1 << 20};
};

// First witness in (n, y, k) order: n in [1, n_max], y = j/grid ascending
// with |y - f^n(x)| < eps and y in [0,1], k in [1, k_max].
std::optional<EventualSensitivityWitness> eventual_sensitivity_witness(const PiecewiseLinearMap& f,
                                                                      const WitnessSearch& s);
// Plain nested loops; kept as the reference for the parallel search.
std::optional<EventualSensitivityWitness> eventual_sensitivity_witness_serial(const PiecewiseLinearMap& f,
                                                                             const WitnessSearch& s);

// count equally spaced points of [0,1] plus every breakpoint, sorted.
std::vector<std::pair<Rational, Rational>> plot_samples(const PiecewiseLinearMap& f, std::size_t count);
// Header "x,fx"; values rounded to 12 decimals (lossy).
std::string plot_csv(const std::vector<std::pair<Rational, Rational>>& samples);
// Exact value rounded half away from zero to `digits` decimals.
std::string to_decimal_string(const Rational& q, unsigned digits = 12);

nlohmann::json to_json(const EventualSensitivityWitness& w);

}  // namespace symdyn::interval
