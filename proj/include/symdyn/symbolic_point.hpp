#pragma once

// Lazily addressable one-sided infinite sequences. A point is a stateless
// generator (a pure position resolver) plus an accumulated shift offset.

#include "symdyn/rle_word.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symdyn {

// A run of the generator's raw block structure containing some position.
// Leaves need not be maximal; end == nullopt marks an infinite tail.
struct LeafRun {
    Symbol symbol = 0;
    Position start;
    std::optional<Position> end;
};

class Generator {
public:
    virtual ~Generator() = default;

    virtual unsigned alphabet_size() const = 0;
    // Must be a pure function of (parameters, q), q >= 0.
    virtual LeafRun leaf_at(const Position& q) const = 0;
    // {"kind": ..., "params": {...}}; also the identity used by point equality.
    virtual nlohmann::json descriptor() const = 0;
    virtual std::string name() const = 0;
};

struct Cylinder {
    RleWord word;

    explicit Cylinder(RleWord w);
};

// Maximal run in the point's own coordinates. A run that never ends has no end.
struct RunLocation {
    Symbol symbol = 0;
    Position start;
    std::optional<Position> end;

    bool infinite() const noexcept { return !end.has_value(); }
};

class SymbolicPoint {
public:
    SymbolicPoint(std::shared_ptr<const Generator> generator, Position offset = 0);

    static SymbolicPoint eventually_periodic(const RleWord& preperiod, const RleWord& period);
    // a^infinity
    static SymbolicPoint fixed(Symbol a, unsigned alphabet_size = 2);

    Symbol symbol_at(const Position& q) const;
    SymbolicPoint shift(const Position& t) const;
    RunLocation run_locate(const Position& q) const;
    bool in_cylinder(const Cylinder& c) const;
    bool in_cylinder(const RleWord& w) const { return in_cylinder(Cylinder(w)); }

    // First L symbols. The bound is on the run count of the result.
    RleWord prefix(const Position& length, std::size_t run_cap = kDefaultMaterializationCap) const;
    // Expanded first `length` symbols.
    std::vector<Symbol> materialize(std::size_t length, std::size_t cap = kDefaultMaterializationCap) const;

    // Maximal runs starting at position 0 (the first one possibly clipped).
    RunStream runs() const;

    unsigned alphabet_size() const { return generator_->alphabet_size(); }
    const Generator& generator() const { return *generator_; }
    const std::shared_ptr<const Generator>& generator_ptr() const { return generator_; }
    const Position& offset() const noexcept { return offset_; }

    nlohmann::json descriptor() const;
    std::string label() const;

    friend bool operator==(const SymbolicPoint& a, const SymbolicPoint& b);

private:
    // End of the maximal run containing absolute position of `leaf`.
    std::optional<Position> extend_forward(LeafRun leaf) const;

    std::shared_ptr<const Generator> generator_;
    Position offset_;
};

// Prefix comparison of two points over their first `length` symbols.
bool eq_up_to(const SymbolicPoint& a, const SymbolicPoint& b, const Position& length);

// preperiod . period^infinity
class EventuallyPeriodic final : public Generator {
public:
    EventuallyPeriodic(RleWord preperiod, RleWord period);

    unsigned alphabet_size() const override { return period_.alphabet_size(); }
    LeafRun leaf_at(const Position& q) const override;
    nlohmann::json descriptor() const override;
    std::string name() const override;

    const RleWord& preperiod() const { return preperiod_; }
    const RleWord& period() const { return period_; }

private:
    RleWord preperiod_;
    RleWord period_;
};

}  // namespace symdyn
