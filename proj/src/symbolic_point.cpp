#include "symdyn/symbolic_point.hpp"

#include "symdyn/error.hpp"

namespace symdyn {

Cylinder::Cylinder(RleWord w) : word(std::move(w)) {
    require(!word.empty(), ErrorKind::InvalidPattern, "cylinder word must be nonempty");
}

SymbolicPoint::SymbolicPoint(std::shared_ptr<const Generator> generator, Position offset)
    : generator_(std::move(generator)), offset_(std::move(offset)) {
    require(generator_ != nullptr, ErrorKind::Precondition, "point needs a generator");
    require(offset_ >= 0, ErrorKind::OutOfRange, "negative shift offset");
}

SymbolicPoint SymbolicPoint::eventually_periodic(const RleWord& preperiod, const RleWord& period) {
    return SymbolicPoint(std::make_shared<EventuallyPeriodic>(preperiod, period));
}

SymbolicPoint SymbolicPoint::fixed(Symbol a, unsigned alphabet_size) {
    return eventually_periodic(RleWord(alphabet_size), RleWord::repeat(a, 1, alphabet_size));
}

Symbol SymbolicPoint::symbol_at(const Position& q) const {
    require(q >= 0, ErrorKind::OutOfRange, "negative position");
    return generator_->leaf_at(offset_ + q).symbol;
}

SymbolicPoint SymbolicPoint::shift(const Position& t) const {
    require(t >= 0, ErrorKind::OutOfRange, "negative shift");
    return SymbolicPoint(generator_, offset_ + t);
}

std::optional<Position> SymbolicPoint::extend_forward(LeafRun leaf) const {
    std::optional<Position> end = leaf.end;
    while (end) {
        LeafRun next = generator_->leaf_at(*end + 1);
        if (next.symbol != leaf.symbol) break;
        end = next.end;
    }
    return end;
}

RunLocation SymbolicPoint::run_locate(const Position& q) const {
    require(q >= 0, ErrorKind::OutOfRange, "negative position");
    const Position absolute = offset_ + q;
    LeafRun leaf = generator_->leaf_at(absolute);
    Position start = leaf.start;
    while (start > offset_) {
        LeafRun prev = generator_->leaf_at(start - 1);
        if (prev.symbol != leaf.symbol) break;
        start = prev.start;
    }
    RunLocation loc;
    loc.symbol = leaf.symbol;
    loc.start = (start > offset_ ? start : offset_) - offset_;
    if (auto end = extend_forward(leaf)) loc.end = *end - offset_;
    return loc;
}

bool SymbolicPoint::in_cylinder(const Cylinder& c) const {
    require(c.word.alphabet_size() == alphabet_size(), ErrorKind::AlphabetMismatch,
            "cylinder alphabet differs from point alphabet");
    Position pos = offset_;
    for (const auto& r : c.word.runs()) {
        LeafRun leaf = generator_->leaf_at(pos);
        if (leaf.symbol != r.symbol) return false;
        auto end = extend_forward(leaf);
        pos += r.count;
        if (end && *end < pos - 1) return false;
    }
    return true;
}

RunStream SymbolicPoint::runs() const {
    return [self = *this, q = Position(0), done = false]() mutable -> std::optional<StreamRun> {
        if (done) return std::nullopt;
        const Position absolute = self.offset_ + q;
        LeafRun leaf = self.generator_->leaf_at(absolute);
        auto end = self.extend_forward(leaf);
        if (!end) {
            done = true;
            return StreamRun{leaf.symbol, 0, true};
        }
        StreamRun run{leaf.symbol, *end - absolute + 1, false};
        q += run.count;
        return run;
    };
}

RleWord SymbolicPoint::prefix(const Position& length, std::size_t run_cap) const {
    require(length >= 0, ErrorKind::OutOfRange, "negative prefix length");
    std::vector<Run> out;
    Position remaining = length;
    auto stream = runs();
    while (remaining > 0) {
        auto r = stream();
        require(r.has_value(), ErrorKind::OutOfRange, "run stream ended early");
        Position take = (r->unbounded || r->count > remaining) ? remaining : r->count;
        out.push_back(Run{r->symbol, take});
        if (out.size() > run_cap)
            throw Error(ErrorKind::MaterializationRefused, "prefix needs more than " + std::to_string(run_cap) + " runs");
        remaining -= take;
    }
    return RleWord::make(alphabet_size(), out);
}

std::vector<Symbol> SymbolicPoint::materialize(std::size_t length, std::size_t cap) const {
    require(length <= cap, ErrorKind::MaterializationRefused,
            "materializing " + std::to_string(length) + " symbols exceeds cap " + std::to_string(cap));
    std::vector<Symbol> out;
    out.reserve(length);
    auto stream = runs();
    while (out.size() < length) {
        auto r = stream();
        require(r.has_value(), ErrorKind::OutOfRange, "run stream ended early");
        std::size_t want = length - out.size();
        std::size_t take = (r->unbounded || r->count >= from_u64(want)) ? want : to_u64(r->count);
        out.insert(out.end(), take, r->symbol);
    }
    return out;
}

nlohmann::json SymbolicPoint::descriptor() const {
    nlohmann::json d = generator_->descriptor();
    d["offset"] = to_decimal(offset_);
    return d;
}

std::string SymbolicPoint::label() const {
    if (offset_ == 0) return generator_->name();
    return "sigma^" + to_decimal(offset_) + "(" + generator_->name() + ")";
}

bool operator==(const SymbolicPoint& a, const SymbolicPoint& b) {
    if (a.offset_ != b.offset_) return false;
    if (a.generator_ == b.generator_) return true;
    return a.generator_->descriptor() == b.generator_->descriptor();
}

bool eq_up_to(const SymbolicPoint& a, const SymbolicPoint& b, const Position& length) {
    Position q = 0;
    while (q < length) {
        RunLocation ra = a.run_locate(q);
        RunLocation rb = b.run_locate(q);
        if (ra.symbol != rb.symbol) return false;
        if (!ra.end && !rb.end) return true;
        if (!ra.end) q = *rb.end + 1;
        else if (!rb.end) q = *ra.end + 1;
        else q = (*ra.end < *rb.end ? *ra.end : *rb.end) + 1;
    }
    return true;
}

EventuallyPeriodic::EventuallyPeriodic(RleWord preperiod, RleWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    require(!period_.empty(), ErrorKind::Precondition, "period must be nonempty");
    require(preperiod_.alphabet_size() == period_.alphabet_size(), ErrorKind::AlphabetMismatch,
            "preperiod and period alphabets differ");
}

LeafRun EventuallyPeriodic::leaf_at(const Position& q) const {
    if (q < preperiod_.length()) {
        std::size_t i = preperiod_.run_index_at(q);
        Position start = preperiod_.run_start(i);
        return LeafRun{preperiod_.runs()[i].symbol, start, start + preperiod_.runs()[i].count - 1};
    }
    if (period_.run_count() == 1) return LeafRun{period_.runs()[0].symbol, preperiod_.length(), std::nullopt};
    Position r = q - preperiod_.length();
    Position copy;
    Position within;
    mpz_fdiv_qr(copy.get_mpz_t(), within.get_mpz_t(), r.get_mpz_t(), period_.length().get_mpz_t());
    std::size_t i = period_.run_index_at(within);
    Position start = preperiod_.length() + copy * period_.length() + period_.run_start(i);
    return LeafRun{period_.runs()[i].symbol, start, start + period_.runs()[i].count - 1};
}

nlohmann::json EventuallyPeriodic::descriptor() const {
    return {{"kind", "ev_periodic"}, {"params", {{"preperiod", to_json(preperiod_)}, {"period", to_json(period_)}}}};
}

std::string EventuallyPeriodic::name() const {
    auto compact = [](const RleWord& w) {
        std::string s;
        for (const auto& r : w.runs()) {
            s += std::to_string(r.symbol);
            if (r.count != 1) s += "^" + to_decimal(r.count);
        }
        return s;
    };
    std::string per = compact(period_);
    if (period_.run_count() > 1 || period_.length() > 1) per = "(" + per + ")";
    return compact(preperiod_) + per + "^inf";
}

}  // namespace symdyn
