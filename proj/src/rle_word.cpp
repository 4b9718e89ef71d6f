#include "symdyn/rle_word.hpp"

#include "symdyn/error.hpp"

#include <algorithm>
#include <deque>

namespace symdyn {

namespace {

void check_alphabet(unsigned alphabet_size) {
    require(alphabet_size >= 1 && alphabet_size <= kMaxAlphabet, ErrorKind::InvalidSymbol,
            "alphabet size " + std::to_string(alphabet_size) + " outside [1, 256]");
}

// Coalesces adjacent equal-symbol runs of an arbitrary stream and drops
// empty runs, so the matcher only ever sees maximal runs.
class MergedStream {
public:
    explicit MergedStream(const RunStream& source) : source_(source) {}

    std::optional<StreamRun> next() {
        if (!primed_) {
            lookahead_ = pull();
            primed_ = true;
        }
        if (!lookahead_) return std::nullopt;
        StreamRun current = std::move(*lookahead_);
        lookahead_ = current.unbounded ? std::nullopt : pull();
        while (!current.unbounded && lookahead_ && lookahead_->symbol == current.symbol) {
            current.count += lookahead_->count;
            current.unbounded = lookahead_->unbounded;
            lookahead_ = current.unbounded ? std::nullopt : pull();
        }
        return current;
    }

private:
    std::optional<StreamRun> pull() {
        for (;;) {
            auto r = source_();
            if (!r || r->unbounded || r->count > 0) return r;
        }
    }

    const RunStream& source_;
    std::optional<StreamRun> lookahead_;
    bool primed_ = false;
};

struct PlacedRun {
    StreamRun run;
    BigInt start;
};

bool window_matches(const std::deque<PlacedRun>& window, const std::vector<Run>& pattern) {
    const std::size_t r = pattern.size();
    const auto& first = window.front().run;
    if (first.symbol != pattern.front().symbol || first.unbounded || first.count < pattern.front().count)
        return false;
    for (std::size_t j = 1; j + 1 < r; ++j) {
        const auto& t = window[j].run;
        if (t.unbounded || t.symbol != pattern[j].symbol || t.count != pattern[j].count) return false;
    }
    const auto& last = window.back().run;
    return last.symbol == pattern.back().symbol && (last.unbounded || last.count >= pattern.back().count);
}

}  // namespace

void RleWord::push(Symbol symbol, const BigInt& count) {
    if (!runs_.empty() && runs_.back().symbol == symbol) {
        runs_.back().count += count;
    } else {
        starts_.push_back(length_);
        runs_.push_back(Run{symbol, count});
    }
    length_ += count;
}

RleWord RleWord::make(unsigned alphabet_size, const std::vector<Run>& runs) {
    check_alphabet(alphabet_size);
    RleWord w(alphabet_size);
    w.runs_.reserve(runs.size());
    w.starts_.reserve(runs.size());
    for (const auto& r : runs) {
        // Messages are built only on failure; make sits on hot paths.
        if (r.count <= 0) throw Error(ErrorKind::InvalidRun, "run count must be positive, got " + to_decimal(r.count));
        if (r.symbol >= alphabet_size)
            throw Error(ErrorKind::InvalidSymbol, "symbol " + std::to_string(r.symbol) + " outside alphabet of size " +
                                                      std::to_string(alphabet_size));
        w.push(r.symbol, r.count);
    }
    return w;
}

RleWord RleWord::literal(std::string_view digits, unsigned alphabet_size) {
    std::vector<Run> runs;
    for (std::size_t i = 0; i < digits.size();) {
        const char c = digits[i];
        if (c < '0' || c > '9') throw Error(ErrorKind::InvalidSymbol, std::string("not a digit symbol: '") + c + "'");
        std::size_t j = i + 1;
        while (j < digits.size() && digits[j] == c) ++j;
        runs.push_back(Run{static_cast<Symbol>(c - '0'), static_cast<unsigned long>(j - i)});
        i = j;
    }
    return make(alphabet_size, runs);
}

RleWord RleWord::repeat(Symbol symbol, const BigInt& count, unsigned alphabet_size) {
    return make(alphabet_size, {Run{symbol, count}});
}

std::size_t RleWord::run_index_at(const Position& p) const {
    if (p < 0 || p >= length_)
        throw Error(ErrorKind::OutOfRange, "position " + to_decimal(p) + " outside word of length " + to_decimal(length_));
    auto it = std::upper_bound(starts_.begin(), starts_.end(), p);
    return static_cast<std::size_t>(std::distance(starts_.begin(), it)) - 1;
}

Symbol RleWord::symbol_at(const Position& p) const { return runs_[run_index_at(p)].symbol; }

std::vector<Symbol> RleWord::expand(std::size_t cap) const {
    require(length_ <= from_u64(cap), ErrorKind::MaterializationRefused,
            "expanding " + to_decimal(length_) + " symbols exceeds cap " + std::to_string(cap));
    std::vector<Symbol> out;
    out.reserve(to_u64(length_));
    for (const auto& r : runs_) out.insert(out.end(), to_u64(r.count), r.symbol);
    return out;
}

std::string RleWord::to_string(std::size_t cap) const {
    std::string out;
    for (Symbol s : expand(cap)) {
        if (alphabet_ <= 10) {
            out.push_back(static_cast<char>('0' + s));
        } else {
            if (!out.empty()) out.push_back(',');
            out += std::to_string(s);
        }
    }
    return out;
}

RleWord make_word(unsigned alphabet_size, const std::vector<Run>& runs) { return RleWord::make(alphabet_size, runs); }

RleWord concat(const RleWord& a, const RleWord& b) {
    require(a.alphabet_size() == b.alphabet_size(), ErrorKind::AlphabetMismatch,
            "alphabets " + std::to_string(a.alphabet_size()) + " and " + std::to_string(b.alphabet_size()));
    std::vector<Run> runs = a.runs();
    runs.insert(runs.end(), b.runs().begin(), b.runs().end());
    return RleWord::make(a.alphabet_size(), runs);
}

RleWord concat(std::initializer_list<RleWord> parts) {
    require(parts.size() > 0, ErrorKind::Precondition, "concat of nothing");
    RleWord out(parts.begin()->alphabet_size());
    for (const auto& p : parts) out = concat(out, p);
    return out;
}

RleWord power(const RleWord& w, std::uint64_t k) {
    require(k >= 1, ErrorKind::InvalidExponent, "exponent must be at least 1");
    if (w.run_count() == 1) return RleWord::repeat(w.runs()[0].symbol, w.runs()[0].count * from_u64(k), w.alphabet_size());
    require(w.run_count() == 0 || k <= kDefaultMaterializationCap / w.run_count(), ErrorKind::MaterializationRefused,
            "power would create more than " + std::to_string(kDefaultMaterializationCap) + " runs");
    std::vector<Run> runs;
    runs.reserve(w.run_count() * k);
    for (std::uint64_t i = 0; i < k; ++i) runs.insert(runs.end(), w.runs().begin(), w.runs().end());
    return RleWord::make(w.alphabet_size(), runs);
}

RunStream stream_of(const RleWord& w) {
    return [runs = w.runs(), i = std::size_t{0}]() mutable -> std::optional<StreamRun> {
        if (i >= runs.size()) return std::nullopt;
        const auto& r = runs[i++];
        return StreamRun{r.symbol, r.count, false};
    };
}

std::optional<Position> find_first(const RunStream& text, const RleWord& pattern, const Position& horizon) {
    require(!pattern.empty(), ErrorKind::InvalidPattern, "pattern must be nonempty");
    const auto& pr = pattern.runs();
    const std::size_t r = pr.size();
    MergedStream merged(text);
    std::deque<PlacedRun> window;
    BigInt pos = 0;
    // A match starting at q <= horizon ends by horizon + |pattern|, and its
    // last run starts before that.
    const BigInt stop = horizon + pattern.length();
    while (auto run = merged.next()) {
        if (pos >= stop) return std::nullopt;
        if (r == 1) {
            if (pos > horizon) return std::nullopt;
            if (run->symbol == pr[0].symbol && (run->unbounded || run->count >= pr[0].count)) return pos;
        } else {
            window.push_back(PlacedRun{*run, pos});
            if (window.size() > r) window.pop_front();
            if (window.front().start > horizon) return std::nullopt;
            if (window.size() == r && window_matches(window, pr)) {
                BigInt q = window.front().start + window.front().run.count - pr.front().count;
                if (q <= horizon) return q;
                return std::nullopt;
            }
        }
        if (run->unbounded) break;
        pos += run->count;
    }
    return std::nullopt;
}

std::optional<Position> find_first(const RleWord& text, const RleWord& pattern) {
    require(text.alphabet_size() == pattern.alphabet_size(), ErrorKind::AlphabetMismatch,
            "text and pattern alphabets differ");
    if (text.length() < pattern.length()) {
        require(!pattern.empty(), ErrorKind::InvalidPattern, "pattern must be nonempty");
        return std::nullopt;
    }
    return find_first(stream_of(text), pattern, text.length() - pattern.length());
}

nlohmann::json to_json(const RleWord& w) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : w.runs()) runs.push_back({std::to_string(r.symbol), to_decimal(r.count)});
    return {{"alphabet", w.alphabet_size()}, {"runs", runs}};
}

namespace {

BigInt json_integer(const nlohmann::json& j, const char* what) {
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    throw Error(ErrorKind::Parse, std::string(what) + " must be a decimal string or nonnegative integer");
}

}  // namespace

RleWord rle_word_from_json(const nlohmann::json& j) {
    require(j.is_object() && j.contains("alphabet") && j.contains("runs"), ErrorKind::Parse,
            "RLE word JSON needs 'alphabet' and 'runs'");
    require(j["alphabet"].is_number_unsigned(), ErrorKind::Parse, "'alphabet' must be a positive integer");
    auto alphabet = j["alphabet"].get<std::uint64_t>();
    require(alphabet >= 1 && alphabet <= kMaxAlphabet, ErrorKind::Parse, "'alphabet' outside [1, 256]");
    require(j["runs"].is_array(), ErrorKind::Parse, "'runs' must be an array");
    std::vector<Run> runs;
    for (const auto& r : j["runs"]) {
        require(r.is_array() && r.size() == 2, ErrorKind::Parse, "each run must be a [symbol, count] pair");
        BigInt s = json_integer(r[0], "run symbol");
        require(s >= 0 && s < 256, ErrorKind::InvalidSymbol, "symbol " + to_decimal(s) + " out of range");
        runs.push_back(Run{static_cast<Symbol>(s.get_ui()), json_integer(r[1], "run count")});
    }
    return RleWord::make(static_cast<unsigned>(alphabet), runs);
}

}  // namespace symdyn
