#pragma once

// Run-length-encoded words over a small alphabet with arbitrary-precision
// run counts. Words are immutable values in maximal-run normal form.

#include "symdyn/bigint.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symdyn {

using Symbol = std::uint8_t;

inline constexpr unsigned kMaxAlphabet = 256;
inline constexpr std::size_t kDefaultMaterializationCap = 1'000'000;

struct Run {
    Symbol symbol = 0;
    BigInt count;

    friend bool operator==(const Run& a, const Run& b) { return a.symbol == b.symbol && a.count == b.count; }
};

class RleWord {
public:
    RleWord() = default;
    explicit RleWord(unsigned alphabet_size) : alphabet_(alphabet_size) {}

    // Validates and merges adjacent equal-symbol runs.
    static RleWord make(unsigned alphabet_size, const std::vector<Run>& runs);
    // One digit per symbol, e.g. "1000".
    static RleWord literal(std::string_view digits, unsigned alphabet_size = 2);
    static RleWord repeat(Symbol symbol, const BigInt& count, unsigned alphabet_size = 2);

    unsigned alphabet_size() const noexcept { return alphabet_; }
    const std::vector<Run>& runs() const noexcept { return runs_; }
    std::size_t run_count() const noexcept { return runs_.size(); }
    const BigInt& length() const noexcept { return length_; }
    bool empty() const noexcept { return runs_.empty(); }

    // Binary search over run boundaries; never touches individual symbols.
    Symbol symbol_at(const Position& p) const;
    // Index of the run containing p, and where run i starts.
    std::size_t run_index_at(const Position& p) const;
    const BigInt& run_start(std::size_t i) const { return starts_.at(i); }

    std::vector<Symbol> expand(std::size_t cap = kDefaultMaterializationCap) const;
    // Digits for alphabets up to 10, otherwise comma separated.
    std::string to_string(std::size_t cap = kDefaultMaterializationCap) const;

    friend bool operator==(const RleWord& a, const RleWord& b) {
        return a.alphabet_ == b.alphabet_ && a.runs_ == b.runs_;
    }

private:
    void push(Symbol symbol, const BigInt& count);

    unsigned alphabet_ = 2;
    std::vector<Run> runs_;
    std::vector<BigInt> starts_;
    BigInt length_ = 0;
};

RleWord make_word(unsigned alphabet_size, const std::vector<Run>& runs);
RleWord concat(const RleWord& a, const RleWord& b);
RleWord concat(std::initializer_list<RleWord> parts);
RleWord power(const RleWord& w, std::uint64_t k);

// A text supplied run by run. Runs need not be maximal; the final run may be
// unbounded (an infinite tail of one symbol).
struct StreamRun {
    Symbol symbol = 0;
    BigInt count;
    bool unbounded = false;
};
using RunStream = std::function<std::optional<StreamRun>()>;

RunStream stream_of(const RleWord& w);

// Least start q <= horizon at which pattern occurs as a factor of the text.
// Leftmost placement inside longer runs.
std::optional<Position> find_first(const RunStream& text, const RleWord& pattern, const Position& horizon);
std::optional<Position> find_first(const RleWord& text, const RleWord& pattern);

nlohmann::json to_json(const RleWord& w);
RleWord rle_word_from_json(const nlohmann::json& j);

}  // namespace symdyn
