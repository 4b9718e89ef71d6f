#include "oracle.hpp"
#include "support.hpp"
#include "symdyn/rle_word.hpp"

#include <doctest.h>

#include <random>

using namespace symdyn;

namespace {

RleWord from_string(const std::string& s) { return RleWord::literal(s); }

}  // namespace

TEST_CASE("make merges adjacent runs and validates") {
    auto w = RleWord::make(2, {{1, 2}, {1, 3}, {0, 1}});
    REQUIRE(w.run_count() == 2);
    CHECK(w.runs()[0] == Run{1, 5});
    CHECK(w.length() == 6);

    CHECK(error_kind([] { RleWord::make(2, {{1, 0}}); }) == ErrorKind::InvalidRun);
    CHECK(error_kind([] { RleWord::make(2, {{2, 1}}); }) == ErrorKind::InvalidSymbol);
    CHECK(error_kind([] { RleWord::literal("102"); }) == ErrorKind::InvalidSymbol);
}

TEST_CASE("make_word examples") {
    CHECK(RleWord::make(2, {{1, 1}, {0, 1}, {0, 3}}).runs() == std::vector<Run>{{1, 1}, {0, 4}});
    auto w = RleWord::make(2, {{1, 16}, {0, 4}});
    CHECK(w.length() == 20);
    CHECK(from_string(w.to_string()) == w);
    CHECK(RleWord::make(2, w.runs()) == w);
    CHECK(w.symbol_at(15) == 1);
    CHECK(w.symbol_at(16) == 0);
    CHECK(error_kind([] { RleWord::make(2, {{0, 0}}); }) == ErrorKind::InvalidRun);
}

TEST_CASE("symbol_at and run_index_at over huge counts") {
    auto w = RleWord::make(2, {{1, pow_u(10, 30)}, {0, 5}});
    CHECK(w.symbol_at(0) == 1);
    CHECK(w.symbol_at(pow_u(10, 30) - 1) == 1);
    CHECK(w.symbol_at(pow_u(10, 30)) == 0);
    CHECK(w.run_index_at(pow_u(10, 30) + 4) == 1);
    CHECK(error_kind([&] { w.symbol_at(pow_u(10, 30) + 5); }) == ErrorKind::OutOfRange);
}

TEST_CASE("concat, power and expansion") {
    auto a = from_string("10"), b = from_string("001");
    CHECK(concat(a, b).to_string() == "10001");
    CHECK(concat(a, b).run_count() == 3);
    CHECK(power(a, 3).to_string() == "101010");
    CHECK(power(from_string("1"), 4).run_count() == 1);
    CHECK(error_kind([&] { power(a, 0); }) == ErrorKind::InvalidExponent);
    CHECK(power(RleWord::make(2, {{1, 2}, {0, 1}}), 3).length() == 9);
    CHECK(power(from_string("10"), 2).run_count() == 4);
    CHECK(concat(a, RleWord(2)) == a);
    CHECK(concat(from_string("10"), RleWord::repeat(0, 20)).runs() == std::vector<Run>{{1, 1}, {0, 21}});
    CHECK(error_kind([&] { concat(a, RleWord::literal("2", 3)); }) == ErrorKind::AlphabetMismatch);
    CHECK(error_kind([] { RleWord::repeat(1, pow_u(10, 12)).expand(1000); }) == ErrorKind::MaterializationRefused);
}

TEST_CASE("json round trip keeps counts as decimal strings") {
    auto w = RleWord::make(3, {{2, pow_u(2, 100)}, {0, 1}});
    auto j = to_json(w);
    CHECK(j["runs"][0][1] == to_decimal(pow_u(2, 100)));
    CHECK(rle_word_from_json(j) == w);
    CHECK(error_kind([] { rle_word_from_json(nlohmann::json::parse(R"({"alphabet":2,"runs":[["1"]]})")); }) ==
          ErrorKind::Parse);
    CHECK(error_kind([] { rle_word_from_json(nlohmann::json::parse(R"({"alphabet":2,"runs":[["5","1"]]})")); }) ==
          ErrorKind::InvalidSymbol);
}

TEST_CASE("find_first picks the leftmost placement") {
    CHECK(find_first(from_string("1110111"), from_string("11")) == Position(0));
    CHECK(find_first(from_string("0001100"), from_string("0110")) == Position(2));
    CHECK(find_first(from_string("110001"), from_string("001")) == Position(3));
    CHECK(find_first(from_string("101"), from_string("00")) == std::nullopt);
    CHECK(find_first(from_string("0001100"), from_string("111")) == std::nullopt);
    CHECK(find_first(from_string("10"), from_string("100")) == std::nullopt);
    CHECK(error_kind([] { find_first(from_string("10"), RleWord(2)); }) == ErrorKind::InvalidPattern);
}

TEST_CASE("find_first on an unbounded stream respects the horizon") {
    auto text = [] {
        return RunStream([i = 0]() mutable -> std::optional<StreamRun> {
            ++i;
            if (i == 1) return StreamRun{1, 3, false};
            return StreamRun{0, 0, true};
        });
    };
    CHECK(find_first(text(), RleWord::repeat(0, pow_u(10, 40)), 100) == Position(3));
    CHECK(find_first(text(), from_string("10"), 100) == Position(2));
    CHECK(find_first(text(), from_string("01"), 100) == std::nullopt);
    CHECK(find_first(text(), from_string("0"), 2) == std::nullopt);
}

TEST_CASE("concat, power and symbol_at agree with strings on random words") {
    std::mt19937_64 rng(77);
    auto gen = [&](std::size_t len) {
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += static_cast<char>('0' + (rng() % 3 == 0));
        return s;
    };
    for (int iter = 0; iter < 500; ++iter) {
        const std::string a = gen(1 + rng() % 40), b = gen(rng() % 40), c = gen(1 + rng() % 20);
        const auto wa = from_string(a), wb = b.empty() ? RleWord(2) : from_string(b), wc = from_string(c);
        const auto ab = concat(wa, wb);
        REQUIRE(ab.to_string() == a + b);
        CHECK(ab.length() == wa.length() + wb.length());
        CHECK(concat(ab, wc) == concat(wa, concat(wb, wc)));
        const std::uint64_t k = 1 + rng() % 5;
        std::string pk;
        for (std::uint64_t i = 0; i < k; ++i) pk += a;
        CHECK(power(wa, k).to_string() == pk);
        for (std::size_t q = 0; q < ab.length(); ++q) CHECK(ab.symbol_at(q) == static_cast<Symbol>((a + b)[q] - '0'));
    }
}

TEST_CASE("find_first agrees with naive search on random cases") {
    std::mt19937_64 rng(20240611);
    for (int iter = 0; iter < 3000; ++iter) {
        const std::size_t tl = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
        const std::size_t pl = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        // Biased run lengths so long runs and exact fits both appear.
        auto gen = [&](std::size_t len) {
            std::string s;
            char c = static_cast<char>('0' + (rng() & 1));
            while (s.size() < len) {
                s += std::string(std::uniform_int_distribution<std::size_t>(1, 6)(rng), c);
                c = c == '0' ? '1' : '0';
            }
            return s.substr(0, len);
        };
        const std::string t = gen(tl), p = gen(pl);
        auto got = find_first(from_string(t), from_string(p));
        auto want = oracle::naive_find(t, p);
        REQUIRE_MESSAGE(got.has_value() == want.has_value(), t << " / " << p);
        if (want) CHECK(*got == Position(*want));
    }
}
