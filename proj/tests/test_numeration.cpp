#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "fibtree/numeration.hpp"
#include "oracles.hpp"

using namespace fibtree;

TEST_CASE("weight sequences") {
    // f(0) = f(1) = 1, so position i of a code word weighs fib(i).
    CHECK(fib(0) == 1);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 2);
    CHECK(fib(3) == 3);
    CHECK(fib(4) == 5);
    CHECK(fib(10) == 89);
    CHECK(fib(30) == 1346269);
    for (std::size_t n = 0; n <= 40; ++n)
        CHECK(fib(n) == oracle::fib_u64(n));

    CHECK(golden_weight(1) == 1);
    CHECK(golden_weight(2) == 3);
    CHECK(golden_weight(3) == 8);
    CHECK(golden_weight(4) == 21);
    CHECK(golden_weight(5) == 55);
    CHECK_THROWS_AS(golden_weight(0), validation_error);

    // The digit-2 weights are the odd-indexed Fibonacci numbers.
    for (std::size_t n = 1; n <= 40; ++n)
        CHECK(golden_weight(n) == fib(2 * n - 1));
}

TEST_CASE("zeckendorf encoding of small values") {
    const std::vector<std::pair<int, std::string>> expected = {
        {1, "1"},      {2, "10"},     {3, "100"},    {4, "101"},
        {5, "1000"},   {6, "1001"},   {7, "1010"},   {8, "10000"},
        {9, "10001"},  {10, "10010"}, {11, "10100"}, {12, "10101"},
        {13, "100000"}, {20, "101010"}, {100, "1000010100"},
    };
    for (const auto& [n, word] : expected) {
        CHECK(zeck_encode(n).digits() == word);
        CHECK(zeck_decode(word) == n);
    }
}

TEST_CASE("zeckendorf words enumerate the positive integers in order") {
    // All 11-free words of length <= 20 in length-then-lex order, compared
    // against the codec: word n-1 must spell the integer n.
    auto words = oracle::zeck_words(20);
    REQUIRE(words.size() == oracle::fib_u64(21) - 1); // 17710
    auto weights = oracle::fib_weights(20);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::uint64_t n = i + 1;
        CHECK(oracle::value_of(words[i], weights) == n);
        if (zeck_encode(n).digits() != words[i]) {
            CAPTURE(n);
            REQUIRE(zeck_encode(n).digits() == words[i]);
        }
        CHECK(zeck_decode(words[i]) == n);
    }
}

TEST_CASE("zeckendorf parsing rejects malformed words") {
    CHECK_THROWS_AS(FibCode::parse(""), validation_error);
    CHECK_THROWS_AS(FibCode::parse("0"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("011"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("11"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("1011"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("1100"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("10201"), validation_error);
    CHECK_THROWS_AS(FibCode::parse("1 0"), validation_error);
    CHECK_NOTHROW(FibCode::parse("10101"));
    CHECK_THROWS_AS(zeck_encode(0), validation_error);
    CHECK_THROWS_AS(zeck_encode(Integer(-5)), validation_error);
}

TEST_CASE("zeckendorf increment rewrites suffixes") {
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"1", "10"},        {"10", "100"},     {"100", "101"},
        {"101", "1000"},    {"1000", "1001"},  {"1001", "1010"},
        {"1010", "10000"},  {"10101", "100000"},
        {"10010", "10100"}, {"1010101", "10000000"},
    };
    for (const auto& [before, after] : expected)
        CHECK(zeck_increment(FibCode::parse(before)).digits() == after);

    // Agreement with arithmetic over a long walk, starting from "1".
    FibCode code = zeck_encode(1);
    for (std::uint64_t n = 1; n <= 30000; ++n) {
        CHECK(zeck_decode(code) == n);
        code = zeck_increment(code);
    }
}

TEST_CASE("zeckendorf decrement inverts increment") {
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"10", "1"},     {"100", "10"},     {"101", "100"},
        {"1000", "101"}, {"10000", "1010"}, {"100000", "10101"},
        {"10100", "10010"},
    };
    for (const auto& [before, after] : expected)
        CHECK(zeck_decrement(FibCode::parse(before)).digits() == after);

    CHECK_THROWS_AS(zeck_decrement(FibCode::parse("1")), validation_error);

    for (std::uint64_t n = 2; n <= 30000; ++n) {
        auto code = zeck_encode(n);
        CHECK(zeck_decode(zeck_decrement(code)) == n - 1);
        CHECK(zeck_increment(zeck_decrement(code)) == code);
    }
}

TEST_CASE("zeckendorf order matches value order") {
    auto a = zeck_encode(3999), b = zeck_encode(4000);
    CHECK(a < b);
    CHECK(zeck_encode(4000) == zeck_encode(4000));
    // Shorter word < longer word even when lexicographically larger.
    CHECK(FibCode::parse("101") < FibCode::parse("1000"));
}

TEST_CASE("golden encoding of small values") {
    const std::vector<std::pair<int, std::string>> expected = {
        {1, "1"},   {2, "2"},   {3, "10"},  {4, "11"},  {5, "12"},
        {6, "20"},  {7, "21"},  {8, "100"}, {9, "101"}, {10, "102"},
        {11, "110"}, {12, "111"}, {13, "112"}, {14, "120"}, {15, "121"},
        {16, "200"}, {17, "201"}, {18, "202"}, {19, "210"}, {20, "211"},
        {21, "1000"}, {22, "1001"},
    };
    for (const auto& [n, word] : expected) {
        CHECK(golden_encode(n).digits() == word);
        CHECK(golden_decode(word) == n);
    }
}

TEST_CASE("golden words enumerate the positive integers in order") {
    // Every word free of the 2 1* 2 factor, length <= 10, in
    // length-then-lex order spells exactly the integers 1..17710 once.
    auto words = oracle::golden_words(10);
    REQUIRE(words.size() == oracle::fib_u64(21) - 1); // 17710
    auto weights = oracle::golden_weights(11);
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::uint64_t n = i + 1;
        CHECK(oracle::value_of(words[i], weights) == n);
        if (golden_encode(n).digits() != words[i]) {
            CAPTURE(n);
            REQUIRE(golden_encode(n).digits() == words[i]);
        }
        CHECK(golden_decode(words[i]) == n);
    }
}

TEST_CASE("golden spellings are unique exactly because w(2) = 3") {
    // Under the implemented weights every value <= 17710 has exactly one
    // admissible spelling.
    auto by_value = oracle::golden_spellings_by_value(10, 3);
    for (const auto& [value, spellings] : by_value) {
        if (value == 0 || value > 17710) continue;
        CAPTURE(value);
        CHECK(spellings.size() == 1);
    }

    // Under the alternative family 1, 2, 5, 13, ... uniqueness fails: 18
    // has two admissible spellings, so that family cannot carry the codec.
    auto alt = oracle::golden_spellings_by_value(8, 2);
    REQUIRE(alt.count(18) == 1);
    const auto& spellings = alt.at(18);
    CHECK(spellings.size() >= 2);
    bool has_1100 = false, has_1021 = false;
    for (const auto& w : spellings) {
        if (w == "1100") has_1100 = true;
        if (w == "1021") has_1021 = true;
    }
    CHECK(has_1100);
    CHECK(has_1021);
}

TEST_CASE("greedy golden digits never exceed 2 and avoid the factor") {
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        const auto code = golden_encode(n);
        const auto& word = code.digits();
        for (char c : word) CHECK((c >= '0' && c <= '2'));
        CHECK_FALSE(contains_two_ones_two(word));
        CHECK_FALSE(oracle::has_two_ones_two(word));
    }
}

TEST_CASE("forbidden-factor scanner") {
    CHECK(contains_two_ones_two("22"));
    CHECK(contains_two_ones_two("212"));
    CHECK(contains_two_ones_two("2112"));
    CHECK(contains_two_ones_two("102112"));
    CHECK_FALSE(contains_two_ones_two("202"));
    CHECK_FALSE(contains_two_ones_two("2012"));
    CHECK_FALSE(contains_two_ones_two("2"));
    CHECK_FALSE(contains_two_ones_two("121"));
}

TEST_CASE("golden parsing is strict, lenient decoding flags canonicity") {
    CHECK_THROWS_AS(GoldenCode::parse(""), validation_error);
    CHECK_THROWS_AS(GoldenCode::parse("0"), validation_error);
    CHECK_THROWS_AS(GoldenCode::parse("012"), validation_error);
    CHECK_THROWS_AS(GoldenCode::parse("13"), validation_error);
    CHECK_THROWS_AS(GoldenCode::parse("22"), validation_error);   // = "100"
    CHECK_THROWS_AS(GoldenCode::parse("212"), validation_error);  // = "1000"
    CHECK_NOTHROW(GoldenCode::parse("202"));
    CHECK_THROWS_AS(golden_encode(0), validation_error);

    auto v = golden_decode_lenient("22");
    CHECK(v.value == 8);
    CHECK_FALSE(v.canonical);
    v = golden_decode_lenient("212");
    CHECK(v.value == 21);
    CHECK_FALSE(v.canonical);
    v = golden_decode_lenient("2112");
    CHECK(v.value == 55);
    CHECK_FALSE(v.canonical);
    v = golden_decode_lenient("202");
    CHECK(v.value == 18);
    CHECK(v.canonical);
    CHECK_THROWS_AS(golden_decode_lenient("03"), validation_error);
    CHECK_THROWS_AS(golden_decode_lenient(""), validation_error);
}

TEST_CASE("golden order matches value order") {
    for (std::uint64_t n = 1; n <= 5000; ++n)
        CHECK(golden_encode(n) < golden_encode(n + 1));
    CHECK(GoldenCode::parse("21") < GoldenCode::parse("100"));
}

TEST_CASE("codec sweep report is clean") {
    auto report = verify_codecs(50000);
    CHECK(report.clean());
    CHECK(report.warnings.empty());
    CHECK(report.total_checked() > 0);
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CHECK(check.violation_count == 0);
    }
}

TEST_CASE("large values round-trip") {
    // Beyond 64 bits: fib(120) and neighbours.
    Integer big = fib(120);
    for (Integer n = big - 3; n <= big + 3; ++n) {
        CHECK(zeck_decode(zeck_encode(n)) == n);
        CHECK(golden_decode(golden_encode(n)) == n);
    }
    CHECK(zeck_encode(fib(120)).digits().size() == 120);
}
