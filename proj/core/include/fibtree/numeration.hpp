#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "fibtree/errors.hpp"
#include "fibtree/integer.hpp"
#include "fibtree/report.hpp"

namespace fibtree {

// A Zeckendorf code word: digits '0'/'1', most significant first, no leading
// zero and no "11" factor.  The i-th digit from the right (1-based) weighs
// fib(i), so "10101" = fib(5) + fib(3) + fib(1) = 8 + 3 + 1 = 12.
class FibCode {
public:
    // Validates a digit word; throws validation_error on empty input,
    // foreign digits, a leading zero, or the factor "11".
    static FibCode parse(std::string_view word);

    const std::string& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }

    friend bool operator==(const FibCode&, const FibCode&) = default;

    // Length-then-lexicographic order; coincides with the order of the
    // decoded values.
    friend std::strong_ordering operator<=>(const FibCode& a, const FibCode& b) {
        if (a.digits_.size() != b.digits_.size())
            return a.digits_.size() <=> b.digits_.size();
        return a.digits_.compare(b.digits_) <=> 0;
    }

private:
    struct trusted {};
    FibCode(std::string digits, trusted) : digits_(std::move(digits)) {}

    friend FibCode zeck_encode(const Integer&);
    friend FibCode zeck_increment(const FibCode&);
    friend FibCode zeck_decrement(const FibCode&);

    std::string digits_;
};

// A golden code word: digits '0'/'1'/'2', most significant first, no leading
// zero, canonical (greedy) form.  The i-th digit from the right weighs
// golden_weight(i), so "120" = 8 + 2*3 = 14.
class GoldenCode {
public:
    // Validates a digit word and requires the canonical (greedy) form;
    // non-canonical words are rejected with a validation_error naming the
    // canonical spelling.
    static GoldenCode parse(std::string_view word);

    const std::string& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }

    friend bool operator==(const GoldenCode&, const GoldenCode&) = default;

    friend std::strong_ordering operator<=>(const GoldenCode& a, const GoldenCode& b) {
        if (a.digits_.size() != b.digits_.size())
            return a.digits_.size() <=> b.digits_.size();
        return a.digits_.compare(b.digits_) <=> 0;
    }

private:
    struct trusted {};
    GoldenCode(std::string digits, trusted) : digits_(std::move(digits)) {}

    friend GoldenCode golden_encode(const Integer&);

    std::string digits_;
};

// --- Zeckendorf codec ------------------------------------------------------

// Greedy Zeckendorf expansion of n >= 1 (n = 0 has no code word).
FibCode zeck_encode(const Integer& n);

Integer zeck_decode(const FibCode& code);
Integer zeck_decode(std::string_view word); // parse + decode

// Successor by local suffix rewriting: a trailing 0(01)^m becomes 010(00)^(m-1),
// a trailing 00(10)^m becomes 01(00)^m (leading zeros implicit).  Agrees with
// zeck_encode(zeck_decode(code) + 1) everywhere.
FibCode zeck_increment(const FibCode& code);

// Predecessor by case analysis on the trailing zero block: a final 1 flips
// to 0; otherwise the rightmost 1 followed by z zeros becomes (01)^((z+1)/2)
// for odd z and 0(10)^(z/2) for even z.  "1" is rejected (no code for 0).
FibCode zeck_decrement(const FibCode& code);

// --- Golden codec ----------------------------------------------------------

// Greedy golden expansion of n >= 1 over weights 1, 3, 8, 21, ...; the result
// never contains the factor 2 1* 2 (two 2-digits separated only by 1s).
GoldenCode golden_encode(const Integer& n);

Integer golden_decode(const GoldenCode& code);
Integer golden_decode(std::string_view word); // strict: parse + decode

struct GoldenValue {
    Integer value;
    bool canonical = false;
};

// Accepts any structurally valid digit word (digits 0..2, no leading zero)
// and flags whether it is the canonical spelling of its value.
GoldenValue golden_decode_lenient(std::string_view word);

// True iff the word contains two '2' digits separated only by '1's — the
// factor that canonical golden codes never contain.
bool contains_two_ones_two(std::string_view digits) noexcept;

// --- Bulk self-checks ------------------------------------------------------

// Sweeps n = 1..limit: round trips for both codecs, increment/decrement
// agreement with arithmetic, order isomorphism (length-then-lex), forbidden
// factor scans, and the weight identity w(n) = fib(2n-1) for n <= 60.
Report verify_codecs(std::uint64_t limit);

namespace detail {

// Greedy big-endian expansion of n over 1-based increasing weights
// (weights[i] carries digit position i; weights[0] is unused).  Digits are
// capped at 2; weight families growing faster than 3x are rejected.
std::string greedy_digits(const Integer& n, const std::vector<Integer>& weights);

} // namespace detail

} // namespace fibtree
