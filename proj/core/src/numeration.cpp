#include "fibtree/numeration.hpp"

#include <algorithm>

namespace fibtree {

namespace {

std::string quoted(std::string_view word) {
    return "'" + std::string(word) + "'";
}

void validate_fib_structure(std::string_view word) {
    if (word.empty())
        throw validation_error("empty code word");
    for (char c : word)
        if (c != '0' && c != '1')
            throw validation_error("code word " + quoted(word) +
                                   " contains a digit other than 0 and 1");
    if (word.front() == '0')
        throw validation_error("code word " + quoted(word) + " has a leading zero");
    if (word.find("11") != std::string_view::npos)
        throw validation_error("code word " + quoted(word) +
                               " contains the forbidden factor 11");
}

// Structural checks shared by strict and lenient golden decoding, plus the
// positional sum.  Canonicity is judged separately.
Integer golden_structural_value(std::string_view word) {
    if (word.empty())
        throw validation_error("empty code word");
    for (char c : word)
        if (c < '0' || c > '2')
            throw validation_error("code word " + quoted(word) +
                                   " contains a digit other than 0, 1 and 2");
    if (word.front() == '0')
        throw validation_error("code word " + quoted(word) + " has a leading zero");
    const auto& w = detail::golden_cache(word.size());
    Integer total = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != '0')
            total += int(word[i] - '0') * w[word.size() - i];
    return total;
}

} // namespace

// --- FibCode / Zeckendorf codec ---------------------------------------------

FibCode FibCode::parse(std::string_view word) {
    validate_fib_structure(word);
    return FibCode(std::string(word), trusted{});
}

FibCode zeck_encode(const Integer& n) {
    if (n <= 0)
        throw validation_error("only positive values have code words (got " +
                               n.str() + ")");
    const auto& f = detail::fib_cache_covering(n);
    // Highest 1-based position whose weight fits; weights ascend strictly
    // from position 1 (f(1) = 1, f(2) = 2, ...).
    const std::size_t top =
        std::size_t(std::upper_bound(f.begin() + 1, f.end(), n) - f.begin()) - 1;
    std::string digits;
    digits.reserve(top);
    Integer rest = n;
    for (std::size_t i = top; i >= 1; --i) {
        if (f[i] <= rest) {
            digits.push_back('1');
            rest -= f[i];
        } else {
            digits.push_back('0');
        }
    }
    return FibCode(std::move(digits), FibCode::trusted{});
}

Integer zeck_decode(const FibCode& code) {
    const std::string& digits = code.digits();
    const auto& f = detail::fib_cache(digits.size());
    Integer total = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] == '1') total += f[digits.size() - i];
    return total;
}

Integer zeck_decode(std::string_view word) {
    return zeck_decode(FibCode::parse(word));
}

FibCode zeck_increment(const FibCode& code) {
    const std::string& msd = code.digits();
    std::string d(msd.rbegin(), msd.rend()); // least significant digit first
    const auto at = [&d](std::size_t i) { return i < d.size() ? d[i] : '0'; };

    if (at(0) == '1') {
        // Trailing ...0101 (reading towards the high end): absorb the
        // maximal alternation and carry one position above it.
        std::size_t m = 0;
        while (at(2 * m) == '1' && at(2 * m + 1) == '0') ++m;
        if (d.size() < 2 * m) d.resize(2 * m, '0');
        for (std::size_t i = 0; i < m; ++i) d[2 * i] = '0';
        d[2 * m - 1] = '1';
    } else {
        // Trailing ...1010: same absorption, shifted by one position.
        std::size_t m = 0;
        while (at(2 * m) == '0' && at(2 * m + 1) == '1') ++m;
        if (d.size() < 2 * m + 1) d.resize(2 * m + 1, '0');
        for (std::size_t i = 0; i < m; ++i) d[2 * i + 1] = '0';
        d[2 * m] = '1';
    }
    while (d.size() > 1 && d.back() == '0') d.pop_back();
    return FibCode(std::string(d.rbegin(), d.rend()), FibCode::trusted{});
}

FibCode zeck_decrement(const FibCode& code) {
    const std::string& msd = code.digits();
    if (msd == "1")
        throw validation_error("'1' has no predecessor: no code word spells 0");
    std::string d(msd.rbegin(), msd.rend());
    if (d[0] == '1') {
        d[0] = '0';
    } else {
        // Lowest set position z unfolds into the alternation that sums to
        // its weight minus one: evens below an odd z, odds below an even z.
        const std::size_t z = d.find('1');
        d[z] = '0';
        for (std::size_t i = (z % 2 == 1) ? 0 : 1; i < z; i += 2) d[i] = '1';
    }
    while (d.size() > 1 && d.back() == '0') d.pop_back();
    return FibCode(std::string(d.rbegin(), d.rend()), FibCode::trusted{});
}

// --- GoldenCode / golden codec ----------------------------------------------

GoldenCode GoldenCode::parse(std::string_view word) {
    const Integer value = golden_structural_value(word);
    GoldenCode canonical = golden_encode(value);
    if (canonical.digits() != word)
        throw validation_error("code word " + quoted(word) +
                               " is not canonical: the value " + value.str() +
                               " is spelled '" + canonical.digits() + "'");
    return canonical;
}

GoldenCode golden_encode(const Integer& n) {
    if (n <= 0)
        throw validation_error("only positive values have code words (got " +
                               n.str() + ")");
    const auto& w = detail::golden_cache_covering(n);
    const std::size_t top =
        std::size_t(std::upper_bound(w.begin() + 1, w.end(), n) - w.begin()) - 1;
    std::string digits;
    digits.reserve(top);
    Integer rest = n;
    for (std::size_t i = top; i >= 1; --i) {
        char digit = '0';
        if (rest >= w[i]) {
            digit = (rest >= 2 * w[i]) ? '2' : '1';
            rest -= int(digit - '0') * w[i];
        }
        digits.push_back(digit);
    }
    return GoldenCode(std::move(digits), GoldenCode::trusted{});
}

Integer golden_decode(const GoldenCode& code) {
    const std::string& digits = code.digits();
    const auto& w = detail::golden_cache(digits.size());
    Integer total = 0;
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] != '0') total += int(digits[i] - '0') * w[digits.size() - i];
    return total;
}

Integer golden_decode(std::string_view word) {
    return golden_decode(GoldenCode::parse(word));
}

GoldenValue golden_decode_lenient(std::string_view word) {
    GoldenValue result;
    result.value = golden_structural_value(word);
    result.canonical = (golden_encode(result.value).digits() == word);
    return result;
}

bool contains_two_ones_two(std::string_view digits) noexcept {
    bool open = false; // saw a '2' followed so far only by '1's
    for (char c : digits) {
        if (c == '2') {
            if (open) return true;
            open = true;
        } else if (c == '0') {
            open = false;
        }
    }
    return false;
}

// --- Generic greedy expansion ------------------------------------------------

namespace detail {

std::string greedy_digits(const Integer& n, const std::vector<Integer>& weights) {
    if (n <= 0)
        throw validation_error("only positive values have digit expansions (got " +
                               n.str() + ")");
    if (weights.size() < 2)
        throw validation_error("the weight family must cover position 1");
    std::string digits;
    Integer rest = n;
    for (std::size_t i = weights.size() - 1; i >= 1; --i) {
        if (weights[i] <= 0)
            throw validation_error("weights must be positive");
        const Integer q = rest / weights[i];
        if (q > 2) {
            if (i == weights.size() - 1)
                throw validation_error("the weight family does not reach " + n.str());
            throw validation_error("no digit up to 2 fits position " +
                                   std::to_string(i) + " of " + n.str() +
                                   ": the weight family grows faster than 3x");
        }
        rest -= q * weights[i];
        const char digit = char('0' + int(q));
        if (!digits.empty() || digit != '0') digits.push_back(digit);
    }
    if (rest != 0)
        throw validation_error("residue " + rest.str() +
                               " below position 1: the weights skip values");
    return digits;
}

} // namespace detail

// --- Bulk self-checks --------------------------------------------------------

Report verify_codecs(std::uint64_t limit) {
    Report report;
    report.title = "codec sweep (values 1.." + std::to_string(limit) + ")";

    CheckResult fib_round{.name = "fib-round-trip"};
    CheckResult fib_rewrite{.name = "fib-rewriting"};
    CheckResult fib_factor{.name = "fib-forbidden-factor"};
    CheckResult fib_order{.name = "fib-order-isomorphism"};
    CheckResult gold_round{.name = "golden-round-trip"};
    CheckResult gold_factor{.name = "golden-forbidden-factor"};
    CheckResult gold_order{.name = "golden-order-isomorphism"};
    for (CheckResult* c : {&fib_round, &fib_rewrite, &fib_factor, &fib_order,
                           &gold_round, &gold_factor, &gold_order}) {
        c->first = 1;
        c->last = limit;
    }
    fib_rewrite.detail = "suffix rewriting agrees with +1/-1 arithmetic";
    fib_order.detail = "length-then-lex order of code words matches value order";

    FibCode walk = zeck_encode(1);
    FibCode prev_fib = walk;
    GoldenCode prev_gold = golden_encode(1);
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const FibCode code = zeck_encode(n);
        const GoldenCode gold = golden_encode(n);
        const std::string label = "n = " + std::to_string(n);

        ++fib_round.checked;
        if (zeck_decode(code) == n) ++fib_round.passed;
        else fib_round.record_violation(label + ": decode(encode) != n");

        ++fib_rewrite.checked;
        bool rewriting_ok = (walk == code);
        if (n > 1 && zeck_decode(zeck_decrement(code)) != n - 1) rewriting_ok = false;
        if (rewriting_ok) ++fib_rewrite.passed;
        else fib_rewrite.record_violation(label + ": increment walk or decrement diverged");

        ++fib_factor.checked;
        if (code.digits().find("11") == std::string::npos &&
            code.digits().front() == '1')
            ++fib_factor.passed;
        else
            fib_factor.record_violation(label + ": malformed word " + code.digits());

        ++fib_order.checked;
        if (n == 1 || prev_fib < code) ++fib_order.passed;
        else fib_order.record_violation(label + ": word order broke");

        ++gold_round.checked;
        if (golden_decode(gold) == n) ++gold_round.passed;
        else gold_round.record_violation(label + ": decode(encode) != n");

        ++gold_factor.checked;
        if (!contains_two_ones_two(gold.digits()) && gold.digits().front() != '0')
            ++gold_factor.passed;
        else
            gold_factor.record_violation(label + ": malformed word " + gold.digits());

        ++gold_order.checked;
        if (n == 1 || prev_gold < gold) ++gold_order.passed;
        else gold_order.record_violation(label + ": word order broke");

        walk = zeck_increment(code);
        prev_fib = code;
        prev_gold = gold;
    }

    CheckResult weights{.name = "golden-weight-identity"};
    weights.first = 1;
    weights.last = 60;
    weights.detail = "w(k) = fib(2k - 1)";
    for (std::size_t k = 1; k <= 60; ++k) {
        ++weights.checked;
        if (golden_weight(k) == fib(2 * k - 1)) ++weights.passed;
        else weights.record_violation("k = " + std::to_string(k));
    }

    report.checks = {fib_round,  fib_rewrite, fib_factor, fib_order,
                     gold_round, gold_factor, gold_order, weights};
    return report;
}

} // namespace fibtree
