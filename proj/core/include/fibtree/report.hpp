#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fibtree {

// One verification sweep: a named predicate applied to a contiguous range of
// nodes or values.  Violations are recorded up to a small cap; the count is
// always exact.
struct CheckResult {
    std::string name;
    std::uint64_t first = 0;   // first value/node covered
    std::uint64_t last = 0;    // last value/node covered
    std::uint64_t checked = 0; // predicate applications
    std::uint64_t passed = 0;
    std::uint64_t excluded = 0; // cases outside the predicate's domain
    std::vector<std::string> violations; // capped at violation_cap
    std::uint64_t violation_count = 0;   // exact, even past the cap
    std::string detail;                  // free-form context

    static constexpr std::size_t violation_cap = 8;

    void record_violation(std::string text);
    bool clean() const noexcept { return violation_count == 0; }
};

// One row of a classification census (e.g. node-type frequencies).
struct CensusEntry {
    std::string klass;
    std::uint64_t count = 0;
    std::uint64_t first = 0; // smallest value in the class, 0 if empty
};

// A non-fatal observation with a stable machine-readable key.  Warnings do
// not affect exit status; they flag places where a published closed form
// disagrees with the constructed tree.
struct Warning {
    std::string key;
    std::string text;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;
    std::vector<CensusEntry> census;
    std::vector<Warning> warnings;

    std::uint64_t total_checked() const noexcept;
    std::uint64_t total_violations() const noexcept;
    bool clean() const noexcept { return total_violations() == 0; }

    void merge(Report other); // appends checks/census/warnings
};

// Human-readable rendering: a header, one row per check, census rows, then
// warnings and a one-line summary.
void write_text(std::ostream& out, const Report& report);

// Machine-readable rendering: one JSON object per line, each tagged with a
// "record" discriminator (check | census | warning | summary).
void write_records(std::ostream& out, const Report& report);

} // namespace fibtree
