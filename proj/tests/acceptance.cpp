// Acceptance gate: ten go/no-go criteria, one line of output each.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fibtree/export.hpp"
#include "fibtree/navigation.hpp"
#include "fibtree/numeration.hpp"
#include "fibtree/tiling.hpp"
#include "fibtree/tree.hpp"

using namespace fibtree;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("AC%-2d %-52s %s%s%s\n", index, name.c_str(),
                ok ? "pass" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
}

// AC1: built level sizes match the closed forms to depth 14, under 10 s.
void criterion_level_counts() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        auto white = TreeTable::build(TreeKind::white, 14);
        auto black = TreeTable::build(TreeKind::black, 14);
        for (std::uint32_t k = 0; k <= 14 && ok; ++k) {
            if (Integer(white.level_size(k)) != level_count(TreeKind::white, k) ||
                Integer(black.level_size(k)) != level_count(TreeKind::black, k)) {
                ok = false;
                detail = "size mismatch at level " + std::to_string(k);
            }
        }
        double elapsed = seconds_since(start);
        if (ok && elapsed >= 10.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + " s";
        }
        if (ok) {
            std::ostringstream d;
            d.precision(2);
            d << std::fixed << elapsed << " s, levels 0..14 exact";
            detail = d.str();
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(1, "level counts match closed forms (depth 14)", ok, detail);
}

// AC2: codec round trips and increment/decrement agreement to 10^6, under 30 s.
void criterion_codecs() {
    auto start = Clock::now();
    bool ok = true;
    std::string detail;
    try {
        FibCode walk = zeck_encode(1);
        for (std::uint64_t n = 1; n <= 1000000 && ok; ++n) {
            FibCode code = zeck_encode(n);
            if (zeck_decode(code) != n) {
                ok = false;
                detail = "fib round trip failed at " + std::to_string(n);
                break;
            }
            if (!(walk == code)) {
                ok = false;
                detail = "increment walk diverged at " + std::to_string(n);
                break;
            }
            if (n > 1 && zeck_decode(zeck_decrement(code)) != n - 1) {
                ok = false;
                detail = "decrement failed at " + std::to_string(n);
                break;
            }
            GoldenCode gold = golden_encode(n);
            if (golden_decode(gold) != n) {
                ok = false;
                detail = "golden round trip failed at " + std::to_string(n);
                break;
            }
            walk = zeck_increment(code);
        }
        double elapsed = seconds_since(start);
        if (ok && elapsed >= 30.0) {
            ok = false;
            detail = "took " + std::to_string(elapsed) + " s";
        }
        if (ok) {
            std::ostringstream d;
            d.precision(2);
            d << std::fixed << elapsed << " s for n = 1..10^6";
            detail = d.str();
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "codec round trips and rewritings to 10^6", ok, detail);
}

void criterion_sweep(int index, const std::string& name, TreeKind kind,
                     Numeration numeration) {
    bool ok = true;
    std::string detail;
    try {
        auto rep = verify_theorems(kind, numeration, 12);
        if (!rep.clean()) {
            ok = false;
            detail = std::to_string(rep.total_violations()) + " violations; first: " +
                     (rep.checks.empty() ? "" : "see report");
            for (const auto& c : rep.checks)
                if (!c.violations.empty()) {
                    detail = c.name + ": " + c.violations.front();
                    break;
                }
        } else {
            detail = std::to_string(rep.total_checked()) + " checks, 0 violations";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(index, name, ok, detail);
}

// AC7: strip partition, sizes, isomorphism (depth 12) and the counting
// identity to k = 14.
void criterion_strips() {
    bool ok = true;
    std::string detail;
    try {
        auto rep = verify_strip_partition(12);
        if (!rep.clean()) {
            ok = false;
            for (const auto& c : rep.checks)
                if (!c.violations.empty()) {
                    detail = c.name + ": " + c.violations.front();
                    break;
                }
        }
        for (std::uint32_t k = 0; k <= 14 && ok; ++k) {
            Integer sum = 0;
            for (std::uint32_t j = 0; j <= k; ++j) sum += fib(2 * j);
            if (sum != fib(2 * k + 1)) {
                ok = false;
                detail = "counting identity failed at k = " + std::to_string(k);
            }
        }
        if (ok) detail = std::to_string(rep.total_checked()) +
                         " checks, 0 mismatches, identity to k = 14";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, "strip decomposition and counting identity", ok, detail);
}

// AC8: extremal corollary values for k <= 14.
void criterion_extremal() {
    bool ok = true;
    std::string detail;
    try {
        for (std::uint32_t k = 0; k <= 14 && ok; ++k) {
            auto br = extremal_node(TreeKind::black, k, Side::rightmost);
            std::string expected_black = "1" + std::string(2 * k, '0');
            if (br.node != fib(2 * k + 1) || br.fib_code != expected_black) {
                ok = false;
                detail = "black rightmost failed at k = " + std::to_string(k);
            }
            if (k >= 1) {
                auto wl = extremal_node(TreeKind::white, k, Side::leftmost);
                std::string expected_white = "1" + std::string(2 * k - 1, '0');
                if (wl.node != fib(2 * k) || wl.fib_code != expected_white) {
                    ok = false;
                    detail = "white leftmost failed at k = " + std::to_string(k);
                }
            }
        }
        if (ok) detail = "k = 0..14 exact";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "extremal node values and spellings (k <= 14)", ok, detail);
}

// AC9: `verify --scope all` emits exactly the four documented warnings and
// exits 0.
void criterion_cli_warnings() {
    bool ok = true;
    std::string detail;
    const char* bin = std::getenv("FIBTREE_BIN");
    if (bin == nullptr) {
        report(9, "cli verify emits the four documented warnings", false,
               "FIBTREE_BIN not set");
        return;
    }
    std::string cmd = std::string(bin) + " verify --scope all 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        report(9, "cli verify emits the four documented warnings", false,
               "failed to launch the binary");
        return;
    }
    std::string out;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe))
        out.append(buffer, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

    std::map<std::string, int> seen;
    std::size_t pos = 0;
    while ((pos = out.find("warning[", pos)) != std::string::npos) {
        std::size_t end = out.find(']', pos);
        if (end == std::string::npos) break;
        ++seen[out.substr(pos + 8, end - pos - 8)];
        pos = end;
    }
    const char* expected[] = {"cor-white-rightmost", "strip-leading-tile",
                              "fib-type-census", "golden-weights"};
    if (code != 0) {
        ok = false;
        detail = "exit status " + std::to_string(code);
    } else if (seen.size() != 4) {
        ok = false;
        detail = "expected 4 warning keys, saw " + std::to_string(seen.size());
    } else {
        for (const char* key : expected) {
            if (seen[key] != 1) {
                ok = false;
                detail = std::string("warning ") + key + " seen " +
                         std::to_string(seen[key]) + " times";
                break;
            }
        }
    }
    if (ok) detail = "exit 0, all four keys exactly once";
    report(9, "cli verify emits the four documented warnings", ok, detail);
}

} // namespace

int main() {
    auto suite_start = Clock::now();

    criterion_level_counts();
    criterion_codecs();
    criterion_sweep(3, "preferred sons, white tree (depth 12)",
                    TreeKind::white, Numeration::fibonacci);
    criterion_sweep(4, "successor and classes, black tree (depth 12)",
                    TreeKind::black, Numeration::fibonacci);
    criterion_sweep(5, "golden preferred sons, white tree (depth 12)",
                    TreeKind::white, Numeration::golden);
    criterion_sweep(6, "golden successor and classes, black tree (depth 12)",
                    TreeKind::black, Numeration::golden);
    criterion_strips();
    criterion_extremal();
    criterion_cli_warnings();

    double total = seconds_since(suite_start);
    bool in_budget = total < 120.0;
    if (!in_budget) ++failures;
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << total << " s total";
    std::printf("AC%-2d %-52s %s — %s\n", 10, "whole gate under two minutes",
                in_budget ? "pass" : "FAIL", d.str().c_str());

    return failures == 0 ? 0 : 1;
}
