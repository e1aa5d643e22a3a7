#include "fibtree/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>

namespace fibtree {

void CheckResult::record_violation(std::string text) {
    ++violation_count;
    if (violations.size() < violation_cap)
        violations.push_back(std::move(text));
}

std::uint64_t Report::total_checked() const noexcept {
    std::uint64_t total = 0;
    for (const auto& check : checks) total += check.checked;
    return total;
}

std::uint64_t Report::total_violations() const noexcept {
    std::uint64_t total = 0;
    for (const auto& check : checks) total += check.violation_count;
    return total;
}

void Report::merge(Report other) {
    checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                  std::make_move_iterator(other.checks.end()));
    census.insert(census.end(), std::make_move_iterator(other.census.begin()),
                  std::make_move_iterator(other.census.end()));
    warnings.insert(warnings.end(),
                    std::make_move_iterator(other.warnings.begin()),
                    std::make_move_iterator(other.warnings.end()));
}

void write_text(std::ostream& out, const Report& report) {
    out << "== " << report.title << " ==\n";
    for (const auto& check : report.checks) {
        out << "  " << std::left << std::setw(28) << check.name << std::right
            << "  range " << check.first << ".." << check.last
            << "  checked " << check.checked
            << "  passed " << check.passed;
        if (check.excluded > 0) out << "  excluded " << check.excluded;
        if (check.violation_count > 0)
            out << "  VIOLATIONS " << check.violation_count;
        if (!check.detail.empty()) out << "  (" << check.detail << ")";
        out << "\n";
        for (const auto& violation : check.violations)
            out << "    ! " << violation << "\n";
        if (check.violation_count > check.violations.size())
            out << "    ! ... and "
                << (check.violation_count - check.violations.size()) << " more\n";
    }
    for (const auto& entry : report.census) {
        out << "  census " << std::left << std::setw(14) << entry.klass
            << std::right << "  count " << entry.count;
        if (entry.count > 0) out << "  first " << entry.first;
        out << "\n";
    }
    for (const auto& warning : report.warnings)
        out << "  warning[" << warning.key << "]: " << warning.text << "\n";
    if (report.total_violations() == 0)
        out << "  result: clean — " << report.checks.size() << " checks, "
            << report.total_checked() << " applications, 0 violations\n";
    else
        out << "  result: FAILED — " << report.total_violations()
            << " violations across " << report.checks.size() << " checks\n";
}

void write_records(std::ostream& out, const Report& report) {
    using json = nlohmann::ordered_json;
    for (const auto& check : report.checks) {
        json record;
        record["record"] = "check";
        record["title"] = report.title;
        record["name"] = check.name;
        record["first"] = check.first;
        record["last"] = check.last;
        record["checked"] = check.checked;
        record["passed"] = check.passed;
        record["excluded"] = check.excluded;
        record["violation_count"] = check.violation_count;
        record["violations"] = check.violations;
        if (!check.detail.empty()) record["detail"] = check.detail;
        out << record.dump() << "\n";
    }
    for (const auto& entry : report.census) {
        json record;
        record["record"] = "census";
        record["title"] = report.title;
        record["class"] = entry.klass;
        record["count"] = entry.count;
        record["first"] = entry.first;
        out << record.dump() << "\n";
    }
    for (const auto& warning : report.warnings) {
        json record;
        record["record"] = "warning";
        record["title"] = report.title;
        record["key"] = warning.key;
        record["text"] = warning.text;
        out << record.dump() << "\n";
    }
    json summary;
    summary["record"] = "summary";
    summary["title"] = report.title;
    summary["checks"] = report.checks.size();
    summary["checked"] = report.total_checked();
    summary["violations"] = report.total_violations();
    summary["clean"] = report.clean();
    out << summary.dump() << "\n";
}

} // namespace fibtree
