#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mockform {

using Params = std::vector<std::pair<std::string, std::string>>;

struct ReportRecord {
    std::string check_name;
    Params parameters;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
    std::int64_t elapsed_ms = 0;
};

/// passed = residual ≤ tolerance; a NaN residual fails.
ReportRecord make_record(std::string name, Params params, double residual, double tolerance,
                         std::int64_t elapsed_ms = 0);

struct Report {
    std::string command;
    Params params;
    std::vector<ReportRecord> results;

    std::size_t passed_count() const;
    bool all_passed() const { return passed_count() == results.size(); }
};

/// {"command", "params", "results", "summary": {"total", "passed", "failed"}}.
std::string to_json(const Report& report);
/// One line per record.
std::string to_text(const Report& report);

} // namespace mockform
