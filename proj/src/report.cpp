#include "mockform/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace mockform {

ReportRecord make_record(std::string name, Params params, double residual, double tolerance, std::int64_t elapsed_ms)
{
    ReportRecord r;
    r.check_name = std::move(name);
    r.parameters = std::move(params);
    r.residual = residual;
    r.tolerance = tolerance;
    r.passed = residual <= tolerance;
    r.elapsed_ms = elapsed_ms;
    return r;
}

std::size_t Report::passed_count() const
{
    std::size_t n = 0;
    for (const auto& r : results)
        n += r.passed ? 1 : 0;
    return n;
}

namespace {

nlohmann::ordered_json params_json(const Params& p)
{
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : p)
        obj[k] = v;
    return obj;
}

} // namespace

std::string to_json(const Report& report)
{
    nlohmann::ordered_json j;
    j["command"] = report.command;
    j["params"] = params_json(report.params);
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json rec;
        rec["check_name"] = r.check_name;
        rec["parameters"] = params_json(r.parameters);
        // JSON has no NaN/inf
        if (std::isfinite(r.residual))
            rec["residual"] = r.residual;
        else
            rec["residual"] = nullptr;
        rec["tolerance"] = r.tolerance;
        rec["passed"] = r.passed;
        rec["elapsed_ms"] = r.elapsed_ms;
        j["results"].push_back(std::move(rec));
    }
    const std::size_t passed = report.passed_count();
    j["summary"] = {{"total", report.results.size()},
                    {"passed", passed},
                    {"failed", report.results.size() - passed}};
    return j.dump(2) + "\n";
}

std::string to_text(const Report& report)
{
    std::ostringstream os;
    for (const auto& r : report.results) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-4s %-40s residual=%.3e tol=%.1e", r.passed ? "PASS" : "FAIL",
                      r.check_name.c_str(), r.residual, r.tolerance);
        os << buf;
        for (const auto& [k, v] : r.parameters)
            os << ' ' << k << '=' << v;
        os << " (" << r.elapsed_ms << " ms)\n";
    }
    os << report.passed_count() << '/' << report.results.size() << " checks passed\n";
    return os.str();
}

} // namespace mockform
