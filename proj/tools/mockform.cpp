#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mockform/cache.hpp"
#include "mockform/class_numbers.hpp"
#include "mockform/eisenstein.hpp"
#include "mockform/errors.hpp"
#include "mockform/maass.hpp"
#include "mockform/report.hpp"
#include "mockform/verify.hpp"

using namespace mockform;
using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

namespace {

constexpr int exit_ok = 0, exit_usage = 1, exit_failure = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

UpperHalfPoint parse_tau(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--tau expects \"u,v\", got '" + text + "'");
    double u = 0, v = 0;
    try {
        std::size_t used_u = 0, used_v = 0;
        const std::string us = text.substr(0, comma), vs = text.substr(comma + 1);
        u = std::stod(us, &used_u);
        v = std::stod(vs, &used_v);
        if (used_u != us.size() || used_v != vs.size())
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw UsageError("--tau expects \"u,v\", got '" + text + "'");
    }
    if (!(v > 0))
        throw UsageError("--tau needs v > 0");
    return {u, v};
}

json complex_json(cplx z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

std::string complex_text(cplx z)
{
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::shared_ptr<const ClassNumberTable> table_for(std::int64_t max_n, bool rebuild, const EvalConfig& cfg)
{
    if (rebuild) {
        ClassNumberTable t = build_table(std::max(max_n, cfg.q_terms), cfg);
        save_table(active_cache_path(), t);
        install_shared_table(t);
    }
    return shared_table(max_n, cfg);
}

int cmd_hurwitz(std::int64_t max_n, const std::string& format, bool rebuild, const EvalConfig& cfg)
{
    auto table = table_for(max_n, rebuild, cfg);
    if (format == "csv") {
        std::cout << "n,H\n";
        for (std::int64_t n = 0; n <= max_n; ++n)
            std::cout << n << ',' << table->at(n).to_string() << '\n';
        return exit_ok;
    }
    json j;
    j["command"] = "hurwitz";
    j["params"] = {{"max", max_n}};
    j["results"] = json::array();
    for (std::int64_t n = 0; n <= max_n; ++n)
        j["results"].push_back({{"n", n}, {"H", table->at(n).to_string()}});
    j["summary"] = {{"count", max_n + 1}, {"cross_checked", true}};
    std::cout << j.dump(2) << '\n';
    return exit_ok;
}

int cmd_eval(const std::string& target, const std::string& tau_text, int k, double s, const std::string& format,
             bool rebuild, const EvalConfig& cfg)
{
    const UpperHalfPoint tau = parse_tau(tau_text);
    json j;
    j["command"] = "eval";
    j["params"] = {{"target", target}, {"tau", {{"u", tau.u}, {"v", tau.v}}}};
    json result;
    if (target == "H") {
        if (rebuild)
            table_for(zagier_H_terms(tau.v, 1e-18), true, cfg);
        const HarmonicFormValue h = zagier_H(tau, cfg);
        result = {{"value", complex_json(h.value)},
                  {"holomorphic_part", complex_json(h.holomorphic_part)},
                  {"nonholomorphic_part", complex_json(h.nonholomorphic_part)},
                  {"truncation_tail", h.truncation_tail}};
    } else if (target == "theta") {
        std::int64_t N = 0;
        while (theta_tail_bound(tau.v, N) > 1e-18)
            ++N;
        result = {{"value", complex_json(theta(tau, cfg))}, {"truncation_tail", theta_tail_bound(tau.v, N)}};
    } else if (target == "e2star") {
        const cplx e = e2_star(tau, cfg);
        const cplx nonhol = -3 / (std::numbers::pi * tau.v);
        result = {{"value", complex_json(e)},
                  {"holomorphic_part", complex_json(e - nonhol)},
                  {"nonholomorphic_part", complex_json(nonhol)}};
    } else {
        j["params"]["k"] = k;
        j["params"]["s"] = s;
        const cplx direct = eisenstein_direct(EisensteinKind::H, k, s, tau, cfg);
        const cplx fourier = eisenstein_fourier(k, s, tau, cfg, EisensteinKind::H);
        result = {{"value", complex_json(direct)},
                  {"fourier_value", complex_json(fourier)},
                  {"relative_difference", std::abs(direct - fourier) / std::abs(direct)},
                  {"direct_tail_estimate", eisenstein_direct_tail(k, s, tau, cfg)}};
    }
    j["results"] = json::array({result});
    j["summary"] = {{"count", 1}};

    if (format == "json") {
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    std::cout << "target=" << target << " tau=" << tau.u << ',' << tau.v << '\n';
    for (const auto& [key, val] : result.items()) {
        if (val.is_object())
            std::cout << key << '=' << complex_text({val["re"].get<double>(), val["im"].get<double>()}) << '\n';
        else
            std::cout << key << '=' << val.dump() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& suite, const std::string& format, std::uint64_t seed, bool rebuild,
               const EvalConfig& cfg)
{
    if (rebuild)
        table_for(cfg.q_terms, true, cfg);
    VerifyOptions opts{cfg, seed};
    Report report;
    report.command = "verify";
    report.params = {{"suite", suite}, {"seed", std::to_string(seed)}};
    report.results = run_suite(suite, opts);
    std::cout << (format == "json" ? to_json(report) : to_text(report));
    return report.all_passed() ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hurwitz class numbers, their completed generating function, and half-integral weight Eisenstein series"};
    app.require_subcommand(1);

    EvalConfig cfg;
    std::string cache_path;
    bool rebuild = false;
    app.add_option("--cache", cache_path, "class number cache file (overrides MOCKFORM_CACHE)");
    app.add_flag("--rebuild-cache", rebuild, "rebuild the class number cache before running");
    app.add_option("--lattice-bound", cfg.lattice_bound, "M, lattice truncation")->capture_default_str();
    app.add_option("--fourier-bound", cfg.fourier_bound, "H, Fourier truncation")->capture_default_str();
    app.add_option("--q-terms", cfg.q_terms, "N, minimum class number table size")->capture_default_str();
    app.add_option("--fd-step", cfg.fd_step, "relative finite-difference step")->capture_default_str();
    app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")->capture_default_str();
    app.add_option("--target-tol", cfg.target_tol, "series truncation tolerance")->capture_default_str();

    auto* hur = app.add_subcommand("hurwitz", "tabulate H(n), cross-checked against the L-value formula");
    std::int64_t max_n = 0;
    std::string hur_format = "csv";
    hur->add_option("--max", max_n, "largest n")->required()->check(CLI::NonNegativeNumber);
    hur->add_option("--format", hur_format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    auto* ev = app.add_subcommand("eval", "evaluate a form at one point");
    std::string target, tau_text, ev_format = "text";
    int k = 1;
    double s = 1;
    ev->add_option("--target", target)->required()->check(CLI::IsMember({"H", "theta", "e2star", "eisenstein"}));
    ev->add_option("--tau", tau_text, "\"u,v\" with v > 0")->required();
    ev->add_option("--k", k, "weight k + 1/2 (eisenstein)")->capture_default_str();
    ev->add_option("--s", s, "spectral parameter (eisenstein)")->capture_default_str();
    ev->add_option("--format", ev_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", ver_format = "text";
    std::uint64_t seed = 1729;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ver->add_option("--suite", suite)->check(CLI::IsMember(suites))->capture_default_str();
    ver->add_option("--format", ver_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    ver->add_option("--seed", seed, "seed for random matrix words")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.validate();
        if (!cache_path.empty())
            set_cache_path(cache_path);
        if (*hur)
            return cmd_hurwitz(max_n, hur_format, rebuild, cfg);
        if (*ev)
            return cmd_eval(target, tau_text, k, s, ev_format, rebuild, cfg);
        return cmd_verify(suite, ver_format, seed, rebuild, cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CrossCheckError& e) {
        std::cerr << "error: " << e.what() << " (n = " << e.offending() << ")\n";
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
