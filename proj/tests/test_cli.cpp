#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

fs::path cache_file(const std::string& tag = "main")
{
    return fs::temp_directory_path() / ("mockform-test-cli-" + tag + "-v1.txt");
}

CliRun run(const std::string& args, const fs::path& cache = cache_file())
{
    const std::string cmd =
        "MOCKFORM_CACHE='" + cache.string() + "' '" + std::string(MOCKFORM_CLI_PATH) + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json strip_timing(nlohmann::json j)
{
    for (auto& r : j["results"])
        r.erase("elapsed_ms");
    return j;
}

} // namespace

TEST(Cli, HurwitzCsv)
{
    const CliRun r = run("hurwitz --max 4 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,H\n0,-1/12\n1,0\n2,0\n3,1/3\n4,1/2\n");
}

TEST(Cli, HurwitzJsonAndSingleRow)
{
    CliRun r = run("hurwitz --max 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,H\n0,-1/12\n");
    r = run("hurwitz --max 12 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "hurwitz");
    EXPECT_EQ(j["results"].size(), 13u);
    EXPECT_EQ(j["results"][12]["H"], "4/3");
    EXPECT_TRUE(j.contains("params"));
    EXPECT_TRUE(j.contains("summary"));
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("hurwitz --max -1").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("eval --target H --tau nonsense").code, 1);
    EXPECT_EQ(run("eval --target H --tau 0,-1").code, 1);
    EXPECT_EQ(run("eval --target nope --tau 0,1").code, 1);
    EXPECT_EQ(run("verify --suite nope").code, 1);
}

TEST(Cli, EvalTargets)
{
    constexpr double pi = std::numbers::pi;
    CliRun r = run("eval --target H --tau 0,10 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["results"][0]["value"]["re"].get<double>(), -1.0 / 12 + 1 / (8 * pi * std::sqrt(10.0)), 1e-15);

    r = run("eval --target theta --tau 0,10 --format json");
    ASSERT_EQ(r.code, 0);
    j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["results"][0]["value"]["re"].get<double>(), 1 + 2 * std::exp(-20 * pi), 1e-8);

    r = run("eval --target e2star --tau 0,1");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("value="), std::string::npos);

    r = run("eval --target eisenstein --k 2 --s 1 --tau 0,1 --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    j = nlohmann::json::parse(r.out);
    EXPECT_LT(j["results"][0]["relative_difference"].get<double>(), 5e-3);
    EXPECT_TRUE(j["results"][0].contains("fourier_value"));
}

TEST(Cli, EvalDomainViolation)
{
    EXPECT_EQ(run("eval --target H --tau 0,0.01").code, 2);
    EXPECT_EQ(run("eval --target eisenstein --k 1 --s 0 --tau 0,1").code, 2);
}

TEST(Cli, CorruptCacheIsRejectedUntilRebuilt)
{
    const fs::path cache = cache_file("corrupt");
    {
        std::ofstream out(cache, std::ios::trunc);
        out << "MOCKFORM-CACHE v2 max_n=0\n0 -1 12\n";
    }
    CliRun r = run("hurwitz --max 3", cache);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("--rebuild-cache"), std::string::npos) << r.out;
    r = run("--rebuild-cache hurwitz --max 3", cache);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(run("hurwitz --max 3", cache).code, 0);

    {
        std::ofstream out(cache, std::ios::trunc);
        out << "MOCKFORM-CACHE v1 max_n=5\n0 -1 12\n1 0 1\n";
    }
    EXPECT_EQ(run("hurwitz --max 3", cache).code, 2);
    EXPECT_EQ(run("--rebuild-cache hurwitz --max 3", cache).code, 0);
}

TEST(Cli, VerifyMultiplierReportsSignRuleFailures)
{
    const CliRun r = run("verify --suite multiplier");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("FAIL sign_rule.stated"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("PASS theta_cocycle"), std::string::npos);
    EXPECT_NE(r.out.find("PASS two_over_l_root"), std::string::npos);
}

TEST(Cli, VerifyJsonIsDeterministic)
{
    const CliRun a = run("verify --suite multiplier --format json --seed 5");
    const CliRun b = run("verify --suite multiplier --format json --seed 5");
    const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
    EXPECT_EQ(strip_timing(ja), strip_timing(jb));
    EXPECT_EQ(ja["command"], "verify");
    EXPECT_EQ(ja["params"]["seed"], "5");
    EXPECT_EQ(ja["summary"]["total"].get<int>(), static_cast<int>(ja["results"].size()));
    EXPECT_EQ(ja["summary"]["passed"].get<int>() + ja["summary"]["failed"].get<int>(), ja["summary"]["total"].get<int>());
}

TEST(Cli, VerifyLimitsPasses)
{
    const CliRun r = run("verify --suite limits");
    EXPECT_EQ(r.code, 0) << r.out;
}
