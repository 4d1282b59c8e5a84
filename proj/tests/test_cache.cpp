#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mockform/cache.hpp"
#include "mockform/errors.hpp"

using namespace mockform;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "mockform-test-cache";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream(p, std::ios::binary | std::ios::trunc) << text;
}

} // namespace

TEST(Cache, Format)
{
    const std::string text = serialize_table(build_table(4));
    EXPECT_EQ(text, "MOCKFORM-CACHE v1 max_n=4\n0 -1 12\n1 0 1\n2 0 1\n3 1 3\n4 1 2\n");
}

TEST(Cache, RoundTripIsByteIdentical)
{
    const fs::path p = scratch("roundtrip.txt");
    const ClassNumberTable t = build_table(100);
    save_table(p, t);
    const std::string first = slurp(p);
    const ClassNumberTable back = load_table(p);
    EXPECT_EQ(back.values(), t.values());
    save_table(p, back);
    EXPECT_EQ(slurp(p), first);
}

TEST(Cache, RejectsTruncation)
{
    std::string text = serialize_table(build_table(20));
    text.resize(text.size() - 12);
    try {
        parse_table(text);
        FAIL() << "expected CacheError";
    } catch (const CacheError& e) {
        EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos) << e.what();
    }
}

TEST(Cache, RejectsOtherVersions)
{
    std::string text = serialize_table(build_table(5));
    text.replace(text.find("v1"), 2, "v2");
    try {
        parse_table(text);
        FAIL() << "expected CacheError";
    } catch (const CacheError& e) {
        EXPECT_NE(std::string(e.what()).find("--rebuild-cache"), std::string::npos) << e.what();
    }
}

TEST(Cache, RejectsMalformedContent)
{
    EXPECT_THROW(parse_table(""), CacheError);
    EXPECT_THROW(parse_table("HELLO v1 max_n=0\n0 -1 12\n"), CacheError);
    EXPECT_THROW(parse_table("MOCKFORM-CACHE v1 max_n=1\n0 -1 12\n2 0 1\n"), CacheError);
    EXPECT_THROW(parse_table("MOCKFORM-CACHE v1 max_n=1\n0 -1 12\n1 x 1\n"), CacheError);
    // invariant violation: H(1) must vanish
    EXPECT_THROW(parse_table("MOCKFORM-CACHE v1 max_n=1\n0 -1 12\n1 1 3\n"), CacheError);
    EXPECT_THROW(load_table(scratch("does-not-exist.txt")), CacheError);
}

TEST(Cache, SharedTableBuildsPersistsAndRefusesCorruption)
{
    const fs::path p = scratch("shared.txt");
    fs::remove(p);
    set_cache_path(p);
    EXPECT_EQ(active_cache_path(), p);
    EvalConfig cfg;
    cfg.q_terms = 50;
    auto t = shared_table(30, cfg);
    EXPECT_EQ(t->max_n(), 50);
    EXPECT_TRUE(fs::exists(p));
    EXPECT_EQ(load_table(p).max_n(), 50);

    // a fresh process state reads the file rather than rebuilding
    set_cache_path(p);
    EXPECT_EQ(shared_table(40, cfg)->max_n(), 50);

    spit(p, "MOCKFORM-CACHE v2 max_n=0\n0 -1 12\n");
    set_cache_path(p);
    EXPECT_THROW(shared_table(10, cfg), CacheError);
    fs::remove(p);
}

TEST(Cache, EnvironmentOverride)
{
    setenv("MOCKFORM_CACHE", "/tmp/somewhere/cache.txt", 1);
    EXPECT_EQ(default_cache_path(), fs::path("/tmp/somewhere/cache.txt"));
    unsetenv("MOCKFORM_CACHE");
    EXPECT_NE(default_cache_path(), fs::path("/tmp/somewhere/cache.txt"));
}
