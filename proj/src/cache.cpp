#include "mockform/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "mockform/errors.hpp"

namespace mockform {

namespace fs = std::filesystem;

namespace {

const std::string magic = "MOCKFORM-CACHE";

struct SharedState {
    std::mutex mu;
    std::optional<fs::path> path;
    std::shared_ptr<const ClassNumberTable> table;
};

SharedState& state()
{
    static SharedState s;
    return s;
}

std::int64_t parse_int(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw CacheError("cache: malformed " + what + " '" + s + "'");
    return v;
}

} // namespace

fs::path default_cache_path()
{
    if (const char* env = std::getenv("MOCKFORM_CACHE"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "mockform" / "hurwitz-v1.txt";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "mockform" / "hurwitz-v1.txt";
    return fs::temp_directory_path() / "mockform-hurwitz-v1.txt";
}

std::string serialize_table(const ClassNumberTable& table)
{
    std::ostringstream os;
    os << magic << " v" << cache_version << " max_n=" << table.max_n() << '\n';
    for (std::int64_t n = 0; n <= table.max_n(); ++n) {
        const auto& h = table.at(n);
        os << n << ' ' << h.numerator().get_str() << ' ' << h.denominator().get_str() << '\n';
    }
    return os.str();
}

ClassNumberTable parse_table(const std::string& text)
{
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header))
        throw CacheError("cache: empty file");

    std::istringstream hs(header);
    std::string tag, version, size;
    hs >> tag >> version >> size;
    if (tag != magic || version.size() < 2 || version[0] != 'v')
        throw CacheError("cache: not a mockform cache file (header '" + header + "')");
    const std::int64_t ver = parse_int(version.substr(1), "version");
    if (ver != cache_version)
        throw CacheError("cache: file has version " + std::to_string(ver) + ", this build reads version "
                         + std::to_string(cache_version) + "; rerun with --rebuild-cache");
    if (size.rfind("max_n=", 0) != 0)
        throw CacheError("cache: header lacks max_n");
    const std::int64_t max_n = parse_int(size.substr(6), "max_n");
    if (max_n < 0)
        throw CacheError("cache: negative max_n");

    if (text.back() != '\n')
        throw CacheError("cache: truncated, last line is incomplete");

    std::vector<ExactRational> values;
    values.reserve(static_cast<std::size_t>(max_n + 1));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string n_s, num_s, den_s, extra;
        if (!(ls >> n_s >> num_s >> den_s) || (ls >> extra))
            throw CacheError("cache: malformed entry '" + line + "'");
        const std::int64_t n = parse_int(n_s, "index");
        if (n != static_cast<std::int64_t>(values.size()))
            throw CacheError("cache: expected entry " + std::to_string(values.size()) + ", found " + n_s);
        mpz_class num, den;
        if (num.set_str(num_s, 10) != 0 || den.set_str(den_s, 10) != 0 || den <= 0)
            throw CacheError("cache: malformed rational in entry " + n_s);
        values.emplace_back(num, den);
    }
    if (static_cast<std::int64_t>(values.size()) != max_n + 1)
        throw CacheError("cache: truncated, header promises " + std::to_string(max_n + 1) + " entries but found "
                         + std::to_string(values.size()));
    try {
        return ClassNumberTable(std::move(values));
    } catch (const std::invalid_argument& e) {
        throw CacheError(std::string("cache: ") + e.what());
    }
}

ClassNumberTable load_table(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CacheError("cache: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

void save_table(const fs::path& path, const ClassNumberTable& table)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw CacheError("cache: cannot write " + tmp.string());
        out << serialize_table(table);
        if (!out.flush())
            throw CacheError("cache: write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw CacheError("cache: cannot move table into " + path.string());
    }
}

std::shared_ptr<const ClassNumberTable> shared_table(std::int64_t min_n, const EvalConfig& cfg)
{
    auto& st = state();
    std::lock_guard lock(st.mu);
    if (st.table && st.table->max_n() >= min_n)
        return st.table;

    const fs::path path = st.path.value_or(default_cache_path());
    if (fs::exists(path)) {
        auto loaded = std::make_shared<const ClassNumberTable>(load_table(path));
        if (loaded->max_n() >= min_n) {
            st.table = loaded;
            return st.table;
        }
    }
    auto built = std::make_shared<const ClassNumberTable>(build_table(std::max(min_n, cfg.q_terms), cfg));
    try {
        save_table(path, *built);
    } catch (const CacheError&) {
        // an unwritable cache only costs a rebuild next time
    }
    st.table = built;
    return st.table;
}

fs::path active_cache_path()
{
    auto& st = state();
    std::lock_guard lock(st.mu);
    return st.path.value_or(default_cache_path());
}

void set_cache_path(const fs::path& path)
{
    auto& st = state();
    std::lock_guard lock(st.mu);
    st.path = path;
    st.table.reset();
}

void install_shared_table(ClassNumberTable table)
{
    auto& st = state();
    std::lock_guard lock(st.mu);
    st.table = std::make_shared<const ClassNumberTable>(std::move(table));
}

} // namespace mockform
