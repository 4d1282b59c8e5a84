#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "mockform/class_numbers.hpp"
#include "mockform/config.hpp"

namespace mockform {

inline constexpr int cache_version = 1;

/// $MOCKFORM_CACHE, else $XDG_CACHE_HOME/mockform/hurwitz-v1.txt, else ~/.cache/mockform/hurwitz-v1.txt.
std::filesystem::path default_cache_path();

/// Header "MOCKFORM-CACHE v1 max_n=<N>", then one "n num den" line per entry.
std::string serialize_table(const ClassNumberTable& table);
/// Throws CacheError on a version mismatch, truncation or malformed line.
ClassNumberTable parse_table(const std::string& text);

ClassNumberTable load_table(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void save_table(const std::filesystem::path& path, const ClassNumberTable& table);

/// Process-wide table with max_n ≥ min_n. Looks in memory, then in the cache file, and
/// builds (and persists) a table of size max(min_n, cfg.q_terms) on a miss.
std::shared_ptr<const ClassNumberTable> shared_table(std::int64_t min_n, const EvalConfig& cfg = {});

/// The file shared_table reads and writes.
std::filesystem::path active_cache_path();
/// Redirects shared_table to another file and drops the in-memory copy.
void set_cache_path(const std::filesystem::path& path);
/// Replaces the in-memory table, e.g. after --rebuild-cache.
void install_shared_table(ClassNumberTable table);

} // namespace mockform
