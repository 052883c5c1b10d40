#pragma once

#include "fuchs/chartab.hpp"
#include "fuchs/group.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace fuchs {

inline constexpr int kCacheFormatVersion = 1;

std::string table_to_json(const CharacterTable& table);
// Throws CacheError on malformed, mismatched-version or internally inconsistent input.
CharacterTable table_from_json(const std::string& text);

// Explicit directory first, then the FUCHSCOUNT_CACHE environment variable.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir);
std::filesystem::path cache_file(const std::filesystem::path& dir, const GroupSpec& spec);

struct TableBundle {
  GroupTable group;
  ClassData classes;
  CharacterTable table;
  bool from_cache = false;
};

// Builds the group and classes, then loads the table from the cache when it matches, else computes and stores it.
TableBundle load_or_compute_table(const GroupSpec& spec, const std::optional<std::filesystem::path>& cache_dir);

}  // namespace fuchs
