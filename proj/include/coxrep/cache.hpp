#pragma once

// On-disk cache of enumerated groups (elements, generators, class map) and of
// character tables, keyed by GroupSpec::key().  Files carry a magic tag and a
// format version; any mismatch or read error is treated as a miss.

#include <filesystem>
#include <optional>

#include "coxrep/chartab.hpp"
#include "coxrep/matgroup.hpp"

namespace coxrep {

inline constexpr std::uint32_t kGroupCacheVersion = 1;
inline constexpr std::uint32_t kTableCacheVersion = 1;

class Cache {
 public:
  /// Disabled cache: every lookup misses and nothing is written.
  Cache() = default;
  explicit Cache(std::filesystem::path dir);
  /// Directory from COXREP_CACHE_DIR, or a disabled cache when unset or empty.
  static Cache from_environment();

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  std::filesystem::path group_path(const GroupSpec& spec) const;
  std::filesystem::path table_path(const GroupSpec& spec) const;

  std::optional<GroupPtr> load_group(const GroupSpec& spec) const;
  void store_group(const GroupSpec& spec, const MatrixGroup& group) const;
  std::optional<CharacterTable> load_table(const GroupSpec& spec, GroupPtr group) const;
  void store_table(const GroupSpec& spec, const CharacterTable& table) const;

  /// Load or enumerate (and store).
  GroupPtr group(const GroupSpec& spec, std::uint64_t bound = kDefaultGroupBound) const;
  /// Load or compute (and store).
  CharacterTable table(const GroupSpec& spec, GroupPtr group, std::uint64_t bound = kDefaultTableBound) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace coxrep
