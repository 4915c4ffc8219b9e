#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "privword/enumeration.hpp"

namespace privword {

/// Plain-text store of CountRecords, one per line:
///
///   # n,q,count,method,wall_time
///   20,2,20788,exhaustive,0.012345
///
/// Records are keyed by (n, q) and immutable once written. Lines that fail to
/// parse or validate are skipped and reported through warnings().
class CountCache {
 public:
  explicit CountCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// nullopt if no valid record for (n, q) exists.
  std::optional<CountRecord> load(std::size_t n, unsigned q);

  /// Appends the record. Storing an equal count again is a no-op; a different
  /// count for an existing key throws CacheError.
  void store(const CountRecord& record);

  /// Diagnostics collected by the most recent load/store.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<CountRecord> read_all();

  std::filesystem::path path_;
  std::vector<std::string> warnings_;
};

}  // namespace privword
