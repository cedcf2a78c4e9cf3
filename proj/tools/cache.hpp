#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "tcg/error.hpp"
#include "tcg/partition.hpp"

namespace tcg::cli {

/// A stored TC result. The certificate uses the canonical labeling of the
/// graph whose canonical form keys the record.
struct CacheEntry {
  std::size_t tc = 0;
  bool exact = false;
  std::string status;
  VertexPartition certificate;
};

class CacheConflict : public Error {
 public:
  using Error::Error;
};

/// Append-only file of (canonical form, tc, exactness, certificate) records.
/// An exact record is never replaced; an inexact one may be upgraded.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  [[nodiscard]] std::optional<CacheEntry> find(const std::string& form) const;

  /// Throws CacheConflict if an exact record with a different tc exists.
  void store(const std::string& form, const CacheEntry& entry);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::filesystem::path& path() const { return path_; }

 private:
  void merge(const std::string& form, const CacheEntry& entry);

  std::filesystem::path path_;
  std::map<std::string, CacheEntry> entries_;
};

}  // namespace tcg::cli
