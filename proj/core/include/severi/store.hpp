#pragma once

// Tab-separated table of count records:
//
//   severi-table<TAB>format_version=1<TAB>engine_version=1
//   F3<TAB>2,0<TAB>69<TAB>0<TAB>3<TAB>computed
//
// Columns: surface, coefficients (comma separated; one entry on P2), N, N2,
// N3_next, provenance. Absent values are written as "-". Rows are sorted by
// surface, then coefficients, so equal stores serialize to equal bytes.

#include "severi/record.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

class ResultStore {
 public:
  static constexpr int format_version = 1;
  static constexpr int engine_version = 1;

  ResultStore() = default;
  ResultStore(const ResultStore& other);
  ResultStore& operator=(const ResultStore& other);

  std::optional<CountRecord> lookup(SurfaceId surface, const DivClass& cls) const;

  /// Idempotent upsert. Fields present on both sides must agree; a field
  /// missing on one side is filled from the other. Throws IntegrityError.
  void record(const CountRecord& rec);

  std::vector<CountRecord> records() const;
  std::size_t size() const;

  std::string serialize() const;
  /// Throws ParseError (with 1-based row) or MigrationError.
  static ResultStore parse(std::string_view text);

  /// Throws IoError on filesystem failures.
  void save(const std::filesystem::path& path) const;
  static ResultStore load(const std::filesystem::path& path);

  friend bool operator==(const ResultStore& a, const ResultStore& b) { return a.records() == b.records(); }

 private:
  mutable std::shared_mutex mutex_;
  std::map<DivClass, CountRecord> rows_;
};

}  // namespace severi
