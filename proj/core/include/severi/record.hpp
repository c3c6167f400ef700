#pragma once

#include "severi/exact.hpp"
#include "severi/lattice.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

enum class Provenance { seed, computed };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

struct CountRecord {
  DivClass cls;
  ExactInt N;
  std::optional<ExactInt> N2;
  std::optional<ExactInt> N3_next;  // N_3(D - E), F_3 only
  Provenance provenance = Provenance::computed;

  /// Same class and same values; provenance is ignored.
  bool same_values(const CountRecord& other) const;
  friend bool operator==(const CountRecord& a, const CountRecord& b) {
    return a.same_values(b) && a.provenance == b.provenance;
  }
};

struct EngineOptions {
  /// Run the fibration assembly next to the closed forms and throw
  /// ConsistencyError on any disagreement.
  bool cross_check = true;
};

/// One evaluation of one quantity, for side-by-side reports.
struct Route {
  std::string quantity;
  std::string route;
  Rational value;
  /// Diagnostic routes are printed but never compared.
  bool diagnostic = false;
};

/// Reads N (or N_2) of a smaller class; throws DependencyError when missing.
using ValueLookup = std::function<ExactInt(const DivClass&)>;

/// Thread-safe class -> record map. Inserting a record for a key that is
/// already present is a no-op when the values agree and a ConsistencyError
/// otherwise, so racing writers are harmless.
class RecordMemo {
 public:
  std::optional<CountRecord> find(const DivClass& cls) const;
  CountRecord insert(const CountRecord& rec);
  std::vector<CountRecord> snapshot() const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<DivClass, CountRecord> records_;
};

/// Countable classes read, directly or through smaller censuses, when
/// evaluating D; increasing (a, then b) order with D last. On P^2 this is
/// 1..d. Every entry only depends on entries before it.
std::vector<DivClass> evaluation_order(const SurfaceModel& s, const DivClass& d);

/// Throws ConsistencyError listing every route value unless all
/// non-diagnostic routes for `quantity` agree.
void require_agreement(const DivClass& cls, const std::vector<Route>& routes, std::string_view quantity);

}  // namespace severi
