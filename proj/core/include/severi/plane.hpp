#pragma once

// Rational plane curves: N(d) through 3d - 1 points and N_2(d), the number
// tangent to a fixed line through 3d - 2 points.

#include "severi/exact.hpp"
#include "severi/fibration.hpp"
#include "severi/record.hpp"

#include <cstdint>
#include <vector>

namespace severi {

struct PlaneSplit {
  std::int64_t d1;
  std::int64_t d2;
  ExactInt j;
};

struct PlaneCensus {
  std::int64_t degree = 0;
  std::vector<PlaneSplit> entries;  // ordered splits, d1 ascending
  ExactInt n_J;
  Rational a_squared;
};

/// Reducible fibers of the degree-d family. `N` must know every degree < d.
PlaneCensus census_plane(std::int64_t d, const ValueLookup& N);

/// The J-fiber fibration for the census.
Fibration plane_fibration(const PlaneCensus& census);

/// sum N(d1)N(d2)[d1^2 d2^2 C(3d-4, 3d1-2) - d1 d2^3 C(3d-4, 3d1-3)].
ExactInt plane_N_kontsevich(std::int64_t d, const ValueLookup& N);
/// (n_J / 2) d^2 - sum j d2^2, the same sum before expanding d = d1 + d2.
Rational plane_N_unexpanded(const PlaneCensus& census);
/// N(d) + sum N(d1)N(d2) d1 d2^2 C(3d-4, 3d1-3).
ExactInt plane_N2_closed(std::int64_t d, const ExactInt& n_d, const ValueLookup& N);
/// The same with N(d) replaced by its Kontsevich sum.
ExactInt plane_N2_expanded(std::int64_t d, const ValueLookup& N);

class PlaneEngine {
 public:
  explicit PlaneEngine(EngineOptions options = {});

  /// Census of d; reads only memoized smaller degrees.
  PlaneCensus census(std::int64_t d) const;

  ExactInt N(std::int64_t d);
  /// Throws DomainError for d < 2.
  ExactInt N2(std::int64_t d);
  CountRecord record(std::int64_t d);

  /// Every evaluation route for N(d) and N_2(d).
  std::vector<Route> routes(std::int64_t d);

  /// Seeds the memo, e.g. from a stored table.
  void preload(const CountRecord& rec);
  std::vector<CountRecord> records() const { return memo_.snapshot(); }

 private:
  CountRecord compute(std::int64_t d) const;
  ValueLookup lookup() const;

  EngineOptions options_;
  RecordMemo memo_;
};

}  // namespace severi
