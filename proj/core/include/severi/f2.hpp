#pragma once

// Rational curves on F_2 through r0(D) points.

#include "severi/exact.hpp"
#include "severi/fibration.hpp"
#include "severi/record.hpp"

#include <vector>

namespace severi {

struct PairCount {
  DivClass d1;  // the component through q
  DivClass d2;
  ExactInt count;
};

struct F2Census {
  DivClass cls;
  std::vector<PairCount> j;  // ordered splits of D
  std::vector<PairCount> h;  // ordered splits of D - E
  ExactInt n_J;
  ExactInt n_H;
  Rational a_squared;
};

F2Census census_f2(const DivClass& d, const ValueLookup& N);

/// J and H fibers only: G fibers are invisible to pi^*C since C.E = 0.
Fibration f2_fibration(const F2Census& census);

/// The closed-form recursion (half-weighted J sum plus the H sum).
Rational f2_theorem_N(const F2Census& census, const ValueLookup& N);
/// (pi^*C)^2 / 2.
Rational f2_assembly_N(const F2Census& census);

class F2Engine {
 public:
  explicit F2Engine(EngineOptions options = {});

  F2Census census(const DivClass& d) const;
  /// Throws DomainError unless D is countable.
  ExactInt N(const DivClass& d);
  CountRecord record(const DivClass& d);
  std::vector<Route> routes(const DivClass& d);

  void preload(const CountRecord& rec);
  std::vector<CountRecord> records() const { return memo_.snapshot(); }

 private:
  CountRecord compute(const DivClass& d) const;
  ValueLookup lookup() const;

  EngineOptions options_;
  RecordMemo memo_;
};

}  // namespace severi
