#pragma once

// Rational curves on F_3: the coupled degrees N_3(D - E), N(D) and N_2(D).
// The census of D reads N and N_2 of strictly smaller classes only.

#include "severi/exact.hpp"
#include "severi/f2.hpp"
#include "severi/fibration.hpp"
#include "severi/record.hpp"

#include <vector>

namespace severi {

struct TripleCount {
  DivClass d1;  // through q
  DivClass d2;  // d2 <= d3; the pair is unordered
  DivClass d3;
  int sigma = 1;  // 2 when d2 == d3
  ExactInt count;
};

struct F3Census {
  DivClass cls;
  std::vector<PairCount> j;       // ordered splits of D
  std::vector<PairCount> k;       // ordered splits of D - E, D1 tangent to E
  std::vector<PairCount> kprime;  // ordered splits of D - E, D2 tangent to E
  std::vector<TripleCount> h;     // geometric fibers over triples of D - E
  ExactInt g_count;               // N_3(D - E)
  ExactInt n_J;
  ExactInt n_K;
  ExactInt n_Kprime;
  ExactInt n_H;
  Rational a_squared;
};

struct F3Record {
  CountRecord record;
  F3Census census;
};

/// Fiber counts, crossing numbers and A^2; g_count is left at 0. Throws
/// ConsistencyError if n_K != n_K' or the two A^2 expressions disagree.
F3Census census_f3(const DivClass& d, const ValueLookup& N, const ValueLookup& N2);

/// All fibers of the census, G fibers included with multiplicity g_count.
Fibration f3_fibration(const F3Census& census);

// Closed forms.
Rational f3_theorem_N(const F3Census& census, const ValueLookup& N, const ValueLookup& N2);
/// The (1/3)-weighted J and H sums of the theorem taken together; the
/// integrality check applies to this group.
Rational f3_theorem_third_group(const F3Census& census, const ValueLookup& N);
Rational f3_formula_c(const F3Census& census);
/// N_2 from N, N_3 and the census; K and K' weights as forced by the lattice.
Rational f3_formula_b(const F3Census& census, const ExactInt& n_d);
/// The historical variant with weight 6 on every K and K' fiber. Diagnostic
/// only: it is off whenever a K fiber has E.D2 != 1 or a K' fiber E.D2 != 2.
Rational f3_formula_b_printed(const F3Census& census, const ExactInt& n_d);

// Assembly routes.
/// The g_count making (pi^*F)^2 vanish, with every other count fixed.
Rational f3_assembly_N3(const F3Census& census);
/// (pi^*C)^2 / 3.
Rational f3_assembly_N(const F3Census& census);
/// Etilde^2 + Etilde . omega.
Rational f3_assembly_N2(const F3Census& census);

class F3Engine {
 public:
  explicit F3Engine(EngineOptions options = {});

  /// Full census including g_count; needs every smaller class memoized.
  F3Census census(const DivClass& d) const;

  ExactInt N(const DivClass& d);
  ExactInt N2(const DivClass& d);
  ExactInt N3_next(const DivClass& d);
  Rational a_squared(const DivClass& d);

  /// Evaluates the dependency closure of D in order, then D itself.
  F3Record full_record(const DivClass& d);
  CountRecord record(const DivClass& d);
  std::vector<Route> routes(const DivClass& d);

  void preload(const CountRecord& rec);
  std::vector<CountRecord> records() const { return memo_.snapshot(); }

 private:
  F3Record compute(const DivClass& d) const;
  void ensure(const DivClass& d);
  ValueLookup lookup_N() const;
  ValueLookup lookup_N2() const;

  EngineOptions options_;
  RecordMemo memo_;
};

}  // namespace severi
