#include "severi/plane.hpp"

#include "severi/errors.hpp"

namespace severi {

namespace {

const SurfaceModel& p2() { return SurfaceModel::get(SurfaceId::P2); }

Rational q(const ExactInt& v) { return Rational(v); }

std::vector<Route> all_routes(std::int64_t d, const ValueLookup& N) {
  PlaneCensus c = census_plane(d, N);
  Fibration fib = plane_fibration(c);
  auto pl = fib.pullback(p2().line());
  Rational sq = fib.intersect(pl, pl);
  ExactInt n = plane_N_kontsevich(d, N);
  return {
      {"N", "closed_form", q(n)},
      {"N", "unexpanded", plane_N_unexpanded(c)},
      {"N", "assembly", sq},
      {"N2", "closed_form", q(plane_N2_closed(d, n, N))},
      {"N2", "expanded", q(plane_N2_expanded(d, N))},
      {"N2", "assembly", sq + fib.intersect(fib.dualizing(), pl)},
  };
}

}  // namespace

PlaneCensus census_plane(std::int64_t d, const ValueLookup& N) {
  if (d < 1) throw DomainError("plane degree must be positive");
  PlaneCensus out;
  out.degree = d;
  out.n_J = 0;
  for (std::int64_t d1 = 1; d1 < d; ++d1) {
    const std::int64_t d2 = d - d1;
    ExactInt w = N(plane_class(d1)) * N(plane_class(d2)) * (d1 * d2);
    out.entries.push_back({d1, d2, w * binom(3 * d - 3, 3 * d1 - 2)});
    out.n_J += w * binom(3 * d - 4, 3 * d1 - 2);
  }
  out.a_squared = -Rational(out.n_J) / 2;
  return out;
}

Fibration plane_fibration(const PlaneCensus& census) {
  Fibration fib(p2(), plane_class(census.degree), census.a_squared);
  for (const auto& e : census.entries) {
    std::array<DivClass, 2> parts{plane_class(e.d1), plane_class(e.d2)};
    fib.add(make_fiber(p2(), FiberType::J, parts), e.j);
  }
  return fib;
}

ExactInt plane_N_kontsevich(std::int64_t d, const ValueLookup& N) {
  if (d == 1) return 1;
  ExactInt out = 0;
  for (std::int64_t d1 = 1; d1 < d; ++d1) {
    const std::int64_t d2 = d - d1;
    ExactInt bracket = binom(3 * d - 4, 3 * d1 - 2) * (d1 * d1 * d2 * d2) -
                       binom(3 * d - 4, 3 * d1 - 3) * (d1 * d2 * d2 * d2);
    out += N(plane_class(d1)) * N(plane_class(d2)) * bracket;
  }
  return out;
}

Rational plane_N_unexpanded(const PlaneCensus& census) {
  const std::int64_t d = census.degree;
  Rational out = Rational(census.n_J) * (d * d) / 2;
  for (const auto& e : census.entries) out -= q(e.j * (e.d2 * e.d2));
  return out;
}

ExactInt plane_N2_closed(std::int64_t d, const ExactInt& n_d, const ValueLookup& N) {
  ExactInt out = n_d;
  for (std::int64_t d1 = 1; d1 < d; ++d1) {
    const std::int64_t d2 = d - d1;
    out += N(plane_class(d1)) * N(plane_class(d2)) * (d1 * d2 * d2) * binom(3 * d - 4, 3 * d1 - 3);
  }
  return out;
}

ExactInt plane_N2_expanded(std::int64_t d, const ValueLookup& N) {
  ExactInt out = 0;
  for (std::int64_t d1 = 1; d1 < d; ++d1) {
    const std::int64_t d2 = d - d1;
    ExactInt bracket = binom(3 * d - 4, 3 * d1 - 2) * (d1 * d1 * d2 * d2) -
                       binom(3 * d - 4, 3 * d1 - 3) * (d1 * d2 * d2 * d2) +
                       binom(3 * d - 4, 3 * d1 - 3) * (d1 * d2 * d2);
    out += N(plane_class(d1)) * N(plane_class(d2)) * bracket;
  }
  return out;
}

PlaneEngine::PlaneEngine(EngineOptions options) : options_(options) {}

ValueLookup PlaneEngine::lookup() const {
  return [this](const DivClass& c) -> ExactInt {
    auto rec = memo_.find(c);
    if (!rec) throw DependencyError("N(" + format_class(c) + ") on P2 has not been evaluated");
    return rec->N;
  };
}

PlaneCensus PlaneEngine::census(std::int64_t d) const { return census_plane(d, lookup()); }

CountRecord PlaneEngine::compute(std::int64_t d) const {
  if (d == 1) return CountRecord{plane_class(1), 1, std::nullopt, std::nullopt, Provenance::seed};
  auto N = lookup();
  ExactInt n = plane_N_kontsevich(d, N);
  ExactInt n2 = plane_N2_closed(d, n, N);
  if (options_.cross_check) {
    auto r = all_routes(d, N);
    require_agreement(plane_class(d), r, "N");
    require_agreement(plane_class(d), r, "N2");
  }
  if (n < 0 || n2 < 0) {
    throw ConsistencyError("negative plane count", {{"N", to_string(n)}, {"N2", to_string(n2)}});
  }
  return CountRecord{plane_class(d), n, n2, std::nullopt, Provenance::computed};
}

CountRecord PlaneEngine::record(std::int64_t d) {
  if (d < 1) throw DomainError("plane degree must be positive");
  for (std::int64_t k = 1; k <= d; ++k) {
    if (!memo_.find(plane_class(k))) memo_.insert(compute(k));
  }
  return *memo_.find(plane_class(d));
}

ExactInt PlaneEngine::N(std::int64_t d) { return record(d).N; }

ExactInt PlaneEngine::N2(std::int64_t d) {
  if (d < 2) throw DomainError("N2 is undefined for lines");
  return *record(d).N2;
}

std::vector<Route> PlaneEngine::routes(std::int64_t d) {
  CountRecord rec = record(d);
  if (d == 1) return {{"N", "seed", q(rec.N)}};
  return all_routes(d, lookup());
}

void PlaneEngine::preload(const CountRecord& rec) {
  if (rec.cls.surface != SurfaceId::P2) throw DomainError("record for another surface");
  memo_.insert(rec);
}

}  // namespace severi
