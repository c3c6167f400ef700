#include "severi/f2.hpp"

#include "severi/errors.hpp"

namespace severi {

namespace {

const SurfaceModel& f2() { return SurfaceModel::get(SurfaceId::F2); }

ExactInt z(std::int64_t v) { return ExactInt(static_cast<long>(v)); }

}  // namespace

F2Census census_f2(const DivClass& d, const ValueLookup& N) {
  const auto& s = f2();
  if (!is_countable(s, d)) throw DomainError(format_class(d) + " is not countable on F2");
  const std::int64_t r = expected_dim(s, d);
  const DivClass e = s.E();
  F2Census out{d, {}, {}, 0, 0, Rational(0)};
  for (const auto& [d1, d2] : split_pairs(s, d)) {
    ExactInt w = N(d1) * N(d2) * z(s.dot(d1, d2));
    const std::int64_t r1 = expected_dim(s, d1);
    out.j.push_back({d1, d2, w * binom(r - 2, r1 - 1)});
    out.n_J += w * binom(r - 3, r1 - 1);
  }
  for (const auto& [d1, d2] : split_pairs(s, d - e)) {
    ExactInt w = N(d1) * N(d2) * z(s.dot(d1, e) * s.dot(d2, e));
    const std::int64_t r1 = expected_dim(s, d1);
    out.h.push_back({d1, d2, w * binom(r - 2, r1 - 1)});
    out.n_H += w * binom(r - 3, r1 - 1);
  }
  out.a_squared = -Rational(out.n_J + 2 * out.n_H) / 2;
  return out;
}

Fibration f2_fibration(const F2Census& census) {
  const auto& s = f2();
  Fibration fib(s, census.cls, census.a_squared);
  for (const auto& p : census.j) fib.add(make_fiber(s, FiberType::J, std::array{p.d1, p.d2}), p.count);
  for (const auto& p : census.h) fib.add(make_fiber(s, FiberType::Hf2, std::array{p.d1, p.d2}), p.count);
  return fib;
}

Rational f2_theorem_N(const F2Census& census, const ValueLookup& N) {
  const auto& s = f2();
  const DivClass& d = census.cls;
  if (d == s.F()) return Rational(1);
  const std::int64_t r = expected_dim(s, d);
  const DivClass c = s.C(), e = s.E();
  auto bracket = [&](const DivClass& d1, const DivClass& d2) -> ExactInt {
    const std::int64_t r1 = expected_dim(s, d1), c1 = s.dot(d1, c), c2 = s.dot(d2, c);
    return binom(r - 3, r1 - 1) * z(c1 * c2) - binom(r - 3, r1 - 2) * z(c2 * c2);
  };
  ExactInt half = 0, whole = 0;
  for (const auto& [d1, d2] : split_pairs(s, d)) half += N(d1) * N(d2) * z(s.dot(d1, d2)) * bracket(d1, d2);
  for (const auto& [d1, d2] : split_pairs(s, d - e))
    whole += N(d1) * N(d2) * z(s.dot(d1, e) * s.dot(d2, e)) * bracket(d1, d2);
  return Rational(half) / 2 + Rational(whole);
}

Rational f2_assembly_N(const F2Census& census) {
  if (census.cls == f2().F()) return Rational(1);
  Fibration fib = f2_fibration(census);
  auto pc = fib.pullback(f2().C());
  return fib.intersect(pc, pc) / 2;
}

F2Engine::F2Engine(EngineOptions options) : options_(options) {}

ValueLookup F2Engine::lookup() const {
  return [this](const DivClass& c) -> ExactInt {
    auto rec = memo_.find(c);
    if (!rec) throw DependencyError("N(" + format_class(c) + ") on F2 has not been evaluated");
    return rec->N;
  };
}

F2Census F2Engine::census(const DivClass& d) const { return census_f2(d, lookup()); }

CountRecord F2Engine::compute(const DivClass& d) const {
  if (d == f2().F()) return CountRecord{d, 1, std::nullopt, std::nullopt, Provenance::seed};
  auto N = lookup();
  F2Census c = census_f2(d, N);
  Rational theorem = f2_theorem_N(c, N);
  if (options_.cross_check) {
    std::vector<Route> r{{"N", "closed_form", theorem}, {"N", "assembly", f2_assembly_N(c)}};
    require_agreement(d, r, "N");
  }
  ExactInt n = require_integer(theorem, "N(" + format_class(d) + ")");
  if (n < 0) throw ConsistencyError("negative count for " + format_class(d), {{"N", to_string(n)}});
  return CountRecord{d, n, std::nullopt, std::nullopt, Provenance::computed};
}

CountRecord F2Engine::record(const DivClass& d) {
  for (const auto& c : evaluation_order(f2(), d)) {
    if (!memo_.find(c)) memo_.insert(compute(c));
  }
  return *memo_.find(d);
}

ExactInt F2Engine::N(const DivClass& d) { return record(d).N; }

std::vector<Route> F2Engine::routes(const DivClass& d) {
  CountRecord rec = record(d);
  if (rec.provenance == Provenance::seed) return {{"N", "seed", Rational(rec.N)}};
  auto N = lookup();
  F2Census c = census_f2(d, N);
  return {{"N", "closed_form", f2_theorem_N(c, N)}, {"N", "assembly", f2_assembly_N(c)}};
}

void F2Engine::preload(const CountRecord& rec) {
  if (rec.cls.surface != SurfaceId::F2) throw DomainError("record for another surface");
  memo_.insert(rec);
}

}  // namespace severi
