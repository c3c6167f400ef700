#include "severi/f3.hpp"

#include "severi/errors.hpp"

namespace severi {

namespace {

const SurfaceModel& f3() { return SurfaceModel::get(SurfaceId::F3); }

ExactInt z(std::int64_t v) { return ExactInt(static_cast<long>(v)); }

// (A - A')^2 share of one crossing fiber of each type. Independent of the
// part classes, so any admissible parts will do.
std::int64_t shift(FiberType type) {
  const auto& s = f3();
  const DivClass f = s.F();
  if (type == FiberType::H) return ashift_square(make_fiber(s, type, std::array{f, f, f}));
  return ashift_square(make_fiber(s, type, std::array{f, f}));
}

}  // namespace

F3Census census_f3(const DivClass& d, const ValueLookup& N, const ValueLookup& N2) {
  const auto& s = f3();
  if (!is_countable(s, d)) throw DomainError(format_class(d) + " is not countable on F3");
  F3Census out{d, {}, {}, {}, {}, 0, 0, 0, 0, 0, Rational(0)};
  if (d == s.F()) return out;

  const std::int64_t r = expected_dim(s, d);
  const DivClass e = s.E();
  const DivClass rest = d - e;
  auto E = [&](const DivClass& x) { return s.dot(x, e); };

  for (const auto& [d1, d2] : split_pairs(s, d)) {
    ExactInt w = N(d1) * N(d2) * z(s.dot(d1, d2));
    const std::int64_t r1 = expected_dim(s, d1);
    out.j.push_back({d1, d2, w * binom(r - 2, r1 - 1)});
    out.n_J += w * binom(r - 3, r1 - 1);
  }
  for (const auto& [d1, d2] : split_pairs(s, rest)) {
    const std::int64_t r1 = expected_dim(s, d1), r2 = expected_dim(s, d2);
    ExactInt wk = N2(d1) * N(d2) * z(E(d2));
    out.k.push_back({d1, d2, wk * binom(r - 2, r1 - 2)});
    out.n_K += wk * binom(r - 3, r1 - 2);
    ExactInt wkp = N(d1) * N2(d2) * z(E(d1));
    out.kprime.push_back({d1, d2, wkp * binom(r - 2, r1 - 1)});
    out.n_Kprime += wkp * binom(r - 3, r2 - 2);
  }
  for (const auto& [d1, d2, d3] : split_triples(s, rest)) {
    const std::int64_t r1 = expected_dim(s, d1), r2 = expected_dim(s, d2);
    ExactInt w = N(d1) * N(d2) * N(d3) * z(E(d1) * E(d2) * E(d3));
    out.n_H += w * multinom(r - 3, r1 - 1, r2 - 1);
    if (d3 < d2) continue;
    const int sigma = d2 == d3 ? 2 : 1;
    ExactInt ordered = w * multinom(r - 2, r1 - 1, r2);
    if (!mpz_divisible_ui_p(ordered.get_mpz_t(), sigma)) {
      throw ConsistencyError("H count not divisible by its symmetry factor",
                             {{"class", format_class(d)}, {"ordered count", to_string(ordered)}});
    }
    out.h.push_back({d1, d2, d3, sigma, ExactInt(ordered / sigma)});
  }

  if (out.n_K != out.n_Kprime) {
    throw ConsistencyError("n_K != n_K' for " + format_class(d),
                           {{"n_K", to_string(out.n_K)}, {"n_K'", to_string(out.n_Kprime)}});
  }
  out.a_squared = -Rational(out.n_J + 2 * out.n_H + 6 * out.n_K) / 2;
  Rational from_components = Rational(out.n_J * shift(FiberType::J) + out.n_K * shift(FiberType::K) +
                                      out.n_Kprime * shift(FiberType::Kprime) + out.n_H * shift(FiberType::H)) /
                             2;
  if (from_components != out.a_squared) {
    throw ConsistencyError("A^2 expressions disagree for " + format_class(d),
                           {{"formula", to_string(out.a_squared)}, {"components", to_string(from_components)}});
  }
  return out;
}

Fibration f3_fibration(const F3Census& census) {
  const auto& s = f3();
  Fibration fib(s, census.cls, census.a_squared);
  for (const auto& p : census.j) fib.add(make_fiber(s, FiberType::J, std::array{p.d1, p.d2}), p.count);
  for (const auto& p : census.k) fib.add(make_fiber(s, FiberType::K, std::array{p.d1, p.d2}), p.count);
  for (const auto& p : census.kprime) fib.add(make_fiber(s, FiberType::Kprime, std::array{p.d1, p.d2}), p.count);
  for (const auto& t : census.h) fib.add(make_fiber(s, FiberType::H, std::array{t.d1, t.d2, t.d3}), t.count);
  if (census.g_count != 0) {
    fib.add(make_fiber(s, FiberType::G, std::array{census.cls - s.E()}, QPrime::absent), census.g_count);
  }
  return fib;
}

Rational f3_assembly_N3(const F3Census& census) {
  const auto& s = f3();
  F3Census without_g = census;
  without_g.g_count = 0;
  Fibration fib = f3_fibration(without_g);
  auto pf = fib.pullback(s.F());
  Rational rest = fib.intersect(pf, pf);
  ExactInt per_fiber =
      fiber_contribution(make_fiber(s, FiberType::G, std::array{census.cls - s.E()}, QPrime::absent), s.F(), s.F());
  return -rest / Rational(per_fiber);
}

Rational f3_assembly_N(const F3Census& census) {
  Fibration fib = f3_fibration(census);
  auto pc = fib.pullback(f3().C());
  return fib.intersect(pc, pc) / 3;
}

Rational f3_assembly_N2(const F3Census& census) {
  Fibration fib = f3_fibration(census);
  auto te = fib.tilde_e();
  return fib.intersect(te, te) + fib.intersect(te, fib.dualizing());
}

F3Engine::F3Engine(EngineOptions options) : options_(options) {}

ValueLookup F3Engine::lookup_N() const {
  return [this](const DivClass& c) -> ExactInt {
    auto rec = memo_.find(c);
    if (!rec) throw DependencyError("N(" + format_class(c) + ") on F3 has not been evaluated");
    return rec->N;
  };
}

ValueLookup F3Engine::lookup_N2() const {
  return [this](const DivClass& c) -> ExactInt {
    auto rec = memo_.find(c);
    if (!rec || !rec->N2) throw DependencyError("N2(" + format_class(c) + ") on F3 has not been evaluated");
    return *rec->N2;
  };
}

F3Census F3Engine::census(const DivClass& d) const {
  F3Census c = census_f3(d, lookup_N(), lookup_N2());
  if (d == f3().F()) return c;
  Rational g = f3_formula_c(c);
  if (options_.cross_check) {
    std::vector<Route> r{{"N3_next", "closed_form", g}, {"N3_next", "assembly", f3_assembly_N3(c)}};
    require_agreement(d, r, "N3_next");
  }
  c.g_count = require_integer(g, "N3(" + format_class(d - f3().E()) + ")");
  if (c.g_count < 0) throw ConsistencyError("negative N3 for " + format_class(d), {{"N3_next", to_string(g)}});
  return c;
}

F3Record F3Engine::compute(const DivClass& d) const {
  const auto& s = f3();
  if (d == s.F()) {
    return {CountRecord{d, 1, ExactInt(0), ExactInt(0), Provenance::seed}, census_f3(d, lookup_N(), lookup_N2())};
  }
  auto N = lookup_N();
  auto N2 = lookup_N2();
  F3Census c = census(d);
  const std::string name = format_class(d);

  Rational theorem = f3_theorem_N(c, N, N2);
  require_integer(f3_theorem_third_group(c, N), "one-third weighted sum for " + name);
  if (options_.cross_check) {
    std::vector<Route> r{{"N", "closed_form", theorem}, {"N", "assembly", f3_assembly_N(c)}};
    require_agreement(d, r, "N");
  }
  ExactInt n = require_integer(theorem, "N(" + name + ")");

  ExactInt n2 = 0;
  if (s.dot(s.E(), d) >= 2) {
    Rational b = f3_formula_b(c, n);
    if (options_.cross_check) {
      std::vector<Route> r{{"N2", "closed_form", b}, {"N2", "assembly", f3_assembly_N2(c)}};
      require_agreement(d, r, "N2");
    }
    n2 = require_integer(b, "N2(" + name + ")");
  }
  if (n < 0 || n2 < 0) {
    throw ConsistencyError("negative count for " + name, {{"N", to_string(n)}, {"N2", to_string(n2)}});
  }
  return {CountRecord{d, n, n2, c.g_count, Provenance::computed}, std::move(c)};
}

void F3Engine::ensure(const DivClass& d) {
  for (const auto& c : evaluation_order(f3(), d)) {
    if (!memo_.find(c)) memo_.insert(compute(c).record);
  }
}

F3Record F3Engine::full_record(const DivClass& d) {
  ensure(d);
  return {*memo_.find(d), census(d)};
}

CountRecord F3Engine::record(const DivClass& d) {
  ensure(d);
  return *memo_.find(d);
}

ExactInt F3Engine::N(const DivClass& d) { return record(d).N; }
ExactInt F3Engine::N2(const DivClass& d) { return *record(d).N2; }
ExactInt F3Engine::N3_next(const DivClass& d) { return *record(d).N3_next; }

Rational F3Engine::a_squared(const DivClass& d) {
  ensure(d);
  return census(d).a_squared;
}

std::vector<Route> F3Engine::routes(const DivClass& d) {
  const auto& s = f3();
  CountRecord rec = record(d);
  if (rec.provenance == Provenance::seed) {
    return {{"N3_next", "seed", Rational(*rec.N3_next)}, {"N", "seed", Rational(rec.N)},
            {"N2", "seed", Rational(*rec.N2)}};
  }
  auto N = lookup_N();
  auto N2 = lookup_N2();
  F3Census c = census_f3(d, N, N2);
  c.g_count = *rec.N3_next;
  std::vector<Route> r{
      {"N3_next", "closed_form", f3_formula_c(c)},
      {"N3_next", "assembly", f3_assembly_N3(c)},
      {"N", "closed_form", f3_theorem_N(c, N, N2)},
      {"N", "assembly", f3_assembly_N(c)},
  };
  const std::int64_t ed = s.dot(s.E(), d);
  if (ed >= 2) {
    r.push_back({"N2", "closed_form", f3_formula_b(c, rec.N)});
  } else {
    r.push_back({"N2", "shortcut", Rational(0)});
  }
  if (ed >= 1) r.push_back({"N2", "assembly", f3_assembly_N2(c)});
  if (ed >= 2) r.push_back({"N2", "printed_b", f3_formula_b_printed(c, rec.N), true});
  return r;
}

void F3Engine::preload(const CountRecord& rec) {
  if (rec.cls.surface != SurfaceId::F3) throw DomainError("record for another surface");
  if (!rec.N2 || !rec.N3_next) throw DomainError("F3 records carry N2 and N3_next");
  memo_.insert(rec);
}

}  // namespace severi
