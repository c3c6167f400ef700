#include "severi/f3.hpp"

namespace severi {

namespace {

const SurfaceModel& f3() { return SurfaceModel::get(SurfaceId::F3); }

ExactInt z(std::int64_t v) { return ExactInt(static_cast<long>(v)); }

}  // namespace

Rational f3_theorem_third_group(const F3Census& census, const ValueLookup& N) {
  const auto& s = f3();
  const DivClass& d = census.cls;
  if (d == s.F()) return Rational(0);
  const std::int64_t r = expected_dim(s, d);
  const DivClass c = s.C(), e = s.E();
  auto cd = [&](const DivClass& x) { return s.dot(c, x); };
  auto E = [&](const DivClass& x) { return s.dot(e, x); };

  ExactInt third = 0;
  for (const auto& [d1, d2] : split_pairs(s, d)) {
    const std::int64_t r1 = expected_dim(s, d1);
    third += N(d1) * N(d2) * z(s.dot(d1, d2)) *
             (binom(r - 3, r1 - 1) * z(cd(d1) * cd(d2)) - binom(r - 3, r1 - 2) * z(cd(d2) * cd(d2)));
  }
  for (const auto& [d1, d2, d3] : split_triples(s, d - e)) {
    const std::int64_t r1 = expected_dim(s, d1), r2 = expected_dim(s, d2);
    const std::int64_t c1 = cd(d1), c2 = cd(d2), c3 = cd(d3);
    third += N(d1) * N(d2) * N(d3) * z(E(d1) * E(d2) * E(d3)) *
             (multinom(r - 3, r1 - 1, r2 - 1) * z(2 * c1 * c2 + c1 * c3 + c2 * c3 - c3 * c3) -
              multinom(r - 3, r1 - 2, r2) * z(c2 * c2 + c3 * c3 + c2 * c3));
  }
  return Rational(third) / 3;
}

Rational f3_theorem_N(const F3Census& census, const ValueLookup& N, const ValueLookup& N2) {
  const auto& s = f3();
  const DivClass& d = census.cls;
  if (d == s.F()) return Rational(1);
  const std::int64_t r = expected_dim(s, d);
  const DivClass c = s.C(), e = s.E();
  auto cd = [&](const DivClass& x) { return s.dot(c, x); };

  ExactInt whole = 0;
  for (const auto& [d1, d2] : split_pairs(s, d - e)) {
    const std::int64_t r1 = expected_dim(s, d1), c1 = cd(d1), c2 = cd(d2);
    whole += N2(d1) * N(d2) * z(s.dot(e, d2)) *
             (binom(r - 3, r1 - 2) * z(c1 * c2) - binom(r - 3, r1 - 3) * z(c2 * c2));
    whole += N(d1) * N2(d2) * z(s.dot(e, d1)) *
             (binom(r - 3, r1 - 1) * z(c1 * c2) - binom(r - 3, r1 - 2) * z(c2 * c2));
  }
  return f3_theorem_third_group(census, N) + Rational(whole);
}

Rational f3_formula_c(const F3Census& census) {
  const auto& s = f3();
  const DivClass f = s.F();
  auto fd = [&](const DivClass& x) { return s.dot(f, x); };
  const std::int64_t fD = fd(census.cls);
  Rational out = -Rational(fD * fD) * census.a_squared;
  ExactInt sum = 0;
  for (const auto& p : census.j) sum += p.count * z(fd(p.d2) * fd(p.d2));
  for (const auto& p : census.k) sum += p.count * z(1 + 2 * fd(p.d2) + 3 * fd(p.d2) * fd(p.d2));
  for (const auto& p : census.kprime) sum += p.count * z(2 + 4 * fd(p.d2) + 3 * fd(p.d2) * fd(p.d2));
  for (const auto& t : census.h) {
    const std::int64_t f1 = fd(t.d1), f2 = fd(t.d2), f3v = fd(t.d3);
    sum += t.count * z(fD * fD - 2 * fD * f1 + f1 * f1 + f2 * f2 + f3v * f3v);
  }
  return out - Rational(sum);
}

namespace {

Rational formula_b(const F3Census& census, const ExactInt& n_d, bool printed) {
  const auto& s = f3();
  const DivClass e = s.E();
  auto E = [&](const DivClass& x) { return s.dot(e, x); };
  Rational out = Rational(-3 * n_d + 9 * census.g_count) + census.a_squared * E(census.cls);
  ExactInt sum = 0;
  for (const auto& p : census.j) sum += p.count * z(E(p.d2));
  for (const auto& p : census.k) sum += p.count * z(printed ? 6 : 3 * (1 + E(p.d2)));
  for (const auto& p : census.kprime) sum += p.count * z(printed ? 6 : 3 * E(p.d2));
  for (const auto& t : census.h) sum += t.count * z(2 * E(t.d2) + 2 * E(t.d3) - 1);
  return out + Rational(sum);
}

}  // namespace

Rational f3_formula_b(const F3Census& census, const ExactInt& n_d) { return formula_b(census, n_d, false); }

Rational f3_formula_b_printed(const F3Census& census, const ExactInt& n_d) {
  return formula_b(census, n_d, true);
}

}  // namespace severi
