// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "cli.hpp"
#include "severi/errors.hpp"
#include "severi/f2.hpp"
#include "severi/f3.hpp"
#include "severi/plane.hpp"
#include "severi/store.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace severi;

namespace {

const SurfaceModel& F2() { return SurfaceModel::get(SurfaceId::F2); }
const SurfaceModel& F3() { return SurfaceModel::get(SurfaceId::F3); }
DivClass f3c(const char* s) { return parse_class(SurfaceId::F3, s); }
DivClass f2c(const char* s) { return parse_class(SurfaceId::F2, s); }

// Collects failed expectations of one criterion.
struct Probe {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

ExactInt pair_count(const std::vector<PairCount>& v, const DivClass& d1, const DivClass& d2) {
  for (const auto& p : v)
    if (p.d1 == d1 && p.d2 == d2) return p.count;
  return -1;
}

ExactInt triple_count(const F3Census& c, const DivClass& d1, const DivClass& d2, const DivClass& d3) {
  for (const auto& t : c.h)
    if (t.d1 == d1 && t.d2 == d2 && t.d3 == d3) return t.count;
  return -1;
}

std::vector<DivClass> f3_classes(int max_weight) {
  std::vector<DivClass> out;
  for (int a = 0; 2 * a <= max_weight; ++a)
    for (int b = 0; 2 * a + b <= max_weight; ++b) {
      DivClass d = fn_class(SurfaceId::F3, a, b);
      if (is_countable(F3(), d)) out.push_back(d);
    }
  return out;
}

void check_routes(Probe& p, const DivClass& d, const std::vector<Route>& routes, const CountRecord& rec) {
  for (const auto& r : routes) {
    if (r.diagnostic) continue;
    const std::optional<ExactInt> want =
        r.quantity == "N" ? std::optional<ExactInt>(rec.N) : r.quantity == "N2" ? rec.N2 : rec.N3_next;
    if (!want || r.value != Rational(*want)) {
      std::ostringstream s;
      s << r.quantity << "(" << to_string(d.surface) << " " << format_class(d) << ") route " << r.route << " = "
        << to_string(r.value) << ", stored " << (want ? to_string(*want) : "-");
      p.failures.push_back(s.str());
    }
  }
}

void criterion1(Probe& p) {
  F3Engine e;
  F3Record r = e.full_record(f3c("2C"));
  const F3Census& c = r.census;
  p.equal(pair_count(c.j, f3c("C"), f3c("C")), 105, "j(C,C)");
  p.equal(pair_count(c.k, f3c("C+2F"), f3c("F")), 14, "k(C+2F,F)");
  p.equal(pair_count(c.kprime, f3c("F"), f3c("C+2F")), 2, "k'(F,C+2F)");
  p.equal(triple_count(c, f3c("F"), f3c("F"), f3c("C+F")), 7, "h(F,{F,C+F})");
  p.equal(triple_count(c, f3c("C+F"), f3c("F"), f3c("F")), 21, "h(C+F,{F,F})");
  p.equal(c.n_J, 60, "n_J");
  p.equal(c.n_K, 2, "n_K");
  p.equal(c.n_Kprime, 2, "n_K'");
  p.equal(c.n_H, 13, "n_H");
  p.equal(c.a_squared, Rational(-49), "A^2");
  p.equal(r.record.N, 69, "N(2C)");
}

void criterion2(Probe& p) {
  F3Engine e;
  p.equal(e.N(f3c("C")), 1, "N(C)");
  p.equal(e.N(f3c("C+F")), 1, "N(C+F)");
  p.equal(e.N(f3c("C+2F")), 1, "N(C+2F)");
  p.equal(e.N2(f3c("C+2F")), 2, "N2(C+2F)");
  p.equal(e.N3_next(f3c("C+2F")), 0, "N3(5F)");
  p.equal(e.N3_next(f3c("C")), 0, "N3(3F)");
}

void criterion3(Probe& p) {
  PlaneEngine e;
  const int n[] = {1, 1, 12, 620, 87304, 26312976};
  for (int d = 1; d <= 6; ++d) p.equal(e.N(d), n[d - 1], "N(" + std::to_string(d) + ")");
  const int n2[] = {2, 36, 2184};
  for (int d = 2; d <= 4; ++d) p.equal(e.N2(d), n2[d - 2], "N2(" + std::to_string(d) + ")");
  p.equal(e.N(10), ExactInt("40739017561997799680"), "N(10)");
}

void criterion4(Probe& p) {
  F2Engine e;
  p.equal(e.N(f2c("F")), 1, "N(F)");
  p.equal(e.N(f2c("C")), 1, "N(C)");
  p.equal(e.N(f2c("C+F")), 1, "N(C+F)");
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      DivClass d = fn_class(SurfaceId::F2, a, b);
      if (!is_countable(F2(), d)) continue;
      check_routes(p, d, e.routes(d), e.record(d));
    }
}

void criterion5(Probe& p) {
  F3Engine f3(EngineOptions{false});
  for (const auto& d : f3_classes(7)) check_routes(p, d, f3.routes(d), f3.record(d));
  PlaneEngine plane(EngineOptions{false});
  for (int d = 1; d <= 10; ++d) check_routes(p, plane_class(d), plane.routes(d), plane.record(d));
}

void criterion6(Probe& p) {
  const auto& s = F3();
  const auto& plane = SurfaceModel::get(SurfaceId::P2);
  struct T {
    const SurfaceModel* s;
    FiberType type;
    std::vector<DivClass> parts;
  };
  const std::vector<T> templates{
      {&plane, FiberType::J, {plane_class(1), plane_class(2)}},
      {&s, FiberType::J, {f3c("2C+F"), f3c("C+4F")}},
      {&s, FiberType::G, {f3c("C+5F")}},
      {&s, FiberType::K, {f3c("2C+3F"), f3c("C+F")}},
      {&s, FiberType::Kprime, {f3c("C+5F"), f3c("2C+4F")}},
      {&s, FiberType::H, {f3c("2C"), f3c("C+3F"), f3c("F")}},
      {&F2(), FiberType::Hf2, {f2c("2C+F"), f2c("C+3F")}},
  };
  for (const auto& t : templates) {
    auto m = make_fiber(*t.s, t.type, t.parts);
    const std::string tag(to_string(t.type));
    p.equal(fiber_class_square(m), 0, "fiber class square, type " + tag);

    // pi^*L restricted to every component has degree L . image.
    DivClass d = t.parts[0];
    for (std::size_t i = 1; i < t.parts.size(); ++i) d += t.parts[i];
    if (t.type != FiberType::J) d += t.s->E();
    const std::vector<DivClass> bundles =
        t.s->is_hirzebruch() ? std::vector<DivClass>{t.s->C(), t.s->F(), t.s->E()} : std::vector{plane.line()};
    for (const auto& l : bundles) {
      auto c = pullback_coefficients(m, l);
      for (std::size_t w = 0; w < m.size(); ++w) {
        std::int64_t deg = w == 0 ? t.s->dot(l, d) : 0;
        for (std::size_t v = 1; v < m.size(); ++v) deg += c[v] * m.pairing(v, w);
        const auto& image = m.components()[w].image;
        p.expect(deg == (image ? t.s->dot(l, *image) : 0), "pullback degree on " + tag);
      }
    }
    // Adjunction for omega, with A contributing -2 on the q component.
    auto om = dualizing_coefficients(m);
    for (std::size_t w = 0; w < m.size(); ++w) {
      std::int64_t deg = w == 0 ? -2 : 0;
      for (std::size_t v = 1; v < m.size(); ++v) deg += om[v] * m.pairing(v, w);
      p.expect(deg == -2 - m.pairing(w, w), "dualizing degree on " + tag);
    }
    // Etilde misses E-components and contracted components.
    if (t.s->is_hirzebruch()) {
      auto pe = pullback_coefficients(m, t.s->E());
      auto te = tildeE_coefficients(m);
      for (std::size_t w = 1; w < m.size(); ++w) {
        const auto& image = m.components()[w].image;
        if (image && *image != t.s->E()) continue;
        std::int64_t deg = 0;
        for (std::size_t v = 1; v < m.size(); ++v) deg += (pe[v] + te[v]) * m.pairing(v, w);
        p.expect(deg == 0, "Etilde degree on " + tag);
      }
    }
  }

  F3Engine e;
  auto N = [&](const DivClass& x) { return e.N(x); };
  for (const auto& x : f3_classes(7)) {
    auto rec = e.record(x);
    const std::string name = format_class(x);
    p.expect(rec.N >= 0 && rec.N2 && *rec.N2 >= 0 && rec.N3_next && *rec.N3_next >= 0, "nonnegative record " + name);
    if (x == s.F()) continue;
    auto c = e.census(x);
    p.equal(c.n_K, c.n_Kprime, "n_K = n_K' for " + name);
    p.expect(is_integer(f3_theorem_third_group(c, N)), "one-third group integral for " + name);
    p.expect(is_integer(f3_assembly_N(c)), "(pi^*C)^2 / 3 integral for " + name);
    p.expect(is_integer(c.a_squared), "A^2 integral for " + name);
  }
  F2Engine f2;
  for (int a = 1; a <= 5; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      auto x = fn_class(SurfaceId::F2, a, b);
      p.expect(f2.N(x) >= 0 && is_integer(f2_assembly_N(f2.census(x))), "F2 integrality " + format_class(x));
    }
}

void criterion7(Probe& p) {
  F3Engine e;
  ResultStore store;
  for (const auto& d : f3_classes(7)) store.record(e.record(d));
  PlaneEngine plane;
  for (int d = 1; d <= 8; ++d) store.record(plane.record(d));

  const std::string bytes = store.serialize();
  ResultStore back = ResultStore::parse(bytes);
  p.expect(back == store, "parse(serialize(s)) == s");
  p.expect(back.serialize() == bytes, "serialize is canonical");

  // Insertion order must not leak into the bytes.
  ResultStore reversed;
  auto rows = store.records();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) reversed.record(*it);
  p.expect(reversed.serialize() == bytes, "bytes independent of insertion order");

  // Recording the same rows again is a no-op; a conflicting value is rejected.
  for (const auto& r : rows) back.record(r);
  p.expect(back.serialize() == bytes, "idempotent upsert");
  CountRecord bad = rows.front();
  bad.N += 1;
  bool rejected = false;
  try {
    back.record(bad);
  } catch (const IntegrityError&) {
    rejected = true;
  }
  p.expect(rejected, "conflicting record rejected");

  // A warm engine seeded from the store reproduces every record.
  F3Engine warm;
  for (const auto& r : back.records())
    if (r.cls.surface == SurfaceId::F3) warm.preload(r);
  for (const auto& d : f3_classes(7)) p.expect(warm.record(d).same_values(e.record(d)), "warm record " + format_class(d));
}

void criterion8(Probe& p) {
  std::ostringstream out, err;
  int code = cli::run({"verify", "--golden", SEVERI_GOLDEN_DIR}, out, err);
  p.equal(code, 0, "verify exit code (" + err.str() + ")");
  std::ostringstream out2, err2;
  code = cli::run({"f3", "--class", "2C"}, out2, err2);
  p.equal(code, 0, "f3 --class 2C exit code");
  p.expect(out2.str().find("N = 69\n") != std::string::npos, "f3 --class 2C prints N = 69");
  std::ostringstream out3, err3;
  p.equal(cli::run({"f3", "--class", "2F"}, out3, err3), 1, "bad class exit code");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"worked example on F3, class 2C", criterion1},
      {"low-degree chain on F3", criterion2},
      {"plane N(d) and N2(d)", criterion3},
      {"F2 values and route agreement", criterion4},
      {"route equivalence on F3 and P2", criterion5},
      {"lattice and census invariants", criterion6},
      {"result store round trip", criterion7},
      {"command line verify and query", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe p;
    try {
      criteria[i].second(p);
    } catch (const std::exception& ex) {
      p.failures.push_back(std::string("exception: ") + ex.what());
    }
    const bool ok = p.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
    for (const auto& f : p.failures) std::cout << "    " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
