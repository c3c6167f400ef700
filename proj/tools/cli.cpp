#include "cli.hpp"

#include "severi/errors.hpp"
#include "severi/f2.hpp"
#include "severi/f3.hpp"
#include "severi/plane.hpp"
#include "severi/store.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace severi::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool intermediates = false;
  std::string cache;
};

// Everything a single-class command prints.
struct Report {
  CountRecord rec;
  std::vector<std::pair<std::string, std::string>> flat;  // text and csv
  ojson tree = ojson::object();                           // json
};

std::string opt(const std::optional<ExactInt>& v) { return v ? to_string(*v) : "-"; }

ojson jopt(const std::optional<ExactInt>& v) { return v ? ojson(to_string(*v)) : ojson(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void add(Report& r, const std::string& name, const std::string& value) {
  r.flat.emplace_back(name, value);
  r.tree[name] = value;
}

void add_pairs(Report& r, const std::string& name, const std::vector<PairCount>& pairs) {
  ojson arr = ojson::array();
  for (const auto& p : pairs) {
    r.flat.emplace_back(name + "(" + format_class(p.d1) + "," + format_class(p.d2) + ")", to_string(p.count));
    arr.push_back({{"D1", format_class(p.d1)}, {"D2", format_class(p.d2)}, {"count", to_string(p.count)}});
  }
  r.tree[name] = arr;
}

void print(const Report& r, const Options& o, std::ostream& out) {
  const std::string surface(to_string(r.rec.cls.surface));
  const std::string cls = format_class(r.rec.cls);
  if (o.format == "json") {
    ojson j;
    j["surface"] = surface;
    j["class"] = cls;
    j["N"] = to_string(r.rec.N);
    j["N2"] = jopt(r.rec.N2);
    j["N3_next"] = jopt(r.rec.N3_next);
    j["provenance"] = std::string(to_string(r.rec.provenance));
    j["engine_version"] = ResultStore::engine_version;
    if (o.intermediates) j["intermediates"] = r.tree;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "surface,class,N,N2,N3_next\n"
        << surface << ',' << csv_field(cls) << ',' << to_string(r.rec.N) << ',' << opt(r.rec.N2) << ','
        << opt(r.rec.N3_next) << '\n';
    if (o.intermediates) {
      out << "\nquantity,value\n";
      for (const auto& [k, v] : r.flat) out << csv_field(k) << ',' << v << '\n';
    }
  } else {
    out << "surface = " << surface << "\nclass = " << cls << "\nN = " << to_string(r.rec.N) << '\n';
    if (r.rec.N2) out << "N2 = " << to_string(*r.rec.N2) << '\n';
    if (r.rec.N3_next) out << "N3_next = " << to_string(*r.rec.N3_next) << '\n';
    if (o.intermediates)
      for (const auto& [k, v] : r.flat) out << k << " = " << v << '\n';
  }
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

DivClass countable_class(SurfaceId s, const std::string& spec) {
  DivClass d;
  try {
    d = parse_class(s, spec);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (!is_countable(SurfaceModel::get(s), d)) {
    throw UsageError("class " + spec + " has no irreducible rational members to count on " +
                     std::string(to_string(s)));
  }
  return d;
}

// Cached stores: preloaded into the engine, written back after the run.
std::int64_t engine_key(const PlaneEngine&, const DivClass& d) { return d.coeffs[0]; }
const DivClass& engine_key(const F2Engine&, const DivClass& d) { return d; }
const DivClass& engine_key(const F3Engine&, const DivClass& d) { return d; }

template <class Engine>
void audit(Engine& engine, const CountRecord& cached) {
  const auto& s = SurfaceModel::get(cached.cls.surface);
  for (const auto& dep : evaluation_order(s, cached.cls))
    if (dep != cached.cls) engine.record(engine_key(engine, dep));

  if (cached.provenance == Provenance::seed) {
    Engine fresh;
    if (!fresh.record(engine_key(fresh, cached.cls)).same_values(cached))
      throw ConsistencyError("cached seed " + format_class(cached.cls) + " differs from the built-in value");
    return;
  }
  for (const auto& r : engine.routes(engine_key(engine, cached.cls))) {
    if (r.diagnostic) continue;
    const std::optional<ExactInt> v = r.quantity == "N"    ? std::optional<ExactInt>(cached.N)
                                      : r.quantity == "N2" ? cached.N2
                                                           : cached.N3_next;
    if (!v || r.value != Rational(*v))
      throw ConsistencyError("cached " + r.quantity + "(" + format_class(cached.cls) + ") = " +
                                 (v ? to_string(*v) : std::string("-")) + " but route " + r.route + " gives " +
                                 to_string(r.value),
                             {{"cached", v ? to_string(*v) : "-"}, {r.route, to_string(r.value)}});
  }
}

class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    if (!path_.empty() && std::filesystem::exists(path_)) store_ = ResultStore::load(path_);
  }

  // Seeds the engine, then re-derives every cached row from its neighbours
  // so a hand-edited or stale file cannot leak into the answer.
  template <class Engine>
  void preload(Engine& engine, SurfaceId s) const {
    std::vector<CountRecord> rows;
    for (const auto& r : store_.records())
      if (r.cls.surface == s) {
        engine.preload(r);
        rows.push_back(r);
      }
    for (const auto& r : rows) audit(engine, r);
  }

  template <class Engine>
  void write_back(const Engine& engine) {
    if (path_.empty()) return;
    for (const auto& r : engine.records()) store_.record(r);
    store_.save(path_);
  }

 private:
  std::string path_;
  ResultStore store_;
};

Report plane_report(std::int64_t d, const Options& o) {
  if (d < 1) throw UsageError("--d must be a positive degree");
  PlaneEngine engine;
  Cache cache(o.cache);
  cache.preload(engine, SurfaceId::P2);
  Report r{engine.record(d), {}, ojson::object()};
  if (o.intermediates) {
    PlaneCensus c = engine.census(d);
    ojson arr = ojson::array();
    for (const auto& e : c.entries) {
      r.flat.emplace_back("j(" + std::to_string(e.d1) + "," + std::to_string(e.d2) + ")", to_string(e.j));
      arr.push_back({{"d1", std::to_string(e.d1)}, {"d2", std::to_string(e.d2)}, {"count", to_string(e.j)}});
    }
    r.tree["j"] = arr;
    add(r, "n_J", to_string(c.n_J));
    add(r, "A2", to_string(c.a_squared));
  }
  cache.write_back(engine);
  return r;
}

Report f2_report(const std::string& spec, const Options& o) {
  DivClass d = countable_class(SurfaceId::F2, spec);
  F2Engine engine;
  Cache cache(o.cache);
  cache.preload(engine, SurfaceId::F2);
  Report r{engine.record(d), {}, ojson::object()};
  if (o.intermediates) {
    F2Census c = engine.census(d);
    add_pairs(r, "j", c.j);
    add_pairs(r, "h", c.h);
    add(r, "n_J", to_string(c.n_J));
    add(r, "n_H", to_string(c.n_H));
    add(r, "A2", to_string(c.a_squared));
  }
  cache.write_back(engine);
  return r;
}

void add_f3_census(Report& r, const F3Census& c) {
  add_pairs(r, "j", c.j);
  add_pairs(r, "k", c.k);
  add_pairs(r, "kprime", c.kprime);
  ojson arr = ojson::array();
  for (const auto& t : c.h) {
    r.flat.emplace_back("h(" + format_class(t.d1) + ",{" + format_class(t.d2) + "," + format_class(t.d3) + "})",
                        to_string(t.count));
    arr.push_back({{"D1", format_class(t.d1)},
                   {"D2", format_class(t.d2)},
                   {"D3", format_class(t.d3)},
                   {"count", to_string(t.count)}});
  }
  r.tree["h"] = arr;
  add(r, "g", to_string(c.g_count));
  add(r, "n_J", to_string(c.n_J));
  add(r, "n_K", to_string(c.n_K));
  add(r, "n_Kprime", to_string(c.n_Kprime));
  add(r, "n_H", to_string(c.n_H));
  add(r, "A2", to_string(c.a_squared));
}

Report f3_report(const std::string& spec, const Options& o) {
  DivClass d = countable_class(SurfaceId::F3, spec);
  F3Engine engine;
  Cache cache(o.cache);
  cache.preload(engine, SurfaceId::F3);
  F3Record full = engine.full_record(d);
  Report r{full.record, {}, ojson::object()};
  if (o.intermediates) add_f3_census(r, full.census);
  cache.write_back(engine);
  return r;
}

struct TableSpec {
  std::string surface = "F3";
  std::int64_t max_a = -1;
  std::int64_t max_b = -1;
  std::int64_t max_weight = 7;
  std::string out;
};

// Weight bounding a table: d on P2, a + b on F2, 2a + b on F3.
std::int64_t weight(const DivClass& d) {
  switch (d.surface) {
    case SurfaceId::P2: return d.coeffs[0];
    case SurfaceId::F2: return d.coeffs[0] + d.coeffs[1];
    case SurfaceId::F3: return 2 * d.coeffs[0] + d.coeffs[1];
  }
  return 0;
}

std::vector<DivClass> table_classes(SurfaceId s, const TableSpec& t) {
  std::vector<DivClass> out;
  const auto& model = SurfaceModel::get(s);
  for (std::int64_t a = 0; a <= t.max_weight; ++a) {
    if (t.max_a >= 0 && a > t.max_a) break;
    if (s == SurfaceId::P2) {
      if (a >= 1) out.push_back(plane_class(a));
      continue;
    }
    for (std::int64_t b = 0; b <= t.max_weight; ++b) {
      if (t.max_b >= 0 && b > t.max_b) break;
      DivClass d{s, {a, b}};
      if (is_countable(model, d) && weight(d) <= t.max_weight) out.push_back(d);
    }
  }
  return out;
}

ResultStore build_table(SurfaceId s, const std::vector<DivClass>& classes, const std::string& cache_path) {
  ResultStore table;
  Cache cache(cache_path);
  auto fill = [&](auto& engine, auto key) {
    cache.preload(engine, s);
    for (const auto& d : classes) table.record(engine.record(key(d)));
    cache.write_back(engine);
  };
  if (s == SurfaceId::P2) {
    PlaneEngine e;
    fill(e, [](const DivClass& d) { return d.coeffs[0]; });
  } else if (s == SurfaceId::F2) {
    F2Engine e;
    fill(e, [](const DivClass& d) { return d; });
  } else {
    F3Engine e;
    fill(e, [](const DivClass& d) { return d; });
  }
  return table;
}

int table_command(const TableSpec& t, const Options& o, std::ostream& out) {
  auto s = parse_surface(t.surface);
  if (!s) throw UsageError("unknown surface " + t.surface);
  if (t.max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  ResultStore table = build_table(*s, table_classes(*s, t), o.cache);
  if (t.out.empty()) {
    out << table.serialize();
  } else {
    table.save(t.out);
    out << "wrote " << table.size() << " rows to " << t.out << '\n';
  }
  return ok;
}

ojson read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot open " + p.string());
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(p.string() + ": " + e.what());
  }
}

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void expect(const std::string& what, const std::string& want, const std::string& got) {
    ++checked_;
    if (want == got) return;
    ++failed_;
    out_ << "MISMATCH " << what << ": expected " << want << ", got " << got << '\n';
  }

  int checked() const { return checked_; }
  int failed() const { return failed_; }

 private:
  std::ostream& out_;
  int checked_ = 0;
  int failed_ = 0;
};

template <class Entry, class Key>
void compare_entries(Checker& chk, const std::string& name, const ojson& golden, const std::vector<Entry>& computed,
                     Key key) {
  std::map<std::string, std::string> got;
  for (const auto& e : computed)
    if (e.count != 0) got[key(e)] = to_string(e.count);
  std::map<std::string, std::string> want;
  for (const auto& g : golden) {
    std::string k = g["D1"].template get<std::string>() + "|" + g["D2"].template get<std::string>();
    if (g.contains("D3")) k += "|" + g["D3"].template get<std::string>();
    want[k] = g["count"].template get<std::string>();
  }
  for (const auto& [k, v] : want) chk.expect(name + "(" + k + ")", v, got.count(k) ? got[k] : "0");
  for (const auto& [k, v] : got)
    if (!want.count(k)) chk.expect(name + "(" + k + ")", "0", v);
}

void verify_example(Checker& chk, const std::filesystem::path& file) {
  ojson g = read_json(file);
  DivClass d = parse_class(SurfaceId::F3, g.at("class").get<std::string>());
  F3Engine engine;
  F3Record full = engine.full_record(d);
  const F3Census& c = full.census;
  auto pair_key = [](const PairCount& p) { return format_class(p.d1) + "|" + format_class(p.d2); };
  auto triple_key = [](const TripleCount& t) {
    return format_class(t.d1) + "|" + format_class(t.d2) + "|" + format_class(t.d3);
  };
  compare_entries(chk, "j", g.at("j"), c.j, pair_key);
  compare_entries(chk, "k", g.at("k"), c.k, pair_key);
  compare_entries(chk, "kprime", g.at("kprime"), c.kprime, pair_key);
  compare_entries(chk, "h", g.at("h"), c.h, triple_key);
  chk.expect("n_J", g.at("n_J"), to_string(c.n_J));
  chk.expect("n_K", g.at("n_K"), to_string(c.n_K));
  chk.expect("n_Kprime", g.at("n_Kprime"), to_string(c.n_Kprime));
  chk.expect("n_H", g.at("n_H"), to_string(c.n_H));
  chk.expect("A2", g.at("A2"), to_string(c.a_squared));
  chk.expect("N", g.at("N"), to_string(full.record.N));
  chk.expect("N2", g.at("N2"), opt(full.record.N2));
  chk.expect("N3_next", g.at("N3_next"), opt(full.record.N3_next));
}

void verify_table(Checker& chk, const std::filesystem::path& file) {
  ResultStore golden = ResultStore::load(file);
  PlaneEngine plane;
  F2Engine f2;
  F3Engine f3;
  for (const auto& want : golden.records()) {
    CountRecord got;
    switch (want.cls.surface) {
      case SurfaceId::P2: got = plane.record(want.cls.coeffs[0]); break;
      case SurfaceId::F2: got = f2.record(want.cls); break;
      case SurfaceId::F3: got = f3.record(want.cls); break;
    }
    const std::string tag = file.filename().string() + " " + std::string(to_string(want.cls.surface)) + " " +
                            format_class(want.cls) + " ";
    chk.expect(tag + "N", to_string(want.N), to_string(got.N));
    chk.expect(tag + "N2", opt(want.N2), opt(got.N2));
    chk.expect(tag + "N3_next", opt(want.N3_next), opt(got.N3_next));
    chk.expect(tag + "provenance", std::string(to_string(want.provenance)), std::string(to_string(got.provenance)));
  }
}

int verify_command(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("golden directory " + dir + " not found");
  Checker chk(out);
  const fs::path example = fs::path(dir) / "f3_2C_example.json";
  if (!fs::exists(example)) throw IoError("missing " + example.string());
  verify_example(chk, example);
  std::vector<fs::path> tables;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".tsv") tables.push_back(entry.path());
  std::sort(tables.begin(), tables.end());
  for (const auto& t : tables) verify_table(chk, t);
  out << (chk.failed() ? "FAIL" : "OK") << ": " << chk.checked() - chk.failed() << "/" << chk.checked()
      << " golden values matched (" << tables.size() << " tables)\n";
  return chk.failed() ? consistency : ok;
}

int oracle_command(const std::string& surface, const std::string& spec, const Options& o, std::ostream& out) {
  auto s = parse_surface(surface);
  if (!s) throw UsageError("unknown surface " + surface);
  std::vector<Route> routes;
  DivClass d;
  if (*s == SurfaceId::P2) {
    d = countable_class(*s, spec);
    routes = PlaneEngine(EngineOptions{false}).routes(d.coeffs[0]);
  } else if (*s == SurfaceId::F2) {
    d = countable_class(*s, spec);
    routes = F2Engine(EngineOptions{false}).routes(d);
  } else {
    d = countable_class(*s, spec);
    routes = F3Engine(EngineOptions{false}).routes(d);
  }
  bool agree = true;
  for (const char* q : {"N3_next", "N", "N2"}) {
    try {
      require_agreement(d, routes, q);
    } catch (const ConsistencyError&) {
      agree = false;
    }
  }
  if (o.format == "json") {
    ojson arr = ojson::array();
    for (const auto& r : routes)
      arr.push_back({{"quantity", r.quantity}, {"route", r.route}, {"value", to_string(r.value)},
                     {"diagnostic", r.diagnostic}});
    ojson j{{"surface", surface}, {"class", format_class(d)}, {"routes", arr}, {"agree", agree}};
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "quantity,route,value,diagnostic\n";
    for (const auto& r : routes)
      out << r.quantity << ',' << r.route << ',' << to_string(r.value) << ',' << (r.diagnostic ? 1 : 0) << '\n';
  } else {
    out << "surface = " << surface << "\nclass = " << format_class(d) << '\n';
    for (const auto& r : routes) {
      out << r.quantity << " [" << r.route << "] = " << to_string(r.value);
      if (r.diagnostic) out << "  (diagnostic)";
      out << '\n';
    }
    out << (agree ? "routes agree" : "ROUTES DISAGREE") << '\n';
  }
  return agree ? ok : consistency;
}

void dump(const ConsistencyError& e, std::ostream& err) {
  err << "consistency failure: " << e.what() << '\n';
  for (const auto& [k, v] : e.values()) err << "  " << k << " = " << v << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Severi degrees of rational curves on P2, F2 and F3"};
  app.name("severi");
  app.require_subcommand(1);

  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--intermediates", o.intermediates, "Print the reducible-fiber census");
    sub->add_option("--cache", o.cache, "Table file used as a persistent memo");
  };

  std::int64_t degree = 0;
  auto* plane = app.add_subcommand("plane", "Plane curves of degree d");
  plane->add_option("--d", degree, "Degree")->required();
  common(plane);

  std::string spec;
  auto* f2 = app.add_subcommand("f2", "Curves on F2");
  f2->add_option("--class", spec, "Class such as 2C+F")->required();
  common(f2);

  auto* f3 = app.add_subcommand("f3", "Curves on F3");
  f3->add_option("--class", spec, "Class such as 2C, C+2F, 5F")->required();
  common(f3);

  TableSpec t;
  auto* table = app.add_subcommand("table", "Write a table of records");
  table->add_option("--surface", t.surface, "P2, F2 or F3")->check(CLI::IsMember({"P2", "F2", "F3"}));
  table->add_option("--max-a", t.max_a, "Largest C coefficient (degree on P2)");
  table->add_option("--max-b", t.max_b, "Largest F coefficient");
  table->add_option("--max-weight", t.max_weight, "Bound on d, a+b (F2) or 2a+b (F3)");
  table->add_option("--out", t.out, "Output path; stdout when omitted");
  table->add_option("--cache", o.cache, "Table file used as a persistent memo");

  std::string golden = SEVERI_DEFAULT_GOLDEN_DIR;
  auto* verify = app.add_subcommand("verify", "Recompute golden values and compare");
  verify->add_option("--golden", golden, "Directory with golden files");

  std::string surface = "F3";
  auto* oracle = app.add_subcommand("oracle", "Print every evaluation route side by side");
  oracle->add_option("--surface", surface, "P2, F2 or F3")->check(CLI::IsMember({"P2", "F2", "F3"}));
  oracle->add_option("--class", spec, "Class (degree on P2)")->required();
  oracle->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (plane->parsed()) {
      print(plane_report(degree, o), o, out);
    } else if (f2->parsed()) {
      print(f2_report(spec, o), o, out);
    } else if (f3->parsed()) {
      print(f3_report(spec, o), o, out);
    } else if (table->parsed()) {
      return table_command(t, o, out);
    } else if (verify->parsed()) {
      return verify_command(golden, out);
    } else if (oracle->parsed()) {
      return oracle_command(surface, spec, o, out);
    }
    return ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return usage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ConsistencyError& e) {
    dump(e, err);
    return consistency;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << '\n';
    return consistency;
  } catch (const DependencyError& e) {
    err << "internal dependency failure: " << e.what() << '\n';
    return consistency;
  } catch (const IoError& e) {
    err << "i/o failure: " << e.what() << '\n';
    return io;
  } catch (const MigrationError& e) {
    err << "stored table rejected: " << e.what() << '\n';
    return io;
  } catch (const ParseError& e) {
    err << "malformed table: " << e.what() << '\n';
    return io;
  }
}

}  // namespace severi::cli
