#include "severi/store.hpp"

#include "severi/errors.hpp"

#include <fstream>
#include <mutex>
#include <sstream>

namespace severi {

namespace {

constexpr std::string_view kMagic = "severi-table";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string opt(const std::optional<ExactInt>& v) { return v ? to_string(*v) : std::string("-"); }

std::int64_t parse_coeff(std::string_view text, std::size_t row) {
  try {
    ExactInt v = parse_exact(std::string(text));
    if (!v.fits_slong_p()) throw ParseError("coefficient out of range", row);
    return v.get_si();
  } catch (const ParseError&) {
    throw ParseError("bad coefficient '" + std::string(text) + "'", row);
  }
}

ExactInt parse_count(std::string_view text, std::size_t row) {
  try {
    ExactInt v = parse_exact(std::string(text));
    if (v < 0) throw ParseError("negative count", row);
    return v;
  } catch (const ParseError&) {
    throw ParseError("bad count '" + std::string(text) + "'", row);
  }
}

int parse_version(std::string_view field, std::string_view key) {
  std::string prefix = std::string(key) + "=";
  if (field.substr(0, prefix.size()) != prefix) throw ParseError("malformed header", 1);
  try {
    return static_cast<int>(parse_exact(std::string(field.substr(prefix.size()))).get_si());
  } catch (const ParseError&) {
    throw ParseError("malformed header", 1);
  }
}

}  // namespace

ResultStore::ResultStore(const ResultStore& other) {
  std::shared_lock lock(other.mutex_);
  rows_ = other.rows_;
}

ResultStore& ResultStore::operator=(const ResultStore& other) {
  if (this == &other) return *this;
  auto copy = other.records();
  std::unique_lock lock(mutex_);
  rows_.clear();
  for (auto& r : copy) rows_.emplace(r.cls, std::move(r));
  return *this;
}

std::optional<CountRecord> ResultStore::lookup(SurfaceId surface, const DivClass& cls) const {
  if (cls.surface != surface) return std::nullopt;
  std::shared_lock lock(mutex_);
  auto it = rows_.find(cls);
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

void ResultStore::record(const CountRecord& rec) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = rows_.emplace(rec.cls, rec);
  if (inserted) return;
  CountRecord& have = it->second;
  auto clash = [&](const char* field, const std::string& a, const std::string& b) {
    throw IntegrityError("conflicting " + std::string(field) + " for " + std::string(to_string(rec.cls.surface)) +
                         " " + format_class(rec.cls) + ": stored " + a + ", new " + b);
  };
  if (have.N != rec.N) clash("N", to_string(have.N), to_string(rec.N));
  if (have.N2 && rec.N2 && *have.N2 != *rec.N2) clash("N2", opt(have.N2), opt(rec.N2));
  if (have.N3_next && rec.N3_next && *have.N3_next != *rec.N3_next) {
    clash("N3_next", opt(have.N3_next), opt(rec.N3_next));
  }
  if (have.provenance != rec.provenance) {
    clash("provenance", std::string(to_string(have.provenance)), std::string(to_string(rec.provenance)));
  }
  if (!have.N2) have.N2 = rec.N2;
  if (!have.N3_next) have.N3_next = rec.N3_next;
}

std::vector<CountRecord> ResultStore::records() const {
  std::shared_lock lock(mutex_);
  std::vector<CountRecord> out;
  out.reserve(rows_.size());
  for (const auto& [key, rec] : rows_) out.push_back(rec);
  return out;
}

std::size_t ResultStore::size() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

std::string ResultStore::serialize() const {
  std::ostringstream out;
  out << kMagic << "\tformat_version=" << format_version << "\tengine_version=" << engine_version << '\n';
  for (const auto& r : records()) {
    out << to_string(r.cls.surface) << '\t' << r.cls.coeffs[0];
    if (r.cls.surface != SurfaceId::P2) out << ',' << r.cls.coeffs[1];
    out << '\t' << to_string(r.N) << '\t' << opt(r.N2) << '\t' << opt(r.N3_next) << '\t'
        << to_string(r.provenance) << '\n';
  }
  return out.str();
}

ResultStore ResultStore::parse(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty table", 1);

  auto header = split(lines[0], '\t');
  if (header.size() != 3 || header[0] != kMagic) throw ParseError("not a severi table", 1);
  const int fv = parse_version(header[1], "format_version");
  const int ev = parse_version(header[2], "engine_version");
  if (fv != format_version) {
    throw MigrationError("table format_version " + std::to_string(fv) + ", this build reads " +
                         std::to_string(format_version));
  }
  if (ev != engine_version) {
    throw MigrationError("table written by engine_version " + std::to_string(ev) + ", this build is " +
                         std::to_string(engine_version));
  }

  ResultStore store;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    auto f = split(lines[i], '\t');
    if (f.size() != 6) throw ParseError("expected 6 fields, got " + std::to_string(f.size()), row);
    auto surface = parse_surface(f[0]);
    if (!surface) throw ParseError("unknown surface '" + std::string(f[0]) + "'", row);
    auto coeffs = split(f[1], ',');
    const std::size_t rank = *surface == SurfaceId::P2 ? 1 : 2;
    if (coeffs.size() != rank) throw ParseError("wrong number of coefficients", row);
    CountRecord rec;
    rec.cls.surface = *surface;
    for (std::size_t k = 0; k < rank; ++k) rec.cls.coeffs[k] = parse_coeff(coeffs[k], row);
    rec.N = parse_count(f[2], row);
    if (f[3] != "-") rec.N2 = parse_count(f[3], row);
    if (f[4] != "-") rec.N3_next = parse_count(f[4], row);
    auto prov = parse_provenance(f[5]);
    if (!prov) throw ParseError("unknown provenance '" + std::string(f[5]) + "'", row);
    rec.provenance = *prov;
    if (!store.rows_.emplace(rec.cls, rec).second) {
      throw ParseError("duplicate key " + std::string(f[0]) + " " + format_class(rec.cls), row);
    }
  }
  return store;
}

void ResultStore::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << serialize();
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

ResultStore ResultStore::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse(buf.str());
}

}  // namespace severi
