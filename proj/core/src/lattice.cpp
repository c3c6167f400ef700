#include "severi/lattice.hpp"

#include "severi/errors.hpp"

#include <cctype>
#include <charconv>

namespace severi {

std::string_view to_string(SurfaceId id) {
  switch (id) {
    case SurfaceId::P2: return "P2";
    case SurfaceId::F2: return "F2";
    case SurfaceId::F3: return "F3";
  }
  return "?";
}

std::optional<SurfaceId> parse_surface(std::string_view text) {
  if (text == "P2") return SurfaceId::P2;
  if (text == "F2") return SurfaceId::F2;
  if (text == "F3") return SurfaceId::F3;
  return std::nullopt;
}

static void require_same(SurfaceId a, SurfaceId b) {
  if (a != b) {
    throw DomainError("classes live on different surfaces (" + std::string(to_string(a)) + ", " +
                      std::string(to_string(b)) + ")");
  }
}

DivClass& DivClass::operator+=(const DivClass& other) {
  require_same(surface, other.surface);
  coeffs[0] += other.coeffs[0];
  coeffs[1] += other.coeffs[1];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& other) {
  require_same(surface, other.surface);
  coeffs[0] -= other.coeffs[0];
  coeffs[1] -= other.coeffs[1];
  return *this;
}

DivClass operator*(std::int64_t k, DivClass c) {
  c.coeffs[0] *= k;
  c.coeffs[1] *= k;
  return c;
}

DivClass plane_class(std::int64_t degree) { return DivClass{SurfaceId::P2, {degree, 0}}; }

DivClass fn_class(SurfaceId surface, std::int64_t a, std::int64_t b) {
  if (surface == SurfaceId::P2) throw DomainError("fn_class called for P2");
  return DivClass{surface, {a, b}};
}

SurfaceModel::SurfaceModel(SurfaceId id, int rank, int twist,
                           std::array<std::array<std::int64_t, 2>, 2> gram)
    : id_(id), rank_(rank), twist_(twist), gram_(gram) {}

const SurfaceModel& SurfaceModel::get(SurfaceId id) {
  static const SurfaceModel p2(SurfaceId::P2, 1, 1, {{{1, 0}, {0, 0}}});
  static const SurfaceModel f2(SurfaceId::F2, 2, 2, {{{2, 1}, {1, 0}}});
  static const SurfaceModel f3(SurfaceId::F3, 2, 3, {{{3, 1}, {1, 0}}});
  switch (id) {
    case SurfaceId::P2: return p2;
    case SurfaceId::F2: return f2;
    case SurfaceId::F3: return f3;
  }
  throw DomainError("unknown surface");
}

std::int64_t SurfaceModel::dot(const DivClass& x, const DivClass& y) const {
  require_same(x.surface, id_);
  require_same(y.surface, id_);
  std::int64_t out = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out += x.coeffs[i] * gram_[i][j] * y.coeffs[j];
  return out;
}

DivClass SurfaceModel::canonical() const {
  if (id_ == SurfaceId::P2) return plane_class(-3);
  return DivClass{id_, {-2, twist_ - 2}};
}

DivClass SurfaceModel::line() const {
  if (id_ != SurfaceId::P2) throw DomainError("line class only exists on P2");
  return plane_class(1);
}

DivClass SurfaceModel::C() const {
  if (id_ == SurfaceId::P2) throw DomainError("C is not defined on P2");
  return DivClass{id_, {1, 0}};
}

DivClass SurfaceModel::F() const {
  if (id_ == SurfaceId::P2) throw DomainError("F is not defined on P2");
  return DivClass{id_, {0, 1}};
}

DivClass SurfaceModel::E() const {
  if (id_ == SurfaceId::P2) throw DomainError("E is not defined on P2");
  return DivClass{id_, {1, -twist_}};
}

std::int64_t intersect(const SurfaceModel& s, const DivClass& d1, const DivClass& d2) {
  return s.dot(d1, d2);
}

DivClass canonical(const SurfaceModel& s) { return s.canonical(); }

std::int64_t expected_dim(const SurfaceModel& s, const DivClass& d) {
  return -s.dot(s.canonical(), d) - 1;
}

bool is_countable(const SurfaceModel& s, const DivClass& d) {
  if (d.surface != s.id()) return false;
  auto [a, b] = d.coeffs;
  if (s.id() == SurfaceId::P2) return a >= 1;
  return (a >= 1 && b >= 0) || (a == 0 && b == 1);
}

bool is_effective(const DivClass& d) {
  return d.coeffs[0] >= 0 && d.coeffs[1] >= 0 && (d.coeffs[0] > 0 || d.coeffs[1] > 0);
}

std::vector<ClassPair> split_pairs(const SurfaceModel& s, const DivClass& total) {
  require_same(total.surface, s.id());
  std::vector<ClassPair> out;
  auto [a, b] = total.coeffs;
  if (a < 0 || b < 0) return out;
  for (std::int64_t a1 = 0; a1 <= a; ++a1) {
    for (std::int64_t b1 = 0; b1 <= b; ++b1) {
      DivClass d1{s.id(), {a1, b1}};
      DivClass d2{s.id(), {a - a1, b - b1}};
      if (is_countable(s, d1) && is_countable(s, d2)) out.push_back({d1, d2});
    }
  }
  return out;
}

std::vector<ClassTriple> split_triples(const SurfaceModel& s, const DivClass& total) {
  require_same(total.surface, s.id());
  std::vector<ClassTriple> out;
  if (s.id() == SurfaceId::P2) return out;
  auto [a, b] = total.coeffs;
  if (a < 0 || b < 0) return out;
  for (std::int64_t a1 = 0; a1 <= a; ++a1) {
    for (std::int64_t b1 = 0; b1 <= b; ++b1) {
      DivClass d1{s.id(), {a1, b1}};
      if (!is_countable(s, d1)) continue;
      for (const auto& [d2, d3] : split_pairs(s, total - d1)) out.push_back({d1, d2, d3});
    }
  }
  return out;
}

static std::string term(std::int64_t k, char symbol) {
  if (k == 1) return std::string(1, symbol);
  if (k == -1) return "-" + std::string(1, symbol);
  return std::to_string(k) + symbol;
}

std::string format_class(const DivClass& d) {
  if (d.surface == SurfaceId::P2) return std::to_string(d.coeffs[0]);
  auto [a, b] = d.coeffs;
  if (a == 0 && b == 0) return "0";
  if (a == 0) return term(b, 'F');
  if (b == 0) return term(a, 'C');
  std::string out = term(a, 'C');
  if (b > 0) out += '+';
  return out + term(b, 'F');
}

static std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed class '" + std::string(whole) + "'");
  }
  return value;
}

DivClass parse_class(SurfaceId surface, std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError("empty class");
  if (surface == SurfaceId::P2) {
    if (compact.back() == 'L' || compact.back() == 'd') compact.pop_back();
    if (compact.front() == '+') compact.erase(0, 1);
    return plane_class(parse_int(compact, text));
  }
  if (compact == "0") return DivClass{surface, {0, 0}};

  std::array<std::int64_t, 2> coeffs{0, 0};
  std::array<bool, 2> seen{false, false};
  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t end = pos + 1;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    std::string_view piece(compact.data() + pos, end - pos);
    pos = end;
    char symbol = piece.back();
    int slot = symbol == 'C' ? 0 : symbol == 'F' ? 1 : -1;
    if (slot < 0 || seen[slot]) throw ParseError("malformed class '" + std::string(text) + "'");
    seen[slot] = true;
    std::string_view number = piece.substr(0, piece.size() - 1);
    if (!number.empty() && number.front() == '+') number.remove_prefix(1);
    if (number.empty()) {
      coeffs[slot] = 1;
    } else if (number == "-") {
      coeffs[slot] = -1;
    } else {
      coeffs[slot] = parse_int(number, text);
    }
  }
  return DivClass{surface, coeffs};
}

}  // namespace severi
