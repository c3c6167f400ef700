#include "severi/fiber.hpp"

#include "severi/errors.hpp"

#include <algorithm>

namespace severi {

std::string_view to_string(FiberType type) {
  switch (type) {
    case FiberType::J: return "J";
    case FiberType::G: return "G";
    case FiberType::K: return "K";
    case FiberType::Kprime: return "K'";
    case FiberType::H: return "H";
    case FiberType::Hf2: return "Hf2";
  }
  return "?";
}

FiberModel::FiberModel(SurfaceId surface, FiberType type, std::vector<FiberComponent> components,
                       std::vector<std::pair<int, int>> edges)
    : surface_(surface), type_(type), components_(std::move(components)), edges_(std::move(edges)) {
  const std::size_t n = components_.size();
  gram_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) gram_[i][i] = components_[i].self_int;
  for (auto [i, j] : edges_) {
    gram_[i][j] += 1;
    gram_[j][i] += 1;
  }
  if (n == 0 || !components_[0].holds_q) throw DomainError("component 0 must hold q");
  int q = 0, qprime = 0;
  for (const auto& c : components_) {
    q += c.holds_q;
    qprime += c.holds_qprime;
    if (c.holds_q && c.holds_qprime) throw DomainError("q and q' on the same component");
  }
  if (q != 1 || qprime > 1) throw DomainError("bad section markers in fiber template");
  if (fiber_class_square(*this) != 0) throw DomainError("fiber class does not square to zero");
}

std::size_t FiberModel::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].name == name) return i;
  throw DomainError("no component named " + std::string(name));
}

const DivClass& FiberModel::image(std::size_t i) const {
  if (!components_.at(i).image) throw DomainError(components_[i].name + " is contracted");
  return *components_[i].image;
}

namespace {

FiberComponent comp(std::string name, std::int64_t self_int, std::optional<DivClass> image,
                    bool q = false, bool qprime = false) {
  return FiberComponent{std::move(name), self_int, std::move(image), q, qprime};
}

void require_parts(const SurfaceModel& s, FiberType type, std::span<const DivClass> split,
                   std::size_t arity) {
  if (split.size() != arity) {
    throw DomainError("fiber type " + std::string(to_string(type)) + " takes " + std::to_string(arity) +
                      " classes");
  }
  for (const auto& d : split) {
    bool ok = type == FiberType::G ? (d.surface == s.id() && is_effective(d)) : is_countable(s, d);
    if (!ok) {
      throw DomainError("class " + format_class(d) + " cannot be a component of a type " +
                        std::string(to_string(type)) + " fiber");
    }
  }
}

void require_surface(const SurfaceModel& s, FiberType type, bool ok) {
  if (!ok) {
    throw DomainError("fiber type " + std::string(to_string(type)) + " does not occur on " +
                      std::string(to_string(s.id())));
  }
}

}  // namespace

FiberModel make_fiber(const SurfaceModel& s, FiberType type, std::span<const DivClass> split,
                      QPrime qprime) {
  const bool cross = qprime == QPrime::second_part;
  const SurfaceId id = s.id();
  switch (type) {
    case FiberType::J:
      require_parts(s, type, split, 2);
      return FiberModel(id, type, {comp("J1", -1, split[0], true), comp("J2", -1, split[1], false, cross)},
                        {{0, 1}});
    case FiberType::G:
      require_surface(s, type, s.is_hirzebruch());
      require_parts(s, type, split, 1);
      return FiberModel(id, type, {comp("G1", -1, split[0], true), comp("GE", -1, s.E())}, {{0, 1}});
    case FiberType::K:
      require_surface(s, type, id == SurfaceId::F3);
      require_parts(s, type, split, 2);
      return FiberModel(id, type,
                        {comp("K1", -1, split[0], true), comp("KE", -2, s.E()), comp("K0", -2, std::nullopt),
                         comp("K2", -1, split[1], false, cross)},
                        {{0, 1}, {1, 2}, {2, 3}});
    case FiberType::Kprime:
      require_surface(s, type, id == SurfaceId::F3);
      require_parts(s, type, split, 2);
      return FiberModel(id, type,
                        {comp("K'1", -1, split[0], true), comp("K'0", -2, std::nullopt), comp("K'E", -2, s.E()),
                         comp("K'2", -1, split[1], false, cross)},
                        {{0, 1}, {1, 2}, {2, 3}});
    case FiberType::H:
      require_surface(s, type, id == SurfaceId::F3);
      require_parts(s, type, split, 3);
      return FiberModel(id, type,
                        {comp("H1", -1, split[0], true), comp("HE", -3, s.E()),
                         comp("H2", -1, split[1], false, cross), comp("H3", -1, split[2])},
                        {{0, 1}, {1, 2}, {1, 3}});
    case FiberType::Hf2:
      require_surface(s, type, id == SurfaceId::F2);
      require_parts(s, type, split, 2);
      return FiberModel(id, type,
                        {comp("H1", -1, split[0], true), comp("HE", -2, s.E()),
                         comp("H2", -1, split[1], false, cross)},
                        {{0, 1}, {1, 2}});
  }
  throw DomainError("unknown fiber type");
}

namespace {

// Solves the block of the fiber Gram matrix on `rows` (a nonsingular
// negative definite block) against rhs, exactly. The templates always give
// integral solutions; anything else is a template bug.
std::vector<std::int64_t> solve_block(const FiberModel& model, const std::vector<std::size_t>& rows,
                                      const std::vector<std::int64_t>& rhs) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(model.pairing(rows[i], rows[j])));
    m[i][n] = Rational(static_cast<long>(rhs[i]));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw ConsistencyError("singular fiber system for type " + std::string(to_string(model.type())));
    std::swap(m[c], m[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = m[i][n] / m[i][i];
    ExactInt v = require_integer(x, "fiber coefficient on " + model.components()[rows[i]].name);
    out[i] = v.get_si();
  }
  return out;
}

std::vector<std::size_t> non_q(const FiberModel& model) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < model.size(); ++i) rows.push_back(i);
  return rows;
}

std::vector<std::int64_t> scatter(const FiberModel& model, const std::vector<std::size_t>& rows,
                                  const std::vector<std::int64_t>& values) {
  std::vector<std::int64_t> out(model.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) out[rows[i]] = values[i];
  return out;
}

std::int64_t image_pairing(const FiberModel& model, std::size_t i, const DivClass& l) {
  const auto& image = model.components()[i].image;
  if (!image) return 0;
  return SurfaceModel::get(model.surface()).dot(l, *image);
}

}  // namespace

std::vector<std::int64_t> pullback_coefficients(const FiberModel& model, const DivClass& line_bundle) {
  auto rows = non_q(model);
  std::vector<std::int64_t> rhs;
  for (auto i : rows) rhs.push_back(image_pairing(model, i, line_bundle));
  return scatter(model, rows, solve_block(model, rows, rhs));
}

ExactInt fiber_quadratic(const FiberModel& model, std::span<const std::int64_t> x,
                         std::span<const std::int64_t> y) {
  ExactInt out = 0;
  for (std::size_t i = 1; i < model.size(); ++i)
    for (std::size_t j = 1; j < model.size(); ++j) {
      const std::int64_t g = model.pairing(i, j);
      if (g != 0) out += ExactInt(static_cast<long>(x[i])) * y[j] * g;
    }
  return out;
}

ExactInt fiber_contribution(const FiberModel& model, const DivClass& l, const DivClass& m) {
  return fiber_quadratic(model, pullback_coefficients(model, l), pullback_coefficients(model, m));
}

ExactInt fiber_contribution_closed_form(const FiberModel& model, const DivClass& l, const DivClass& m) {
  const auto& s = SurfaceModel::get(model.surface());
  auto at = [&](const DivClass& x, std::string_view name) { return s.dot(x, model.image(model.index_of(name))); };
  auto E = [&](const DivClass& x) { return s.dot(x, s.E()); };
  std::int64_t v = 0;
  switch (model.type()) {
    case FiberType::J: v = -at(l, "J2") * at(m, "J2"); break;
    case FiberType::G: v = -E(l) * E(m); break;
    case FiberType::K: {
      auto l2 = at(l, "K2"), m2 = at(m, "K2"), le = E(l), me = E(m);
      v = -(3 * l2 * m2 + l2 * me + le * m2 + le * me);
      break;
    }
    case FiberType::Kprime: {
      auto l2 = at(l, "K'2"), m2 = at(m, "K'2"), le = E(l), me = E(m);
      v = -(3 * l2 * m2 + 2 * l2 * me + 2 * le * m2 + 2 * le * me);
      break;
    }
    case FiberType::H: {
      auto l2 = at(l, "H2"), l3 = at(l, "H3"), m2 = at(m, "H2"), m3 = at(m, "H3");
      v = -((l2 + l3 + E(l)) * (m2 + m3 + E(m)) + l2 * m2 + l3 * m3);
      break;
    }
    case FiberType::Hf2: {
      auto l2 = at(l, "H2"), m2 = at(m, "H2"), le = E(l), me = E(m);
      v = -(2 * l2 * m2 + l2 * me + le * m2 + le * me);
      break;
    }
  }
  return ExactInt(static_cast<long>(v));
}

std::vector<std::int64_t> dualizing_coefficients(const FiberModel& model) {
  auto rows = non_q(model);
  std::vector<std::int64_t> rhs;
  for (auto i : rows) rhs.push_back(-2 - model.pairing(i, i));
  return scatter(model, rows, solve_block(model, rows, rhs));
}

std::int64_t ashift_square(const FiberModel& model) {
  const auto& comps = model.components();
  if (std::none_of(comps.begin(), comps.end(), [](const auto& c) { return c.holds_qprime; })) {
    throw DomainError("fiber of type " + std::string(to_string(model.type())) + " does not separate q and q'");
  }
  // A' - A restricted to the fiber: the combination z of non-q components
  // with (z . W) = -[W holds q'].
  auto rows = non_q(model);
  std::vector<std::int64_t> rhs;
  for (auto i : rows) rhs.push_back(comps[i].holds_qprime ? -1 : 0);
  auto z = scatter(model, rows, solve_block(model, rows, rhs));
  return fiber_quadratic(model, z, z).get_si();
}

std::vector<std::int64_t> tildeE_coefficients(const FiberModel& model) {
  if (model.surface() == SurfaceId::P2) throw DomainError("E does not exist on P2");
  const auto& s = SurfaceModel::get(model.surface());
  std::vector<std::size_t> rows;
  std::vector<std::int64_t> rhs;
  for (std::size_t i = 1; i < model.size(); ++i) {
    const auto& image = model.components()[i].image;
    if (image && *image != s.E()) continue;
    rows.push_back(i);
    rhs.push_back(-image_pairing(model, i, s.E()));
  }
  if (rows.empty()) return std::vector<std::int64_t>(model.size(), 0);
  return scatter(model, rows, solve_block(model, rows, rhs));
}

std::int64_t fiber_class_square(const FiberModel& model) {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = 0; j < model.size(); ++j) out += model.pairing(i, j);
  return out;
}

}  // namespace severi
