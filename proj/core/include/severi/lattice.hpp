#pragma once

// Divisor classes on P^2 and the Hirzebruch surfaces F_2, F_3.
//
// On P^2 a class is d*L. On F_n it is a*C + b*F, where F is a fiber, E the
// negative section (E^2 = -n) and C = E + nF the complementary section, so
// the Gram matrix in the basis (C, F) is [[n, 1], [1, 0]].

#include "severi/exact.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

enum class SurfaceId { P2, F2, F3 };

std::string_view to_string(SurfaceId id);
std::optional<SurfaceId> parse_surface(std::string_view text);

struct DivClass {
  SurfaceId surface = SurfaceId::P2;
  // (d, 0) on P^2; (a, b) for aC + bF on F_n. Entries may be negative
  // for formal differences such as D - E.
  std::array<std::int64_t, 2> coeffs{0, 0};

  auto operator<=>(const DivClass&) const = default;

  DivClass& operator+=(const DivClass& other);
  DivClass& operator-=(const DivClass& other);
  friend DivClass operator+(DivClass lhs, const DivClass& rhs) { return lhs += rhs; }
  friend DivClass operator-(DivClass lhs, const DivClass& rhs) { return lhs -= rhs; }
  friend DivClass operator*(std::int64_t k, DivClass c);
};

DivClass plane_class(std::int64_t degree);
DivClass fn_class(SurfaceId surface, std::int64_t a, std::int64_t b);

class SurfaceModel {
 public:
  static const SurfaceModel& get(SurfaceId id);

  SurfaceId id() const { return id_; }
  int picard_rank() const { return rank_; }
  /// n for F_n, 1 for P^2.
  int twist() const { return twist_; }
  const std::array<std::array<std::int64_t, 2>, 2>& gram() const { return gram_; }

  std::int64_t dot(const DivClass& x, const DivClass& y) const;

  DivClass canonical() const;
  /// Hyperplane class on P^2. Throws DomainError on F_n.
  DivClass line() const;
  /// Distinguished classes on F_n. Throw DomainError on P^2.
  DivClass C() const;
  DivClass F() const;
  DivClass E() const;

  bool is_hirzebruch() const { return id_ != SurfaceId::P2; }

 private:
  SurfaceModel(SurfaceId id, int rank, int twist, std::array<std::array<std::int64_t, 2>, 2> gram);

  SurfaceId id_;
  int rank_;
  int twist_;
  std::array<std::array<std::int64_t, 2>, 2> gram_;
};

/// Bilinear symmetric pairing. Throws DomainError if either class lives on
/// another surface.
std::int64_t intersect(const SurfaceModel& s, const DivClass& d1, const DivClass& d2);

DivClass canonical(const SurfaceModel& s);

/// r0(D) = -(K.D) - 1, the dimension of the Severi variety. May be negative.
std::int64_t expected_dim(const SurfaceModel& s, const DivClass& d);

/// Support convention for N: d >= 1 on P^2; on F_n either D = F or
/// (a >= 1 and b >= 0). Excludes kF (k >= 2), E and anything negative.
bool is_countable(const SurfaceModel& s, const DivClass& d);

/// True when no coefficient is negative and the class is nonzero.
bool is_effective(const DivClass& d);

using ClassPair = std::array<DivClass, 2>;
using ClassTriple = std::array<DivClass, 3>;

/// Ordered pairs (D1, D2) of countable classes with D1 + D2 = total, in
/// lexicographic order of D1's coefficients.
std::vector<ClassPair> split_pairs(const SurfaceModel& s, const DivClass& total);

/// Ordered triples of countable classes summing to total, lexicographic in
/// (D1, D2). Empty on P^2: triples only arise from type-H fibers on F_3.
std::vector<ClassTriple> split_triples(const SurfaceModel& s, const DivClass& total);

/// "2C", "C+2F", "5F", "0", "-C+3F" on F_n; "3" on P^2.
std::string format_class(const DivClass& d);

/// Inverse of format_class. Accepts "aC+bF" with omitted unit coefficients
/// and either term absent; on P^2 a bare integer. Throws ParseError.
DivClass parse_class(SurfaceId surface, std::string_view text);

}  // namespace severi
