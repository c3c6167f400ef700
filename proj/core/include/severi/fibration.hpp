#pragma once

// Neron-Severi bookkeeping on the total space Y of the family: the section A
// through q, the fiber class Y and the non-q components of every reducible
// fiber. Identical fibers are stored once with a multiplicity.

#include "severi/exact.hpp"
#include "severi/fiber.hpp"
#include "severi/lattice.hpp"

#include <vector>

namespace severi {

class Fibration {
 public:
  struct Block {
    FiberModel model;
    ExactInt count;
  };

  /// A class written as c_A A + c_Y Y + per-block fiber coefficients (the
  /// same vector for every fiber of a block).
  struct Class {
    Rational c_A;
    Rational c_Y;
    std::vector<std::vector<std::int64_t>> blocks;
  };

  Fibration(const SurfaceModel& surface, DivClass total, Rational a_squared);

  void add(FiberModel model, ExactInt count);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Rational& a_squared() const { return a_squared_; }

  Class pullback(const DivClass& line_bundle) const;
  Class dualizing() const;
  /// Strict transform of E. F_n only.
  Class tilde_e() const;

  Rational intersect(const Class& x, const Class& y) const;

 private:
  const SurfaceModel* surface_;
  DivClass total_;
  Rational a_squared_;
  std::vector<Block> blocks_;
};

}  // namespace severi
