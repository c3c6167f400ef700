#include "severi/fibration.hpp"

#include "severi/errors.hpp"

namespace severi {

Fibration::Fibration(const SurfaceModel& surface, DivClass total, Rational a_squared)
    : surface_(&surface), total_(total), a_squared_(std::move(a_squared)) {}

void Fibration::add(FiberModel model, ExactInt count) {
  if (model.surface() != surface_->id()) throw DomainError("fiber from another surface");
  if (count < 0) throw ConsistencyError("negative fiber count", {{"count", to_string(count)}});
  if (count == 0) return;
  blocks_.push_back(Block{std::move(model), std::move(count)});
}

Fibration::Class Fibration::pullback(const DivClass& line_bundle) const {
  const std::int64_t ld = surface_->dot(line_bundle, total_);
  Class out{Rational(static_cast<long>(ld)), -Rational(static_cast<long>(ld)) * a_squared_, {}};
  for (const auto& b : blocks_) out.blocks.push_back(pullback_coefficients(b.model, line_bundle));
  return out;
}

Fibration::Class Fibration::dualizing() const {
  Class out{Rational(-2), a_squared_, {}};
  for (const auto& b : blocks_) out.blocks.push_back(dualizing_coefficients(b.model));
  return out;
}

Fibration::Class Fibration::tilde_e() const {
  Class out = pullback(surface_->E());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto corr = tildeE_coefficients(blocks_[i].model);
    for (std::size_t k = 0; k < corr.size(); ++k) out.blocks[i][k] += corr[k];
  }
  return out;
}

Rational Fibration::intersect(const Class& x, const Class& y) const {
  Rational out = x.c_A * y.c_A * a_squared_ + x.c_A * y.c_Y + x.c_Y * y.c_A;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    out += Rational(blocks_[i].count * fiber_quadratic(blocks_[i].model, x.blocks[i], y.blocks[i]));
  }
  return out;
}

}  // namespace severi
