#pragma once

// Symbolic models of the reducible fibers of the one-parameter family Y -> B
// of rational curves through r0(D) - 1 general points.
//
// Component 0 always carries the marked point q; it is left out of the
// Neron-Severi basis, which makes every coefficient solve below unique.
// Coefficient vectors are indexed like components(), with 0 in slot 0.

#include "severi/exact.hpp"
#include "severi/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace severi {

/// J: two components. G: curve with contact order 3 plus E. K / K': chains
/// through a contracted component, tangency on the q side or the far side.
/// H: three curves on E (F_3). Hf2: two curves on E (F_2).
enum class FiberType { J, G, K, Kprime, H, Hf2 };

std::string_view to_string(FiberType type);

struct FiberComponent {
  std::string name;
  std::int64_t self_int = 0;
  std::optional<DivClass> image;  // nullopt: contracted to a point
  bool holds_q = false;
  bool holds_qprime = false;
};

/// Where the second marked point q' sits. Crossing fibers put it on the
/// component of the second split part; G fibers cannot cross.
enum class QPrime { absent, second_part };

class FiberModel {
 public:
  FiberModel(SurfaceId surface, FiberType type, std::vector<FiberComponent> components,
             std::vector<std::pair<int, int>> edges);

  SurfaceId surface() const { return surface_; }
  FiberType type() const { return type_; }
  const std::vector<FiberComponent>& components() const { return components_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return components_.size(); }

  /// W_i . W_j inside the fiber surface.
  std::int64_t pairing(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  /// Index of the component with the given name; throws DomainError.
  std::size_t index_of(std::string_view name) const;

  /// Image class of a component; throws DomainError for contracted ones.
  const DivClass& image(std::size_t i) const;

 private:
  SurfaceId surface_;
  FiberType type_;
  std::vector<FiberComponent> components_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::int64_t>> gram_;
};

/// Populates the template of the given type. Split sizes: J, K, K', Hf2 take
/// (D1, D2); H takes (D1, D2, D3); G takes the single class D - E.
/// Throws DomainError on incompatible surface, arity or non-countable parts.
FiberModel make_fiber(const SurfaceModel& s, FiberType type, std::span<const DivClass> split,
                      QPrime qprime = QPrime::second_part);

/// Fiber coefficients of pi^*L, solving
/// sum_W' c_W' (W'.W) = (L . pi(W)) for every non-q component W.
std::vector<std::int64_t> pullback_coefficients(const FiberModel& model, const DivClass& line_bundle);

/// sum c_W(L) c_W'(M) (W.W') over non-q components.
ExactInt fiber_contribution(const FiberModel& model, const DivClass& l, const DivClass& m);

/// The same block from the per-type closed forms (the brackets written out
/// by hand, with corrected signs). Kept separate from the solver on purpose:
/// the two are compared by the property tests.
ExactInt fiber_contribution_closed_form(const FiberModel& model, const DivClass& l, const DivClass& m);

/// Coefficients of omega_{Y/B} on the fiber, from (omega . W) = -2 - W^2.
std::vector<std::int64_t> dualizing_coefficients(const FiberModel& model);

/// This fiber's share of (A - A')^2. Throws DomainError when q' is absent.
std::int64_t ashift_square(const FiberModel& model);

/// Corrections turning pi^*E into the strict transform of E: supported on the
/// E-components and contracted components, each of which Etilde misses.
/// Throws DomainError on P^2.
std::vector<std::int64_t> tildeE_coefficients(const FiberModel& model);

/// sum x_i y_j (W_i . W_j) over non-q components.
ExactInt fiber_quadratic(const FiberModel& model, std::span<const std::int64_t> x,
                         std::span<const std::int64_t> y);

/// (sum of all components)^2; zero for every valid template.
std::int64_t fiber_class_square(const FiberModel& model);

}  // namespace severi
