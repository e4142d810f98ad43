#pragma once

/**
 * @file cohomology.hpp
 * @brief Chevalley-Eilenberg cohomology H^p(g, V) = Z^p / B^p.
 *
 * Cochains are flattened to coordinate vectors (tuple rank * dim V + component)
 * so that Z^p, B^p and class coordinates come from exact linear algebra with
 * deterministic echelon bases.
 */

#include <cstddef>
#include <vector>

#include "lieclass/linalg.hpp"
#include "lieclass/multilinear.hpp"

namespace lieclass {

Vec<Rational> flatten(const RatCochain& c);
RatCochain unflatten(const AlgebraRef& g, std::size_t degree, std::size_t target_dim, const Vec<Rational>& v);

/// Matrix of d : C^p(g, V) -> C^{p+1}(g, V) in the flattened coordinates.
RatMatrix differential_matrix(const Representation& rep, std::size_t p);

class CohomologySpace {
public:
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const Representation& module() const { return rep_; }
  [[nodiscard]] const AlgebraRef& algebra_ref() const { return g_; }
  [[nodiscard]] const std::vector<RatCochain>& cocycle_basis() const { return cocycles_; }
  [[nodiscard]] const std::vector<RatCochain>& coboundary_basis() const { return coboundaries_; }
  /// Cocycles whose classes form the chosen basis of H^p.
  [[nodiscard]] const std::vector<RatCochain>& class_representatives() const { return representatives_; }
  [[nodiscard]] std::size_t h_dim() const { return representatives_.size(); }
  /// h_dim x dim Z^p matrix sending cocycle-basis coordinates to class coordinates.
  [[nodiscard]] const RatMatrix& class_projection() const { return projection_; }

  [[nodiscard]] bool is_cocycle(const RatCochain& c) const;
  [[nodiscard]] bool is_coboundary(const RatCochain& c) const;
  /// Coordinates of [c] in the representative basis. Throws NotACocycle.
  [[nodiscard]] Vec<Rational> coordinates(const RatCochain& c) const;

  friend CohomologySpace cohomology_space(const Representation& rep, std::size_t p);
  friend CohomologySpace cohomology_space(const AlgebraRef& g, const Representation& rep, std::size_t p);

private:
  std::size_t degree_ = 0;
  AlgebraRef g_;
  Representation rep_;
  std::vector<RatCochain> cocycles_;
  std::vector<RatCochain> coboundaries_;
  std::vector<RatCochain> representatives_;
  RatMatrix projection_;
  RatMatrix boundary_then_classes_;  ///< columns: coboundary basis, then representatives
};

/// H^p(g, V) for the module `rep`. Degrees above dim g give the zero space.
CohomologySpace cohomology_space(const Representation& rep, std::size_t p);
/// Same, with cochains built on the shared algebra handle `g` (must equal rep.algebra()).
CohomologySpace cohomology_space(const AlgebraRef& g, const Representation& rep, std::size_t p);

/// True iff a - b is a coboundary. Throws NotACocycle if either is not closed.
bool classes_equal(const RatCochain& a, const RatCochain& b, const CohomologySpace& h);

}  // namespace lieclass
