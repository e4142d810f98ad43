#pragma once

#include <cstddef>
#include <vector>

#include "lieclass/errors.hpp"
#include "lieclass/lie_algebra.hpp"

namespace lieclass {

/// Linear action of a Lie algebra on a finite-dimensional space, given by the
/// matrices rho(e_i). Validated as a module on construction.
class Representation {
public:
  Representation() = default;
  /// Throws ValidationError if the matrices have the wrong shape or
  /// rho([e_i,e_j]) != [rho(e_i), rho(e_j)] for some pair.
  Representation(LieAlgebra algebra, std::size_t space_dim, std::vector<RatMatrix> action);

  [[nodiscard]] const LieAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] std::size_t space_dim() const { return space_dim_; }
  [[nodiscard]] const std::vector<RatMatrix>& action() const { return action_; }
  [[nodiscard]] const RatMatrix& action(std::size_t i) const { return action_.at(i); }
  [[nodiscard]] bool is_trivial() const;

  /// The unvalidated constructor used by check_representation tests.
  static Representation unchecked(LieAlgebra algebra, std::size_t space_dim, std::vector<RatMatrix> action);

private:
  LieAlgebra algebra_;
  std::size_t space_dim_ = 0;
  std::vector<RatMatrix> action_;
};

/// ok iff rho([e_i,e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i) for all i < j.
ValidationReport check_representation(const Representation& rep);

Representation trivial_representation(const LieAlgebra& algebra, std::size_t space_dim = 1);
Representation adjoint_representation(const LieAlgebra& algebra);

}  // namespace lieclass
