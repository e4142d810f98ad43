#pragma once

/**
 * @file lie_algebra.hpp
 * @brief Finite-dimensional Lie algebras given by structure constants.
 *
 * [e_i, e_j] = sum_k c(i, j, k) e_k. A LieAlgebra is validated when it is
 * built (antisymmetry, Jacobi identity, unique basis names) and immutable
 * afterwards, so every operation may assume a valid algebra.
 */

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lieclass/errors.hpp"
#include "lieclass/matrix.hpp"

namespace lieclass {

/// Raw, unvalidated structure constants.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value for one output coordinate.
  void set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
    (*this)(i, j, k) = value;
    (*this)(j, i, k) = -value;
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct JacobiViolation {
  std::array<std::size_t, 3> triple;   ///< i < j < k
  Vec<Rational> cyclic_sum;            ///< [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks the Jacobi identity on every basis triple i < j < k.
JacobiReport check_jacobi(const StructureConstants& c);

/// Entries where c(i, j, .) != -c(j, i, .) or c(i, i, .) != 0.
ValidationReport check_antisymmetry(const StructureConstants& c);

class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Throws ValidationError on duplicate names, wrong dimension, broken
  /// antisymmetry or a Jacobi violation (naming the first violating triple).
  LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants);

  [[nodiscard]] std::size_t dim() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
  [[nodiscard]] const StructureConstants& constants() const { return c_; }
  [[nodiscard]] const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_(i, j, k);
  }
  /// Index of a basis element by name; throws std::out_of_range if unknown.
  [[nodiscard]] std::size_t index_of(const std::string& name) const;
  [[nodiscard]] bool is_abelian() const;

  /// Coordinates of [e_i, e_j].
  [[nodiscard]] Vec<Rational> basis_bracket(std::size_t i, std::size_t j) const {
    Vec<Rational> out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = c_(i, j, k);
    return out;
  }

  /// Bilinear extension of the structure constants to coefficient vectors.
  /// Works for any exact scalar type. Throws DimensionError on length mismatch.
  template <typename S>
  [[nodiscard]] Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("bracket: vector length does not match algebra dimension");
    Vec<S> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (i == j || y[j].is_zero()) continue;
        const S xy = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) {
          const Rational& c = c_(i, j, k);
          if (!c.is_zero()) out[k] += xy * c;
        }
      }
    }
    return out;
  }

  /// Matrix of ad(e_i) : y -> [e_i, y].
  [[nodiscard]] RatMatrix ad_basis(std::size_t i) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
  std::vector<std::string> names_;
  StructureConstants c_;
};

template <typename S = Rational>
Vec<S> basis_vector(std::size_t dim, std::size_t i) {
  Vec<S> v(dim);
  v.at(i) = S(1);
  return v;
}

/// True iff D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& algebra, const RatMatrix& d);

/// Algebra on h (+) a with [(x,r),(y,s)] = ([x,y] + r.y - s.x, [r,s]), where
/// r.y = sum_k r_k D_k y. `action` holds one derivation D_k of h per basis
/// element of a, and must define a representation of a. Basis names are
/// h's followed by a's; a name already taken gets primes appended. Throws
/// ValidationError otherwise.
LieAlgebra semidirect_product(const LieAlgebra& h, const LieAlgebra& a, const std::vector<RatMatrix>& action);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Abelian algebra with basis e1..e_dim.
LieAlgebra abelian(std::size_t dim);
/// Heisenberg algebra with basis (p, q, z), [p, q] = z.
LieAlgebra heisenberg3();
/// Heisenberg algebra of dimension 2n+1, basis p1..pn, q1..qn, z, [p_i, q_i] = z.
LieAlgebra heisenberg(std::size_t pairs);
/// Rotation derivation of heisenberg3: Dp = q, Dq = -p, Dz = 0.
RatMatrix oscillator_derivation();
/// heisenberg3 semidirect R via the rotation derivation; basis (p, q, z, w).
LieAlgebra oscillator();
/// sl(2) with basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();

enum class StandardAlgebra { abelian, heisenberg3, oscillator };
LieAlgebra standard_algebra(StandardAlgebra which, std::size_t abelian_dim = 0);

}  // namespace lieclass
