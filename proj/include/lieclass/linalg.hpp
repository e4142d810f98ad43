#pragma once

/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over the rationals.
 *
 * Pivoting picks the first nonzero entry of each column, scanning rows top to
 * bottom, so every basis returned here is a deterministic function of the
 * input matrix.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "lieclass/matrix.hpp"

namespace lieclass {

struct Echelon {
  RatMatrix reduced;                 ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

Echelon reduced_row_echelon(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Basis of {x : A x = 0}, one vector per free column, with a 1 in that free
/// column and zeros in the other free columns.
std::vector<Vec<Rational>> nullspace(const RatMatrix& a);

/// Some x with A x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<Vec<Rational>> solve_linear(const RatMatrix& a, const Vec<Rational>& b);

/// Indices of a maximal linearly independent prefix-greedy subset of columns.
std::vector<std::size_t> independent_columns(const RatMatrix& a);

/// L with L A = I for a matrix of full column rank; nullopt otherwise.
std::optional<RatMatrix> left_inverse(const RatMatrix& a);

}  // namespace lieclass
