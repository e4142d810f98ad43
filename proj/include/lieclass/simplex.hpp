#pragma once

/**
 * @file simplex.hpp
 * @brief Exact integrals over D_n = { t_i >= 0, t_1 + ... + t_n <= 1 }.
 *
 * The Lebesgue integral over D_n equals the normalized surface integral over
 * the standard simplex (the normalization constant is exactly the Jacobian of
 * the parametrization t_0 = 1 - t_1 - ... - t_n), so all values stay rational.
 */

#include <cstddef>
#include <span>

#include "lieclass/multipoly.hpp"

namespace lieclass {

/// prod(a_i!) / (n + sum a_i)!. Throws std::invalid_argument if n == 0 or
/// the exponent vector length differs from n.
Rational integrate_monomial_simplex(std::size_t n, std::span<const unsigned> exponents);

/// Integral of `p` over D_n. `n` must be at least p.nvars() and positive.
Rational integrate_poly_simplex(const MultiPoly& p, std::size_t n);

/// Same, with n = p.nvars().
inline Rational integrate_poly_simplex(const MultiPoly& p) { return integrate_poly_simplex(p, p.nvars()); }

}  // namespace lieclass
