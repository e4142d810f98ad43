#include "lieclass/simplex.hpp"

#include <numeric>
#include <stdexcept>

namespace lieclass {

Rational integrate_monomial_simplex(std::size_t n, std::span<const unsigned> exponents) {
  if (n == 0) throw std::invalid_argument("simplex integration needs n >= 1");
  if (exponents.size() != n) throw std::invalid_argument("exponent vector length must equal n");
  Rational numer(1);
  for (unsigned a : exponents) numer *= factorial(a);
  const unsigned total = std::accumulate(exponents.begin(), exponents.end(), 0U);
  return numer / factorial(static_cast<unsigned>(n) + total);
}

Rational integrate_poly_simplex(const MultiPoly& p, std::size_t n) {
  if (n < p.nvars()) throw std::invalid_argument("polynomial has more variables than the simplex");
  const MultiPoly q = p.widened(n);
  Rational sum;
  for (const auto& [e, c] : q.terms()) {
    Exponents full = e;
    full.resize(n, 0);
    sum += c * integrate_monomial_simplex(n, full);
  }
  return sum;
}

}  // namespace lieclass
