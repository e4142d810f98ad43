#pragma once

/**
 * @file multipoly.hpp
 * @brief Multivariate polynomials with exact rational coefficients.
 *
 * Used for quantities that depend on simplex parameters t_1..t_n. Terms are
 * kept in graded-lexicographic order: ascending total degree, and within one
 * degree the lexicographically larger exponent vector first (t_1 before t_2).
 * Zero coefficients are never stored.
 */

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "lieclass/rational.hpp"

namespace lieclass {

using Exponents = std::vector<unsigned>;

struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  MultiPoly(T constant) : MultiPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  /// The coordinate function t_{index+1} in a ring with `nvars` variables.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  /// Builds from (exponents, coefficient) pairs; every exponent vector must
  /// have length `nvars`. Throws std::invalid_argument otherwise.
  static MultiPoly from_terms(std::size_t nvars,
                              const std::vector<std::pair<Exponents, Rational>>& terms);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Throws std::domain_error if the polynomial is not constant.
  [[nodiscard]] Rational constant_value() const;
  [[nodiscard]] unsigned total_degree() const;

  /// Same polynomial viewed in a ring with more variables.
  [[nodiscard]] MultiPoly widened(std::size_t nvars) const;
  [[nodiscard]] MultiPoly derivative(std::size_t index) const;
  [[nodiscard]] Rational evaluate(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }

  /// Equality as polynomials; the variable count is not compared.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
  void add_term(const Exponents& e, const Rational& c);
  void promote(std::size_t nvars);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

}  // namespace lieclass
