#include "lieclass/linalg.hpp"

#include <utility>

namespace lieclass {

Echelon reduced_row_echelon(const RatMatrix& a) {
  Echelon e{a, {}};
  RatMatrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RatMatrix& a) { return reduced_row_echelon(a).pivots.size(); }

std::vector<Vec<Rational>> nullspace(const RatMatrix& a) {
  const Echelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<Vec<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<Rational> v(a.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec<Rational>> solve_linear(const RatMatrix& a, const Vec<Rational>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<Rational> x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<std::size_t> independent_columns(const RatMatrix& a) { return reduced_row_echelon(a).pivots; }

std::optional<RatMatrix> left_inverse(const RatMatrix& a) {
  const std::size_t n = a.cols();
  if (rank(a) != n) return std::nullopt;
  const RatMatrix at = a.transposed();
  const RatMatrix gram = at * a;
  RatMatrix out(n, a.rows());
  for (std::size_t j = 0; j < a.rows(); ++j) {
    auto x = solve_linear(gram, at.column(j));
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) out(i, j) = (*x)[i];
  }
  return out;
}

}  // namespace lieclass
