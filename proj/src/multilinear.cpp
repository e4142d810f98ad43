#include "lieclass/multilinear.hpp"

#include <algorithm>

namespace lieclass {

void BilinearProduct::add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
  if (i >= left_dim_ || j >= right_dim_ || k >= out_dim_) throw DimensionError("bilinear product index out of range");
  if (coeff.is_zero()) return;
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->i == i && it->j == j && it->k == k) {
      it->coeff += coeff;
      if (it->coeff.is_zero()) entries_.erase(it);
      return;
    }
  }
  entries_.push_back({i, j, k, coeff});
}

Rational BilinearProduct::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& e : entries_)
    if (e.i == i && e.j == j && e.k == k) return e.coeff;
  return Rational(0);
}

bool BilinearProduct::is_symmetric() const {
  if (left_dim_ != right_dim_) return false;
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return coefficient(e.j, e.i, e.k) == e.coeff; });
}

BilinearProduct lie_bracket_product(const LieAlgebra& g) {
  BilinearProduct m(g.dim(), g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) m.add(i, j, k, g.structure_constant(i, j, k));
  return m;
}

BilinearProduct scalar_multiplication(std::size_t dim) {
  BilinearProduct m(1, dim, dim);
  for (std::size_t k = 0; k < dim; ++k) m.add(0, k, k, Rational(1));
  return m;
}

BilinearProduct evaluation_product(std::size_t dim) {
  BilinearProduct m(dim * dim, dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m.add(r * dim + c, c, r, Rational(1));
  return m;
}

BilinearProduct symmetric_tensor_product(std::size_t dim, std::size_t a, std::size_t b) {
  const auto left = nondecreasing_tuples(dim, a);
  const auto right = nondecreasing_tuples(dim, b);
  const auto out_size = nondecreasing_tuples(dim, a + b).size();
  BilinearProduct m(left.size(), right.size(), out_size);
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      IndexTuple merged = left[i];
      merged.insert(merged.end(), right[j].begin(), right[j].end());
      std::sort(merged.begin(), merged.end());
      m.add(i, j, nondecreasing_rank(merged, dim), Rational(1));
    }
  return m;
}

BilinearProduct product_from_table(std::size_t left, std::size_t right, std::size_t out,
                                   const std::vector<Rational>& dense) {
  if (dense.size() != left * right * out) throw DimensionError("product table has the wrong size");
  BilinearProduct m(left, right, out);
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j)
      for (std::size_t k = 0; k < out; ++k) m.add(i, j, k, dense[(i * right + j) * out + k]);
  return m;
}

bool acts_by_derivations(const LinearAction<Rational>& s, const BilinearProduct& m) {
  const std::size_t n = s.target_dim;
  if (m.left_dim() != n || m.right_dim() != n || m.out_dim() != n) throw DimensionError("product does not act on the action's space");
  for (const RatMatrix& d : s.matrices) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec<Rational> ei = basis_vector(n, i);
        const Vec<Rational> ej = basis_vector(n, j);
        const Vec<Rational> lhs = d * m.apply(ei, ej);
        Vec<Rational> rhs = m.apply(d.column(i), ej);
        const Vec<Rational> second = m.apply(ei, d.column(j));
        for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

SymMultiMap sym_product(const SymMultiMap& f, const SymMultiMap& g, const BilinearProduct& m_v) {
  if (!same_algebra(f.source_ref(), g.source_ref())) throw DimensionError("sym_product: maps live on different algebras");
  if (f.target_dim() != m_v.left_dim() || g.target_dim() != m_v.right_dim())
    throw DimensionError("sym_product: product does not match the targets");
  const std::size_t p = f.degree();
  const std::size_t q = g.degree();
  SymMultiMap out(f.source_ref(), p + q, m_v.out_dim());
  const auto shuffles = block_partitions({p, q});
  const auto tuples = out.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const IndexTuple& y = tuples[r];
    Vec<Rational> acc(m_v.out_dim());
    for (const auto& sh : shuffles) {
      IndexTuple ya, yb;
      for (std::size_t i : sh.blocks[0]) ya.push_back(y[i]);
      for (std::size_t i : sh.blocks[1]) yb.push_back(y[i]);
      const Vec<Rational> v = m_v.apply(f.evaluate(ya), g.evaluate(yb));
      for (std::size_t a = 0; a < v.size(); ++a) acc[a] += v[a];
    }
    out.at(r) = std::move(acc);
  }
  return out;
}

}  // namespace lieclass
