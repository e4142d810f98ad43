#pragma once

/**
 * @file multilinear.hpp
 * @brief Cochain calculus: Alt, wedge products, the Chevalley-Eilenberg
 * differential, covariant derivatives, curvature and symmetric composition.
 *
 * Wedge products are evaluated as signed shuffle sums,
 *   (a ^_m b)(x_1..x_{p+q}) = sum over (p,q)-shuffles s of
 *                             sgn(s) m(a(x_s(1..p)), b(x_s(p+1..p+q))),
 * which equals (1/p!q!) Alt(a ._m b) without any division.
 */

#include <cstddef>
#include <vector>

#include "lieclass/cochain.hpp"
#include "lieclass/representation.hpp"

namespace lieclass {

/// Bilinear map m : V1 x V2 -> V3, out_k = sum_ij m(i, j, k) a_i b_j, stored sparsely.
class BilinearProduct {
public:
  struct Entry {
    std::size_t i, j, k;
    Rational coeff;
  };

  BilinearProduct() = default;
  BilinearProduct(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
      : left_dim_(left_dim), right_dim_(right_dim), out_dim_(out_dim) {}

  [[nodiscard]] std::size_t left_dim() const { return left_dim_; }
  [[nodiscard]] std::size_t right_dim() const { return right_dim_; }
  [[nodiscard]] std::size_t out_dim() const { return out_dim_; }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }

  /// Adds `coeff` to m(i, j, k).
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff);
  [[nodiscard]] Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  template <typename S>
  [[nodiscard]] Vec<S> apply(const Vec<S>& a, const Vec<S>& b) const {
    if (a.size() != left_dim_ || b.size() != right_dim_) throw DimensionError("bilinear product operand dimension mismatch");
    Vec<S> out(out_dim_);
    for (const Entry& e : entries_) {
      if (a[e.i].is_zero() || b[e.j].is_zero()) continue;
      out[e.k] += a[e.i] * b[e.j] * e.coeff;
    }
    return out;
  }

  [[nodiscard]] bool is_symmetric() const;

private:
  std::size_t left_dim_ = 0, right_dim_ = 0, out_dim_ = 0;
  std::vector<Entry> entries_;
};

/// Lie bracket of `g` as a product g x g -> g.
BilinearProduct lie_bracket_product(const LieAlgebra& g);
/// Multiplication of scalars R x V -> V.
BilinearProduct scalar_multiplication(std::size_t dim = 1);
/// Evaluation End(V) x V -> V; End(V) is flattened row-major (index r*dim + c).
BilinearProduct evaluation_product(std::size_t dim);
/// Symmetric tensor product S^a(n) x S^b(n) -> S^{a+b}(n) in the monomial
/// basis indexed by non-decreasing tuples.
BilinearProduct symmetric_tensor_product(std::size_t dim, std::size_t a, std::size_t b);
/// Product given by a dense table m[i][j][k].
BilinearProduct product_from_table(std::size_t left, std::size_t right, std::size_t out,
                                   const std::vector<Rational>& dense);

/// Linear map S : g -> End(V), one matrix per basis element of g.
template <typename T>
struct LinearAction {
  AlgebraRef source;
  std::size_t target_dim = 0;
  std::vector<Matrix<T>> matrices;
};

template <typename T = Rational>
LinearAction<T> action_of(const Representation& rep) {
  LinearAction<T> s{share(rep.algebra()), rep.space_dim(), {}};
  for (const auto& m : rep.action()) {
    Matrix<T> c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = T(m(i, j));
    s.matrices.push_back(std::move(c));
  }
  return s;
}

/// True iff every S(e_i) is a derivation of the product m : V x V -> V.
bool acts_by_derivations(const LinearAction<Rational>& s, const BilinearProduct& m);

/// A p-linear map given on all d^p basis tuples (no symmetry assumed).
template <typename S>
struct RawMultilinear {
  std::size_t dim = 0;
  std::size_t degree = 0;
  std::size_t target_dim = 0;
  std::vector<Vec<S>> table;  ///< index = sum_k t_k d^(p-1-k)

  RawMultilinear(std::size_t d, std::size_t p, std::size_t m) : dim(d), degree(p), target_dim(m) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < p; ++i) n *= d;
    table.assign(n, Vec<S>(m));
  }
  [[nodiscard]] std::size_t index(const IndexTuple& t) const {
    std::size_t r = 0;
    for (std::size_t x : t) r = r * dim + x;
    return r;
  }
  Vec<S>& operator[](const IndexTuple& t) { return table.at(index(t)); }
  const Vec<S>& operator[](const IndexTuple& t) const { return table.at(index(t)); }
};

/// Alt(f) = sum_{s in S_p} sgn(s) f(x_s(1), ..., x_s(p)).
template <typename S>
Cochain<S> alt(const RawMultilinear<S>& f, const AlgebraRef& source) {
  if (f.dim != source->dim()) throw DimensionError("alt: table dimension does not match the algebra");
  Cochain<S> out(source, f.degree, f.target_dim);
  const auto perms = permutations(f.degree);
  std::vector<int> signs;
  for (const auto& p : perms) signs.push_back(permutation_sign(p));
  const auto tuples = out.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    Vec<S>& acc = out.at(r);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      IndexTuple t(f.degree);
      for (std::size_t k = 0; k < f.degree; ++k) t[k] = tuples[r][perms[s][k]];
      const Vec<S>& v = f[t];
      for (std::size_t a = 0; a < f.target_dim; ++a) {
        if (signs[s] > 0) acc[a] += v[a];
        else acc[a] -= v[a];
      }
    }
  }
  return out;
}

/// Wedge product via signed (p,q)-shuffles. Throws DimensionError on shape mismatch.
template <typename S>
Cochain<S> wedge(const Cochain<S>& alpha, const Cochain<S>& beta, const BilinearProduct& m) {
  if (!same_algebra(alpha.source_ref(), beta.source_ref())) throw DimensionError("wedge: cochains live on different algebras");
  if (alpha.target_dim() != m.left_dim() || beta.target_dim() != m.right_dim())
    throw DimensionError("wedge: product does not match the cochain targets");
  const std::size_t p = alpha.degree();
  const std::size_t q = beta.degree();
  Cochain<S> out(alpha.source_ref(), p + q, m.out_dim());
  const auto shuffles = block_partitions({p, q});
  const auto tuples = out.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const IndexTuple& x = tuples[r];
    Vec<S>& acc = out.at(r);
    for (const auto& sh : shuffles) {
      IndexTuple xa, xb;
      for (std::size_t i : sh.blocks[0]) xa.push_back(x[i]);
      for (std::size_t i : sh.blocks[1]) xb.push_back(x[i]);
      const Vec<S> v = m.apply(alpha[xa], beta[xb]);
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        if (sh.sign > 0) acc[a] += v[a];
        else acc[a] -= v[a];
      }
    }
  }
  return out;
}

/// d_S w(x_0..x_p) = sum_j (-1)^j S(x_j) w(..^x_j..)
///                 + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^x_i..^x_j..).
/// The bracket is the one of S's source algebra.
template <typename S, typename T>
Cochain<S> covariant_derivative(const Cochain<S>& omega, const LinearAction<T>& s) {
  const LieAlgebra& g = omega.source();
  if (!same_algebra(omega.source_ref(), s.source)) throw DimensionError("covariant derivative: action lives on another algebra");
  if (s.matrices.size() != g.dim() || s.target_dim != omega.target_dim())
    throw DimensionError("covariant derivative: action does not match the cochain target");
  const std::size_t p = omega.degree();
  const std::size_t m = omega.target_dim();
  Cochain<S> out(omega.source_ref(), p + 1, m);
  const auto tuples = out.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const IndexTuple& x = tuples[r];
    Vec<S>& acc = out.at(r);
    for (std::size_t j = 0; j <= p; ++j) {
      IndexTuple rest;
      for (std::size_t k = 0; k <= p; ++k)
        if (k != j) rest.push_back(x[k]);
      const Matrix<T>& sx = s.matrices[x[j]];
      const Vec<S>& w = omega[rest];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (sx(a, b).is_zero() || w[b].is_zero()) continue;
          if (j % 2 == 0) acc[a] += w[b] * sx(a, b);
          else acc[a] -= w[b] * sx(a, b);
        }
    }
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        IndexTuple rest;
        for (std::size_t k = 0; k <= p; ++k)
          if (k != i && k != j) rest.push_back(x[k]);
        const Rational sign((i + j) % 2 == 0 ? 1 : -1);
        for (std::size_t k = 0; k < g.dim(); ++k) {
          const Rational& c = g.structure_constant(x[i], x[j], k);
          if (!c.is_zero()) omega.accumulate_with_leading(k, rest, c * sign, acc);
        }
      }
  }
  return out;
}

/// Chevalley-Eilenberg differential with coefficients in `rep`.
template <typename S>
Cochain<S> ce_differential(const Cochain<S>& omega, const Representation& rep) {
  if (omega.target_dim() != rep.space_dim()) throw DimensionError("ce_differential: cochain target does not match the module");
  if (!same_algebra(omega.source_ref(), share(rep.algebra())))
    throw DimensionError("ce_differential: cochain and module live on different algebras");
  LinearAction<Rational> s = action_of<Rational>(rep);
  s.source = omega.source_ref();
  return covariant_derivative(omega, s);
}

/// Differential with trivial coefficients of dimension omega.target_dim().
template <typename S>
Cochain<S> ce_differential_trivial(const Cochain<S>& omega) {
  LinearAction<Rational> zero{omega.source_ref(), omega.target_dim(),
                              std::vector<RatMatrix>(omega.source_dim(), RatMatrix(omega.target_dim(), omega.target_dim()))};
  return covariant_derivative(omega, zero);
}

/// R(x, y) = m(s(x), s(y)) - s([x, y]) for a 1-cochain s into a Lie algebra
/// whose bracket is `bracket_v`.
template <typename S>
Cochain<S> curvature(const Cochain<S>& sigma, const BilinearProduct& bracket_v) {
  if (sigma.degree() != 1) throw DimensionError("curvature needs a 1-cochain");
  const std::size_t m = sigma.target_dim();
  if (bracket_v.left_dim() != m || bracket_v.right_dim() != m || bracket_v.out_dim() != m)
    throw DimensionError("curvature: bracket does not match the cochain target");
  const LieAlgebra& g = sigma.source();
  Cochain<S> out(sigma.source_ref(), 2, m);
  const auto tuples = out.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const std::size_t x = tuples[r][0];
    const std::size_t y = tuples[r][1];
    Vec<S> v = bracket_v.apply(sigma.at(x), sigma.at(y));
    for (std::size_t k = 0; k < g.dim(); ++k) {
      const Rational& c = g.structure_constant(x, y, k);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < m; ++a)
        if (!sigma.at(k)[a].is_zero()) v[a] -= sigma.at(k)[a] * c;
    }
    out.at(r) = std::move(v);
  }
  return out;
}

/// f~ applied to a_1 ^ ... ^ a_p under the symmetric tensor product, where
/// f has p slots and a_i has degree q_i. Evaluated as a signed sum over
/// ordered block partitions of the arguments, without building S^p(n).
template <typename S>
Cochain<S> compose_sym(const SymMultiMap& f, const std::vector<const Cochain<S>*>& args) {
  if (args.size() != f.degree())
    throw DimensionError("compose_sym: " + std::to_string(args.size()) + " cochains for " + std::to_string(f.degree()) + " slots");
  if (args.empty()) throw DimensionError("compose_sym: degree-0 maps have no source algebra to compose over");
  std::vector<std::size_t> sizes;
  for (const auto* a : args) {
    if (!same_algebra(a->source_ref(), args.front()->source_ref())) throw DimensionError("compose_sym: cochains live on different algebras");
    if (a->target_dim() != f.source_dim()) throw DimensionError("compose_sym: cochain target does not match the symmetric map");
    sizes.push_back(a->degree());
  }
  std::size_t total = 0;
  for (std::size_t s : sizes) total += s;
  Cochain<S> out(args.front()->source_ref(), total, f.target_dim());
  if (out.size() == 0) return out;
  const auto parts = block_partitions(sizes);
  const auto tuples = out.tuples();
  std::vector<Vec<S>> vals(args.size());
  std::vector<const Vec<S>*> ptrs(args.size());
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const IndexTuple& x = tuples[r];
    Vec<S>& acc = out.at(r);
    for (const auto& part : parts) {
      bool zero = false;
      for (std::size_t b = 0; b < args.size() && !zero; ++b) {
        IndexTuple xb;
        for (std::size_t i : part.blocks[b]) xb.push_back(x[i]);
        ptrs[b] = &(*args[b])[xb];
        zero = is_zero_vector(*ptrs[b]);
      }
      if (zero) continue;
      const Vec<S> v = f.apply<S>(ptrs);
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        if (part.sign > 0) acc[a] += v[a];
        else acc[a] -= v[a];
      }
    }
  }
  return out;
}

/// (f v g)(y_1..y_{p+q}) = sum over (p,q)-shuffles of m_V(f(y_A), g(y_B)), unsigned.
SymMultiMap sym_product(const SymMultiMap& f, const SymMultiMap& g, const BilinearProduct& m_v);

}  // namespace lieclass
