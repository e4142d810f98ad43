#pragma once

// Shared fixtures, seeded generators and independent oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lieclass/characteristic.hpp"
#include "lieclass/linalg.hpp"
#include "lieclass/simplex.hpp"

namespace lieclass::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  /// Small rational a/b with |a| <= 4, 1 <= b <= 3; zero with probability ~ 1/3.
  Rational rational() {
    if (integer(0, 2) == 0) return Rational(0);
    return Rational(integer(-4, 4), integer(1, 3));
  }
  Vec<Rational> vector(std::size_t n) {
    Vec<Rational> v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  RatMatrix matrix(std::size_t r, std::size_t c) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }
  /// Unit lower-triangular times unit upper-triangular: always invertible.
  RatMatrix invertible(std::size_t n) {
    RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = rational();
        u(j, i) = rational();
      }
    return l * u;
  }
  MultiPoly poly(std::size_t nvars, unsigned max_degree, std::size_t terms) {
    std::vector<std::pair<Exponents, Rational>> t;
    for (std::size_t k = 0; k < terms; ++k) {
      Exponents e(nvars, 0);
      unsigned budget = static_cast<unsigned>(integer(0, max_degree));
      for (unsigned b = 0; b < budget; ++b) ++e[index(nvars)];
      t.emplace_back(e, Rational(integer(-9, 9), integer(1, 5)));
    }
    return MultiPoly::from_terms(nvars, t);
  }
  std::mt19937_64& engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

inline RatMatrix inverse(const RatMatrix& a) {
  auto l = left_inverse(a);
  if (!l) throw std::invalid_argument("matrix is singular");
  return *l;
}

/// Same algebra in the basis b_i = P e_i.
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p) {
  const RatMatrix pinv = inverse(p);
  const std::size_t n = g.dim();
  StructureConstants c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<Rational> v = pinv * g.bracket(p.column(i), p.column(j));
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = v[k];
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i + 1));
  return LieAlgebra(names, c);
}

/// 2-dimensional non-abelian algebra [e1, e2] = e2.
inline LieAlgebra affine_line(const std::string& x = "x", const std::string& y = "y") {
  StructureConstants c(2);
  c.set_antisymmetric(0, 1, 1, Rational(1));
  return LieAlgebra({x, y}, c);
}

/// Random validated algebra of dimension between 1 and max_dim.
inline LieAlgebra random_algebra(Rng& rng, std::size_t max_dim = 4) {
  std::vector<LieAlgebra> pool = {abelian(1), abelian(2), affine_line(), heisenberg3(), sl2(), abelian(3)};
  if (max_dim >= 4) {
    pool.push_back(oscillator());
    pool.push_back(direct_sum(affine_line(), affine_line("u", "v")));
    pool.push_back(semidirect_product(abelian(3), abelian(1), {rng.matrix(3, 3)}));
    pool.push_back(direct_sum(sl2(), abelian(1)));
  }
  std::vector<LieAlgebra> fit;
  for (auto& g : pool)
    if (g.dim() <= max_dim) fit.push_back(g);
  const LieAlgebra& g = fit[rng.index(fit.size())];
  return rng.coin() ? change_basis(g, rng.invertible(g.dim())) : g;
}

/// Random validated module: trivial, adjoint, or conjugated adjoint.
inline Representation random_representation(Rng& rng, const LieAlgebra& g) {
  switch (rng.integer(0, 2)) {
    case 0: return trivial_representation(g, static_cast<std::size_t>(rng.integer(1, 2)));
    case 1: return adjoint_representation(g);
    default: {
      const RatMatrix p = rng.invertible(g.dim());
      const RatMatrix pinv = inverse(p);
      std::vector<RatMatrix> action;
      for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(p * g.ad_basis(i) * pinv);
      return Representation(g, g.dim(), action);
    }
  }
}

template <typename S>
Cochain<S> random_cochain(Rng& rng, const AlgebraRef& g, std::size_t p, std::size_t m) {
  Cochain<S> c(g, p, m);
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t a = 0; a < m; ++a) c.at(r)[a] = S(rng.rational());
  return c;
}

/// Heisenberg central extension 0 -> span(z) -> h3 -> R^2 -> 0.
inline Extension heisenberg_extension() {
  LieAlgebra kernel({"z"}, StructureConstants(1));
  return make_extension(heisenberg3(), abelian(2), kernel, RatMatrix::from_rows({{0}, {0}, {1}}),
                        RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
}

/// Split extension 0 -> h3 -> h3 x|_D R -> R -> 0.
inline Extension oscillator_extension() {
  return make_extension(oscillator(), abelian(1), heisenberg3(),
                        RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                        RatMatrix::from_rows({{0, 0, 0, 1}}));
}

/// Central extension 0 -> span(z) -> h5 -> R^4 -> 0 (dim total = 5).
inline Extension heisenberg5_extension() {
  LieAlgebra kernel({"z"}, StructureConstants(1));
  RatMatrix iota(5, 1);
  iota(4, 0) = Rational(1);
  RatMatrix q(4, 5);
  for (std::size_t i = 0; i < 4; ++i) q(i, i) = Rational(1);
  return make_extension(heisenberg(2), abelian(4), kernel, iota, q);
}

/// Split extension of the affine line by the line, viewed as kernel span(y).
inline Extension affine_extension() {
  LieAlgebra kernel({"y"}, StructureConstants(1));
  LieAlgebra base({"x"}, StructureConstants(1));
  return make_extension(affine_line(), base, kernel, RatMatrix::from_rows({{0}, {1}}), RatMatrix::from_rows({{1, 0}}));
}

/// Extension of sl2 (+) R^2-ish data: the trivial central extension sl2 (+) R -> sl2.
inline Extension sl2_central_extension() {
  const LieAlgebra total = direct_sum(sl2(), abelian(1));
  LieAlgebra kernel({"c"}, StructureConstants(1));
  RatMatrix iota(4, 1);
  iota(3, 0) = Rational(1);
  RatMatrix q(3, 4);
  for (std::size_t i = 0; i < 3; ++i) q(i, i) = Rational(1);
  return make_extension(total, sl2(), kernel, iota, q);
}

/// 0 -> R^2 -> R^2 x| sl2 -> sl2 -> 0 with sl2 acting by its standard representation.
inline Extension sl2_affine_extension() {
  const std::vector<RatMatrix> standard = {RatMatrix::from_rows({{1, 0}, {0, -1}}), RatMatrix::from_rows({{0, 1}, {0, 0}}),
                                           RatMatrix::from_rows({{0, 0}, {1, 0}})};
  const LieAlgebra total = semidirect_product(abelian(2), sl2(), standard);
  RatMatrix iota(5, 2), q(3, 5);
  iota(0, 0) = iota(1, 1) = Rational(1);
  for (std::size_t i = 0; i < 3; ++i) q(i, i + 2) = Rational(1);
  return make_extension(total, sl2(), abelian(2), iota, q);
}

/// Module Sym^k(n) of the base when the kernel action `s` is a representation
/// (abelian kernel), in the monomial basis of non-decreasing tuples.
inline Representation sym_power_representation(const LieAlgebra& base, const LinearAction<Rational>& s, std::size_t k) {
  const std::size_t dn = s.target_dim;
  const auto monomials = nondecreasing_tuples(dn, k);
  std::vector<RatMatrix> action;
  for (const RatMatrix& m : s.matrices) {
    RatMatrix a(monomials.size(), monomials.size());
    for (std::size_t c = 0; c < monomials.size(); ++c)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < dn; ++l) {
          const Rational& coeff = m(l, monomials[c][j]);
          if (coeff.is_zero()) continue;
          IndexTuple t = monomials[c];
          t[j] = l;
          std::sort(t.begin(), t.end());
          a(nondecreasing_rank(t, dn), c) += coeff;
        }
    action.push_back(a);
  }
  return Representation(base, monomials.size(), action);
}

/// The product map n^k -> Sym^k(n).
inline SymMultiMap sym_power_map(const AlgebraRef& kernel, std::size_t k) {
  SymMultiMap f(kernel, k, binomial(kernel->dim() + k - 1, k));
  for (const auto& t : f.tuples()) f.set(t, basis_vector<Rational>(f.target_dim(), nondecreasing_rank(t, kernel->dim())));
  return f;
}

inline Section standard_section(const Extension& e) {
  // columns: a right inverse of q built from a complement of the kernel
  const std::size_t dt = e.total().dim();
  const std::size_t db = e.base().dim();
  RatMatrix out(dt, db);
  const RatMatrix qt = e.q().transposed();
  const RatMatrix gram = e.q() * qt;
  for (std::size_t j = 0; j < db; ++j) {
    const auto y = solve_linear(gram, basis_vector(db, j));
    const Vec<Rational> col = qt * *y;
    for (std::size_t i = 0; i < dt; ++i) out(i, j) = col[i];
  }
  return Section{out};
}

/// Random section: standard section plus a random kernel-valued shift.
inline Section random_section(Rng& rng, const Extension& e) {
  Section s = standard_section(e);
  const RatMatrix shift = e.iota() * rng.matrix(e.kernel().dim(), e.base().dim());
  s.map += shift;
  return s;
}

/// Random combination of a basis of invariant maps (strict policy).
inline SymMultiMap random_invariant(Rng& rng, const Extension& e, const Representation& rep, std::size_t p,
                                    InvariancePolicy policy = InvariancePolicy::strict()) {
  const auto basis = invariant_maps(e, rep, p, policy);
  SymMultiMap f(e.kernel_ref(), p, rep.space_dim());
  for (const auto& b : basis) {
    Rational c = rng.rational();
    if (c.is_zero()) c = Rational(1);
    SymMultiMap term = b;
    f += term.scale(c);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Oracles

/// Integral over D_n by iterated univariate integration: t_n from 0 to
/// 1 - t_1 - ... - t_{n-1}, then t_{n-1}, ..., then t_1 from 0 to 1.
MultiPoly antiderivative(const MultiPoly& p, std::size_t var);
MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value);
Rational fubini_simplex_integral(const MultiPoly& p, std::size_t n);

/// (1/p!q!) Alt(a ._m b) computed from the full d^{p+q} table.
template <typename S>
Cochain<S> wedge_by_alt(const Cochain<S>& a, const Cochain<S>& b, const BilinearProduct& m) {
  const std::size_t d = a.source_dim();
  const std::size_t p = a.degree(), q = b.degree();
  RawMultilinear<S> prod(d, p + q, m.out_dim());
  std::size_t total = prod.table.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    IndexTuple t(p + q);
    std::size_t rest = idx;
    for (std::size_t k = p + q; k-- > 0;) {
      t[k] = rest % d;
      rest /= d;
    }
    const IndexTuple ta(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(p));
    const IndexTuple tb(t.begin() + static_cast<std::ptrdiff_t>(p), t.end());
    prod.table[idx] = m.apply(a.evaluate(ta), b.evaluate(tb));
  }
  Cochain<S> out = alt(prod, a.source_ref());
  return out.scale(Rational(1) / (factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q))));
}

/// Betti numbers of g with trivial real coefficients via the Chevalley-Eilenberg
/// boundary on exterior powers, built independently of the cochain code.
std::vector<std::size_t> betti_numbers_by_boundary(const LieAlgebra& g);

/// Basis of the derivations of a product m : V x V -> V, from the linear
/// equations D m(e_i, e_j) = m(D e_i, e_j) + m(e_i, D e_j).
std::vector<RatMatrix> derivations_of(const BilinearProduct& m);
BilinearProduct matrix_multiplication(std::size_t k);

/// f~(a_1 ^_{(x)s} ... ^_{(x)s} a_k) by explicit symmetric tensors and wedges.
RatCochain compose_by_tensors(const SymMultiMap& f, const std::vector<RatCochain>& args);

}  // namespace lieclass::testing
