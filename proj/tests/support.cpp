#include "support.hpp"

#include <algorithm>

namespace lieclass::testing {

MultiPoly antiderivative(const MultiPoly& p, std::size_t var) {
  std::vector<std::pair<Exponents, Rational>> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.resize(std::max(f.size(), var + 1), 0);
    f[var] += 1;
    out.emplace_back(f, c / Rational(static_cast<long>(f[var])));
  }
  return MultiPoly::from_terms(std::max(p.nvars(), var + 1), out);
}

MultiPoly substitute(const MultiPoly& p, std::size_t var, const MultiPoly& value) {
  MultiPoly out(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    unsigned power = 0;
    if (var < rest.size()) {
      power = rest[var];
      rest[var] = 0;
    }
    MultiPoly term = MultiPoly::from_terms(rest.size(), {{rest, c}});
    for (unsigned k = 0; k < power; ++k) term = term * value;
    out = out + term;
  }
  return out;
}

Rational fubini_simplex_integral(const MultiPoly& p, std::size_t n) {
  MultiPoly acc = p;
  for (std::size_t k = n; k-- > 0;) {
    // upper limit 1 - t_1 - ... - t_{k}; variable k is t_{k+1}
    MultiPoly upper(Rational(1));
    for (std::size_t j = 0; j < k; ++j) upper = upper - MultiPoly::variable(n, j);
    const MultiPoly anti = antiderivative(acc, k);
    acc = substitute(anti, k, upper) - substitute(anti, k, MultiPoly(Rational(0)));
  }
  if (!acc.is_constant()) throw std::logic_error("iterated integral left free variables");
  return acc.constant_value();
}

std::vector<std::size_t> betti_numbers_by_boundary(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  // rank of the boundary Lambda^p -> Lambda^{p-1}, p = 0..d+1
  std::vector<std::size_t> boundary_rank(d + 2, 0);
  for (std::size_t p = 2; p <= d; ++p) {
    const auto src = increasing_tuples(d, p);
    const auto dst = increasing_tuples(d, p - 1);
    RatMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const IndexTuple& x = src[c];
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
          IndexTuple rest;
          for (std::size_t k = 0; k < p; ++k)
            if (k != i && k != j) rest.push_back(x[k]);
          const Rational sign((i + j) % 2 == 0 ? 1 : -1);
          for (std::size_t k = 0; k < d; ++k) {
            const Rational& coeff = g.structure_constant(x[i], x[j], k);
            if (coeff.is_zero()) continue;
            IndexTuple t{k};
            t.insert(t.end(), rest.begin(), rest.end());
            auto s = sort_alternating(t);
            if (!s) continue;
            const auto row = std::find(dst.begin(), dst.end(), s->sorted) - dst.begin();
            m(static_cast<std::size_t>(row), c) += sign * coeff * Rational(s->sign);
          }
        }
    }
    boundary_rank[p] = rank(m);
  }
  std::vector<std::size_t> betti;
  for (std::size_t p = 0; p <= d; ++p)
    betti.push_back(binomial(d, p) - boundary_rank[p] - boundary_rank[p + 1]);
  return betti;
}

RatCochain compose_by_tensors(const SymMultiMap& f, const std::vector<RatCochain>& args) {
  const std::size_t n = f.source_dim();
  RatCochain acc = args.front();  // S^1(n) = n in the monomial basis
  for (std::size_t k = 1; k < args.size(); ++k)
    acc = wedge_by_alt(acc, args[k], symmetric_tensor_product(n, k, 1));
  const auto monomials = nondecreasing_tuples(n, args.size());
  RatCochain out(acc.source_ref(), acc.degree(), f.target_dim());
  for (std::size_t r = 0; r < acc.size(); ++r)
    for (std::size_t mono = 0; mono < monomials.size(); ++mono) {
      const Rational& c = acc.at(r)[mono];
      if (c.is_zero()) continue;
      const Vec<Rational>& v = f.evaluate(monomials[mono]);
      for (std::size_t a = 0; a < v.size(); ++a) out.at(r)[a] += c * v[a];
    }
  return out;
}

std::vector<RatMatrix> derivations_of(const BilinearProduct& m) {
  const std::size_t n = m.out_dim();
  RatMatrix eq(n * n * n, n * n);  // unknown D(r, c) at column r * n + c
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        for (std::size_t l = 0; l < n; ++l) {
          eq(row, k * n + l) += m.coefficient(i, j, l);   // (D m(e_i,e_j))_k
          eq(row, l * n + i) -= m.coefficient(l, j, k);   // m(D e_i, e_j)_k
          eq(row, l * n + j) -= m.coefficient(i, l, k);   // m(e_i, D e_j)_k
        }
      }
  std::vector<RatMatrix> out;
  for (const auto& v : nullspace(eq)) {
    RatMatrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.push_back(d);
  }
  return out;
}

BilinearProduct matrix_multiplication(std::size_t k) {
  BilinearProduct m(k * k, k * k, k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) m.add(a * k + b, b * k + c, a * k + c, Rational(1));
  return m;
}

}  // namespace lieclass::testing
