#include "lieclass/extension.hpp"

#include <algorithm>

namespace lieclass {

Extension::Extension(LieAlgebra total, LieAlgebra base, LieAlgebra kernel, RatMatrix iota, RatMatrix q)
    : total_(share(total)),
      base_(share(base)),
      kernel_(share(kernel)),
      iota_(std::move(iota)),
      q_(std::move(q)),
      total_bracket_(lie_bracket_product(*total_)) {
  if (iota_.rows() == total_->dim() && iota_.cols() == kernel_->dim()) left_inverse_ = left_inverse(iota_);
}

ValidationReport validate_extension(const Extension& e) {
  ValidationReport report;
  const std::size_t dt = e.total().dim();
  const std::size_t db = e.base().dim();
  const std::size_t dn = e.kernel().dim();
  if (e.iota().rows() != dt || e.iota().cols() != dn) {
    report.fail("iota must be " + std::to_string(dt) + "x" + std::to_string(dn));
  }
  if (e.q().rows() != db || e.q().cols() != dt) {
    report.fail("q must be " + std::to_string(db) + "x" + std::to_string(dt));
  }
  if (!report.ok()) return report;

  if (rank(e.iota()) != dn) report.fail("iota is not injective");
  if (rank(e.q()) != db) report.fail("q is not surjective");
  if (dn + db != dt) report.fail("dim kernel + dim base != dim total");
  if (!(e.q() * e.iota()).is_zero()) report.fail("q o iota != 0");

  for (std::size_t a = 0; a < dn; ++a)
    for (std::size_t b = a + 1; b < dn; ++b) {
      const Vec<Rational> lhs = e.iota() * e.kernel().basis_bracket(a, b);
      const Vec<Rational> rhs = e.total().bracket(e.iota().column(a), e.iota().column(b));
      if (lhs != rhs) {
        report.fail("iota is not a homomorphism on (" + e.kernel().basis_names()[a] + "," + e.kernel().basis_names()[b] + ")");
      }
    }
  for (std::size_t x = 0; x < dt; ++x)
    for (std::size_t y = x + 1; y < dt; ++y) {
      const Vec<Rational> lhs = e.q() * e.total().basis_bracket(x, y);
      const Vec<Rational> rhs = e.base().bracket(e.q().column(x), e.q().column(y));
      if (lhs != rhs) {
        report.fail("q is not a homomorphism on (" + e.total().basis_names()[x] + "," + e.total().basis_names()[y] + ")");
      }
    }
  for (std::size_t x = 0; x < dt; ++x)
    for (std::size_t a = 0; a < dn; ++a) {
      const Vec<Rational> v = e.total().bracket(basis_vector(dt, x), e.iota().column(a));
      if (!solve_linear(e.iota(), v)) {
        report.fail("image of iota is not an ideal: [" + e.total().basis_names()[x] + ", iota(" +
                    e.kernel().basis_names()[a] + ")] leaves it");
      }
    }
  return report;
}

Extension make_extension(LieAlgebra total, LieAlgebra base, LieAlgebra kernel, RatMatrix iota, RatMatrix q) {
  Extension e(std::move(total), std::move(base), std::move(kernel), std::move(iota), std::move(q));
  if (auto report = validate_extension(e); !report.ok()) throw ValidationError(report.summary());
  return e;
}

std::vector<InvarianceGenerator> invariance_generators(const Extension& e, const Representation& rep,
                                                       const InvariancePolicy& policy) {
  if (rep.algebra().dim() != e.base().dim()) throw DimensionError("representation is not a module of the base algebra");
  std::vector<InvarianceGenerator> gens;
  const std::size_t m = rep.space_dim();
  if (policy.mode == InvariancePolicy::Mode::section) {
    const LinearAction<Rational> s = s_from_section(e, policy.section);
    for (std::size_t x = 0; x < e.base().dim(); ++x) gens.push_back({s.matrices[x], rep.action(x)});
    return gens;
  }
  const std::size_t dt = e.total().dim();
  const std::size_t dn = e.kernel().dim();
  for (std::size_t x = 0; x < dt; ++x) {
    RatMatrix sx(dn, dn);
    for (std::size_t a = 0; a < dn; ++a) {
      const Vec<Rational> col = e.kernel_coordinates(e.total().bracket(basis_vector(dt, x), e.iota().column(a)));
      for (std::size_t b = 0; b < dn; ++b) sx(b, a) = col[b];
    }
    RatMatrix rho(m, m);
    for (std::size_t j = 0; j < e.base().dim(); ++j) {
      const Rational& c = e.q()(j, x);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) rho(a, b) += c * rep.action(j)(a, b);
    }
    gens.push_back({std::move(sx), std::move(rho)});
  }
  return gens;
}

namespace {

void check_map_shape(const SymMultiMap& f, const Extension& e, const Representation& rep) {
  if (f.source_dim() != e.kernel().dim()) throw DimensionError("symmetric map is not defined on the kernel");
  if (f.target_dim() != rep.space_dim()) throw DimensionError("symmetric map target does not match the module");
}

}  // namespace

bool is_invariant(const SymMultiMap& f, const Extension& e, const Representation& rep, const InvariancePolicy& policy) {
  check_map_shape(f, e, rep);
  const std::size_t p = f.degree();
  const std::size_t dn = e.kernel().dim();
  const auto tuples = f.tuples();
  for (const auto& gen : invariance_generators(e, rep, policy)) {
    for (const auto& y : tuples) {
      Vec<Rational> lhs = gen.module_action * f.evaluate(y);
      for (std::size_t i = 0; i < p; ++i) {
        IndexTuple z = y;
        for (std::size_t c = 0; c < dn; ++c) {
          const Rational& s = gen.kernel_action(c, y[i]);
          if (s.is_zero()) continue;
          z[i] = c;
          const Vec<Rational>& v = f.evaluate(z);
          for (std::size_t a = 0; a < lhs.size(); ++a) lhs[a] -= s * v[a];
        }
      }
      if (!is_zero_vector(lhs)) return false;
    }
  }
  return true;
}

std::vector<SymMultiMap> invariant_maps(const Extension& e, const Representation& rep, std::size_t p,
                                        const InvariancePolicy& policy) {
  const std::size_t dn = e.kernel().dim();
  const std::size_t m = rep.space_dim();
  const SymMultiMap shape(e.kernel_ref(), p, m);
  const auto tuples = shape.tuples();
  const std::size_t unknowns = tuples.size() * m;
  auto unknown = [&](const IndexTuple& y, std::size_t a) {
    IndexTuple s = y;
    std::sort(s.begin(), s.end());
    return nondecreasing_rank(s, dn) * m + a;
  };

  std::vector<Vec<Rational>> rows;
  for (const auto& gen : invariance_generators(e, rep, policy)) {
    for (const auto& y : tuples)
      for (std::size_t a = 0; a < m; ++a) {
        Vec<Rational> row(unknowns);
        for (std::size_t b = 0; b < m; ++b) row[unknown(y, b)] += gen.module_action(a, b);
        for (std::size_t i = 0; i < p; ++i) {
          IndexTuple z = y;
          for (std::size_t c = 0; c < dn; ++c) {
            const Rational& s = gen.kernel_action(c, y[i]);
            if (s.is_zero()) continue;
            z[i] = c;
            row[unknown(z, a)] -= s;
          }
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
  }
  RatMatrix system(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];

  std::vector<SymMultiMap> basis;
  for (const auto& v : nullspace(system)) {
    SymMultiMap f = shape;
    for (std::size_t r = 0; r < tuples.size(); ++r)
      for (std::size_t a = 0; a < m; ++a) f.at(r)[a] = v[r * m + a];
    basis.push_back(std::move(f));
  }
  return basis;
}

PolySection param_section(const Extension& e, const std::vector<Section>& sections) {
  if (sections.size() < 2) throw std::invalid_argument("param_section needs at least two sections");
  for (const auto& s : sections) require_section(e, s);
  const std::size_t n = sections.size() - 1;
  MultiPoly t0(Rational(1));
  std::vector<MultiPoly> t;
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back(MultiPoly::variable(n, i));
    t0 -= t.back();
  }
  PolySection out{PolyMatrix(e.total().dim(), e.base().dim())};
  for (std::size_t r = 0; r < out.map.rows(); ++r)
    for (std::size_t c = 0; c < out.map.cols(); ++c) {
      MultiPoly v = t0 * sections[0].map(r, c);
      for (std::size_t i = 0; i < n; ++i) v += t[i] * sections[i + 1].map(r, c);
      out.map(r, c) = v.widened(n);
    }
  return out;
}

PolyCochain param_curvature(const Extension& e, const PolySection& sigma_t) { return section_curvature(e, sigma_t); }

Section specialize(const PolySection& sigma_t, const std::vector<Rational>& point) {
  Section out{RatMatrix(sigma_t.map.rows(), sigma_t.map.cols())};
  for (std::size_t r = 0; r < out.map.rows(); ++r)
    for (std::size_t c = 0; c < out.map.cols(); ++c) out.map(r, c) = sigma_t.map(r, c).evaluate(point);
  return out;
}

RatCochain specialize(const PolyCochain& c, const std::vector<Rational>& point) {
  return c.map_scalars([&](const MultiPoly& p) { return p.evaluate(point); });
}

}  // namespace lieclass
