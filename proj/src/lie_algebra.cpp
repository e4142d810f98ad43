#include "lieclass/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace lieclass {

JacobiReport check_jacobi(const StructureConstants& c) {
  const std::size_t n = c.dim();
  // [[e_a,e_b],e_d] coordinates
  auto nested = [&](std::size_t a, std::size_t b, std::size_t d, Vec<Rational>& acc) {
    for (std::size_t m = 0; m < n; ++m) {
      const Rational& ab = c(a, b, m);
      if (ab.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& md = c(m, d, k);
        if (!md.is_zero()) acc[k] += ab * md;
      }
    }
  };
  JacobiReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<Rational> sum(n);
        nested(i, j, k, sum);
        nested(j, k, i, sum);
        nested(k, i, j, sum);
        if (!is_zero_vector(sum)) report.violations.push_back({{i, j, k}, std::move(sum)});
      }
  return report;
}

ValidationReport check_antisymmetry(const StructureConstants& c) {
  ValidationReport report;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != -c(j, i, k)) {
          report.fail("antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")");
        }
      }
  return report;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, StructureConstants constants)
    : names_(std::move(basis_names)), c_(std::move(constants)) {
  if (c_.dim() != names_.size()) {
    throw ValidationError("structure constants have dimension " + std::to_string(c_.dim()) + " but " +
                          std::to_string(names_.size()) + " basis names were given");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw ValidationError("duplicate basis name '" + name + "'");
  }
  if (auto anti = check_antisymmetry(c_); !anti.ok()) throw ValidationError(anti.summary());
  if (auto jac = check_jacobi(c_); !jac.ok()) {
    const auto& t = jac.violations.front().triple;
    throw ValidationError("Jacobi identity fails on triple (" + names_[t[0]] + "," + names_[t[1]] + "," +
                          names_[t[2]] + ")");
  }
}

std::size_t LieAlgebra::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!c_(i, j, k).is_zero()) return false;
  return true;
}

RatMatrix LieAlgebra::ad_basis(std::size_t i) const {
  RatMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c_(i, j, k);
  return m;
}

bool is_derivation(const LieAlgebra& algebra, const RatMatrix& d) {
  const std::size_t n = algebra.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("derivation matrix must be dim x dim");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec<Rational> lhs = d * algebra.basis_bracket(i, j);
      const Vec<Rational> dx = d.column(i);
      const Vec<Rational> dy = d.column(j);
      Vec<Rational> rhs = algebra.bracket(dx, basis_vector(n, j));
      const Vec<Rational> second = algebra.bracket(basis_vector(n, i), dy);
      for (std::size_t k = 0; k < n; ++k) rhs[k] += second[k];
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebra semidirect_product(const LieAlgebra& h, const LieAlgebra& a, const std::vector<RatMatrix>& action) {
  const std::size_t dh = h.dim();
  const std::size_t da = a.dim();
  if (action.size() != da) throw ValidationError("semidirect product needs one derivation per basis element of the acting algebra");
  for (std::size_t r = 0; r < da; ++r) {
    if (action[r].rows() != dh || action[r].cols() != dh) throw ValidationError("action matrix has wrong shape");
    if (!is_derivation(h, action[r])) {
      throw ValidationError("action of '" + a.basis_names()[r] + "' is not a derivation");
    }
  }
  // D_{[r,s]} = [D_r, D_s]
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t s = r + 1; s < da; ++s) {
      RatMatrix lhs(dh, dh);
      for (std::size_t k = 0; k < da; ++k) {
        const Rational& c = a.structure_constant(r, s, k);
        if (c.is_zero()) continue;
        for (std::size_t x = 0; x < dh; ++x)
          for (std::size_t y = 0; y < dh; ++y) lhs(x, y) += c * action[k](x, y);
      }
      if (lhs != action[r] * action[s] - action[s] * action[r]) {
        throw ValidationError("action is not a representation on the pair (" + a.basis_names()[r] + "," +
                              a.basis_names()[s] + ")");
      }
    }

  const std::size_t n = dh + da;
  StructureConstants c(n);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < dh; ++j)
      for (std::size_t k = 0; k < dh; ++k) c(i, j, k) = h.structure_constant(i, j, k);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t s = 0; s < da; ++s)
      for (std::size_t k = 0; k < da; ++k) c(dh + r, dh + s, dh + k) = a.structure_constant(r, s, k);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t y = 0; y < dh; ++y)
      for (std::size_t k = 0; k < dh; ++k) c.set_antisymmetric(dh + r, y, k, action[r](k, y));

  std::vector<std::string> names = h.basis_names();
  for (std::string name : a.basis_names()) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(std::move(name));
  }
  return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<RatMatrix> zero(b.dim(), RatMatrix(a.dim(), a.dim()));
  return semidirect_product(a, b, zero);
}

LieAlgebra abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), StructureConstants(dim));
}

LieAlgebra heisenberg3() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 2, Rational(1));
  return LieAlgebra({"p", "q", "z"}, std::move(c));
}

LieAlgebra heisenberg(std::size_t pairs) {
  const std::size_t n = 2 * pairs + 1;
  StructureConstants c(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pairs; ++i) names.push_back("p" + std::to_string(i + 1));
  for (std::size_t i = 0; i < pairs; ++i) names.push_back("q" + std::to_string(i + 1));
  names.emplace_back("z");
  for (std::size_t i = 0; i < pairs; ++i) c.set_antisymmetric(i, pairs + i, n - 1, Rational(1));
  return LieAlgebra(std::move(names), std::move(c));
}

RatMatrix oscillator_derivation() {
  RatMatrix d(3, 3);
  d(1, 0) = Rational(1);   // Dp = q
  d(0, 1) = Rational(-1);  // Dq = -p
  return d;
}

LieAlgebra oscillator() {
  StructureConstants line(1);
  LieAlgebra r({"w"}, std::move(line));
  return semidirect_product(heisenberg3(), r, {oscillator_derivation()});
}

LieAlgebra sl2() {
  StructureConstants c(3);
  c.set_antisymmetric(0, 1, 1, Rational(2));
  c.set_antisymmetric(0, 2, 2, Rational(-2));
  c.set_antisymmetric(1, 2, 0, Rational(1));
  return LieAlgebra({"h", "e", "f"}, std::move(c));
}

LieAlgebra standard_algebra(StandardAlgebra which, std::size_t abelian_dim) {
  switch (which) {
    case StandardAlgebra::abelian: return abelian(abelian_dim);
    case StandardAlgebra::heisenberg3: return heisenberg3();
    case StandardAlgebra::oscillator: return oscillator();
  }
  throw std::invalid_argument("unknown standard algebra");
}

}  // namespace lieclass
