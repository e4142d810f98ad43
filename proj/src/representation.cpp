#include "lieclass/representation.hpp"

namespace lieclass {

Representation Representation::unchecked(LieAlgebra algebra, std::size_t space_dim, std::vector<RatMatrix> action) {
  Representation rep;
  rep.algebra_ = std::move(algebra);
  rep.space_dim_ = space_dim;
  rep.action_ = std::move(action);
  return rep;
}

Representation::Representation(LieAlgebra algebra, std::size_t space_dim, std::vector<RatMatrix> action)
    : algebra_(std::move(algebra)), space_dim_(space_dim), action_(std::move(action)) {
  if (auto report = check_representation(*this); !report.ok()) throw ValidationError(report.summary());
}

bool Representation::is_trivial() const {
  for (const auto& m : action_)
    if (!m.is_zero()) return false;
  return true;
}

ValidationReport check_representation(const Representation& rep) {
  ValidationReport report;
  const LieAlgebra& g = rep.algebra();
  const std::size_t m = rep.space_dim();
  if (rep.action().size() != g.dim()) {
    report.fail("representation needs " + std::to_string(g.dim()) + " action matrices, got " +
                std::to_string(rep.action().size()));
    return report;
  }
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (rep.action(i).rows() != m || rep.action(i).cols() != m) {
      report.fail("action matrix of '" + g.basis_names()[i] + "' is not " + std::to_string(m) + "x" +
                  std::to_string(m));
    }
  }
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      RatMatrix lhs(m, m);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& c = g.structure_constant(i, j, k);
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) lhs(a, b) += c * rep.action(k)(a, b);
      }
      const RatMatrix rhs = rep.action(i) * rep.action(j) - rep.action(j) * rep.action(i);
      if (lhs != rhs) {
        report.fail("rho([" + g.basis_names()[i] + "," + g.basis_names()[j] + "]) != [rho(" + g.basis_names()[i] +
                    "),rho(" + g.basis_names()[j] + ")]");
      }
    }
  return report;
}

Representation trivial_representation(const LieAlgebra& algebra, std::size_t space_dim) {
  return Representation(algebra, space_dim, std::vector<RatMatrix>(algebra.dim(), RatMatrix(space_dim, space_dim)));
}

Representation adjoint_representation(const LieAlgebra& algebra) {
  std::vector<RatMatrix> action;
  for (std::size_t i = 0; i < algebra.dim(); ++i) action.push_back(algebra.ad_basis(i));
  return Representation(algebra, algebra.dim(), std::move(action));
}

}  // namespace lieclass
