#include "doctest.h"
#include "support.hpp"

using namespace lieclass;
using namespace lieclass::testing;

namespace {

Vec<Rational> e(std::size_t dim, std::size_t i) { return basis_vector<Rational>(dim, i); }

}  // namespace

TEST_CASE("jacobi checks") {
  CHECK(check_jacobi(abelian(3).constants()).ok());
  CHECK(check_jacobi(heisenberg3().constants()).ok());

  StructureConstants bad(3);
  bad.set_antisymmetric(0, 1, 0, Rational(1));  // [p,q] = p
  bad.set_antisymmetric(0, 2, 1, Rational(1));  // [p,z] = q
  const auto report = check_jacobi(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().triple == std::array<std::size_t, 3>{0, 1, 2});
  CHECK_FALSE(is_zero_vector(report.violations.front().cyclic_sum));
  CHECK_THROWS_AS(LieAlgebra({"p", "q", "z"}, bad), ValidationError);
  try {
    LieAlgebra({"p", "q", "z"}, bad);
  } catch (const ValidationError& err) {
    CHECK(std::string(err.what()).find("(p,q,z)") != std::string::npos);
  }
}

TEST_CASE("construction rejects malformed data") {
  StructureConstants c(2);
  c(0, 1, 0) = Rational(1);  // no antisymmetric mate
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, c), ValidationError);
  CHECK_THROWS_AS(LieAlgebra({"a", "a"}, StructureConstants(2)), ValidationError);
  CHECK_THROWS_AS(LieAlgebra({"a"}, StructureConstants(2)), ValidationError);
}

TEST_CASE("brackets") {
  const LieAlgebra h = heisenberg3();
  CHECK(h.bracket(e(3, 0), e(3, 1)) == e(3, 2));
  CHECK(h.bracket(e(3, 1), e(3, 0)) == Vec<Rational>{Rational(0), Rational(0), Rational(-1)});
  const LieAlgebra osc = oscillator();
  CHECK(osc.bracket(e(4, 3), e(4, 0)) == e(4, 1));
  CHECK(osc.bracket(e(4, 3), e(4, 1)) == Vec<Rational>{Rational(-1), Rational(0), Rational(0), Rational(0)});
  CHECK(is_zero_vector(osc.bracket(e(4, 3), e(4, 2))));
  CHECK_THROWS_AS((void)h.bracket(e(2, 0), e(3, 0)), DimensionError);

  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const LieAlgebra g = random_algebra(rng);
    const auto x = rng.vector(g.dim()), y = rng.vector(g.dim()), z = rng.vector(g.dim());
    const Rational a = rng.rational();
    CHECK(is_zero_vector(g.bracket(x, x)));
    Vec<Rational> ax_plus_y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) ax_plus_y[k] = a * x[k] + y[k];
    Vec<Rational> lhs = g.bracket(ax_plus_y, z), rhs = g.bracket(x, z), yz = g.bracket(y, z);
    for (std::size_t k = 0; k < x.size(); ++k) rhs[k] = a * rhs[k] + yz[k];
    CHECK(lhs == rhs);
    Vec<Rational> jac = g.bracket(g.bracket(x, y), z);
    const Vec<Rational> b = g.bracket(g.bracket(y, z), x), c = g.bracket(g.bracket(z, x), y);
    for (std::size_t k = 0; k < x.size(); ++k) jac[k] += b[k] + c[k];
    CHECK(is_zero_vector(jac));
  }
}

TEST_CASE("derivations") {
  const LieAlgebra h = heisenberg3();
  CHECK(is_derivation(h, oscillator_derivation()));
  CHECK_FALSE(is_derivation(h, RatMatrix::identity(3)));
  Rng rng(22);
  CHECK(is_derivation(abelian(3), rng.matrix(3, 3)));
  CHECK_THROWS_AS(is_derivation(h, RatMatrix::identity(2)), DimensionError);
}

TEST_CASE("semidirect products") {
  const LieAlgebra osc = semidirect_product(heisenberg3(), abelian(1), {oscillator_derivation()});
  CHECK(osc.constants() == oscillator().constants());
  CHECK(oscillator().basis_names() == std::vector<std::string>{"p", "q", "z", "w"});
  // ad(w) restricted to h3 is D
  const RatMatrix adw = oscillator().ad_basis(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(adw(i, j) == oscillator_derivation()(i, j));

  const LieAlgebra plain = semidirect_product(heisenberg3(), abelian(2), {RatMatrix(3, 3), RatMatrix(3, 3)});
  CHECK(plain.constants() == direct_sum(heisenberg3(), abelian(2)).constants());

  const LieAlgebra solv = semidirect_product(abelian(2), abelian(1), {RatMatrix::from_rows({{0, 1}, {0, 0}})});
  CHECK(check_jacobi(solv.constants()).ok());
  CHECK(solv.bracket(e(3, 2), e(3, 1)) == e(3, 0));

  CHECK_THROWS_AS(semidirect_product(heisenberg3(), abelian(1), {RatMatrix::identity(3)}), ValidationError);
  // two commuting directions must act by commuting derivations
  CHECK_THROWS_AS(semidirect_product(abelian(2), abelian(2),
                                     {RatMatrix::from_rows({{0, 1}, {0, 0}}), RatMatrix::from_rows({{0, 0}, {1, 0}})}),
                  ValidationError);
}

TEST_CASE("standard algebras") {
  CHECK(abelian(2).is_abelian());
  const LieAlgebra h = heisenberg3();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (!h.structure_constant(i, j, k).is_zero()) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(h.structure_constant(0, 1, 2) == Rational(1));
  CHECK(check_jacobi(oscillator().constants()).ok());
  CHECK(standard_algebra(StandardAlgebra::heisenberg3) == heisenberg3());
  CHECK(standard_algebra(StandardAlgebra::abelian, 4) == abelian(4));
  CHECK(check_jacobi(heisenberg(3).constants()).ok());
  CHECK(check_jacobi(sl2().constants()).ok());
}

TEST_CASE("representations") {
  CHECK(check_representation(trivial_representation(oscillator(), 2)).ok());
  CHECK(check_representation(adjoint_representation(heisenberg3())).ok());
  Rng rng(23);
  for (int i = 0; i < 20; ++i) CHECK(check_representation(adjoint_representation(random_algebra(rng))).ok());

  const std::vector<RatMatrix> bad = {RatMatrix::from_rows({{0, 1}, {0, 0}}), RatMatrix::from_rows({{0, 0}, {1, 0}}),
                                      RatMatrix(2, 2)};
  CHECK_FALSE(check_representation(Representation::unchecked(heisenberg3(), 2, bad)).ok());
  CHECK_THROWS_AS(Representation(heisenberg3(), 2, bad), ValidationError);
  CHECK(trivial_representation(sl2()).is_trivial());
}
