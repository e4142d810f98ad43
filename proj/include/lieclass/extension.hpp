#pragma once

/**
 * @file extension.hpp
 * @brief Lie algebra extensions 0 -> n -> g^ -> g -> 0 and their sections.
 *
 * The inclusion and projection are arbitrary matrices satisfying exactness;
 * no adapted basis is assumed. Kernel coordinates of vectors lying in the
 * image of the inclusion are recovered with a fixed left inverse.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "lieclass/linalg.hpp"
#include "lieclass/multilinear.hpp"

namespace lieclass {

class Extension {
public:
  Extension() = default;
  /// Stores the data as given; call validate_extension or use make_extension
  /// to check it.
  Extension(LieAlgebra total, LieAlgebra base, LieAlgebra kernel, RatMatrix iota, RatMatrix q);

  [[nodiscard]] const LieAlgebra& total() const { return *total_; }
  [[nodiscard]] const LieAlgebra& base() const { return *base_; }
  [[nodiscard]] const LieAlgebra& kernel() const { return *kernel_; }
  [[nodiscard]] const AlgebraRef& total_ref() const { return total_; }
  [[nodiscard]] const AlgebraRef& base_ref() const { return base_; }
  [[nodiscard]] const AlgebraRef& kernel_ref() const { return kernel_; }
  [[nodiscard]] const RatMatrix& iota() const { return iota_; }
  [[nodiscard]] const RatMatrix& q() const { return q_; }
  [[nodiscard]] const BilinearProduct& total_bracket() const { return total_bracket_; }

  /// Kernel coordinates v with iota v = x. Throws ExactnessViolation if x is
  /// not in the image of iota.
  template <typename S>
  [[nodiscard]] Vec<S> kernel_coordinates(const Vec<S>& x) const {
    if (!left_inverse_) throw ExactnessViolation("inclusion is not injective");
    Vec<S> v = *left_inverse_ * x;
    if (iota_ * v != x) throw ExactnessViolation("value does not lie in the image of the kernel inclusion");
    return v;
  }

private:
  AlgebraRef total_, base_, kernel_;
  RatMatrix iota_, q_;
  std::optional<RatMatrix> left_inverse_;
  BilinearProduct total_bracket_;
};

/// Checks injectivity of iota, surjectivity of q, q iota = 0, dimension
/// count, and that iota and q are Lie algebra homomorphisms with iota(n) an ideal.
ValidationReport validate_extension(const Extension& e);

/// Throws ValidationError naming every failed invariant.
Extension make_extension(LieAlgebra total, LieAlgebra base, LieAlgebra kernel, RatMatrix iota, RatMatrix q);

/// A linear map g -> g^ given by its matrix (dim g^ x dim g).
template <typename S>
struct SectionT {
  Matrix<S> map;
};
using Section = SectionT<Rational>;
using PolySection = SectionT<MultiPoly>;

/// q sigma == id_g exactly. Throws DimensionError on shape mismatch.
template <typename S>
bool validate_section(const Extension& e, const SectionT<S>& sigma) {
  if (sigma.map.rows() != e.total().dim() || sigma.map.cols() != e.base().dim())
    throw DimensionError("section matrix must be dim(total) x dim(base)");
  const auto prod = e.q() * sigma.map;
  const std::size_t n = e.base().dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool ok = i == j ? prod(i, j) == S(1) : prod(i, j).is_zero();
      if (!ok) return false;
    }
  return true;
}

template <typename S>
void require_section(const Extension& e, const SectionT<S>& sigma) {
  if (!validate_section(e, sigma)) throw InvalidSection("map is not a section of the projection");
}

/// sigma as a 1-cochain on g with values in g^.
template <typename S>
Cochain<S> section_cochain(const Extension& e, const SectionT<S>& sigma) {
  return one_cochain_from_matrix(e.base_ref(), sigma.map);
}

/// R(x,y) = [sigma x, sigma y] - sigma [x,y], in kernel coordinates.
template <typename S>
Cochain<S> section_curvature(const Extension& e, const SectionT<S>& sigma) {
  require_section(e, sigma);
  const Cochain<S> r = curvature(section_cochain(e, sigma), e.total_bracket());
  Cochain<S> out(e.base_ref(), 2, e.kernel().dim());
  for (std::size_t k = 0; k < r.size(); ++k) out.at(k) = e.kernel_coordinates(r.at(k));
  return out;
}

/// sigma_b - sigma_a as a 1-cochain on g with values in n.
template <typename S>
Cochain<S> section_difference(const Extension& e, const SectionT<S>& sigma_a, const SectionT<S>& sigma_b) {
  require_section(e, sigma_a);
  require_section(e, sigma_b);
  Cochain<S> out(e.base_ref(), 1, e.kernel().dim());
  for (std::size_t j = 0; j < e.base().dim(); ++j) {
    Vec<S> d = sigma_b.map.column(j);
    const Vec<S> a = sigma_a.map.column(j);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[i];
    out.at(j) = e.kernel_coordinates(d);
  }
  return out;
}

/// S(x) = ad(sigma x) restricted to the kernel, in kernel coordinates.
template <typename S>
LinearAction<S> s_from_section(const Extension& e, const SectionT<S>& sigma) {
  require_section(e, sigma);
  const std::size_t dn = e.kernel().dim();
  LinearAction<S> s{e.base_ref(), dn, {}};
  for (std::size_t x = 0; x < e.base().dim(); ++x) {
    const Vec<S> sx = sigma.map.column(x);
    Matrix<S> m(dn, dn);
    for (std::size_t a = 0; a < dn; ++a) {
      Vec<S> ia(e.total().dim());
      for (std::size_t r = 0; r < ia.size(); ++r) ia[r] = S(e.iota()(r, a));
      const Vec<S> col = e.kernel_coordinates(e.total().bracket(sx, ia));
      for (std::size_t b = 0; b < dn; ++b) m(b, a) = col[b];
    }
    s.matrices.push_back(std::move(m));
  }
  return s;
}

struct InvariancePolicy {
  enum class Mode { section, strict_total };
  Mode mode = Mode::section;
  Section section;  ///< used when mode == section

  static InvariancePolicy for_section(Section s) { return {Mode::section, std::move(s)}; }
  static InvariancePolicy strict() { return {Mode::strict_total, {}}; }
};

/// Pairs (S, rho) over which invariance is tested: x.f(y..) = sum_i f(.., S y_i, ..)
/// with x acting on V through rho.
struct InvarianceGenerator {
  RatMatrix kernel_action;
  RatMatrix module_action;
};
std::vector<InvarianceGenerator> invariance_generators(const Extension& e, const Representation& rep,
                                                       const InvariancePolicy& policy);

/// Whether f in Sym^p(n, V) satisfies the invariance condition of `policy`.
bool is_invariant(const SymMultiMap& f, const Extension& e, const Representation& rep, const InvariancePolicy& policy);

/// Basis of the invariant symmetric p-linear maps n^p -> V under `policy`.
std::vector<SymMultiMap> invariant_maps(const Extension& e, const Representation& rep, std::size_t p,
                                        const InvariancePolicy& policy);

/// sigma_t = (1 - t_1 - ... - t_n) sigma_0 + sum_i t_i sigma_i, as a section with
/// polynomial entries in t_1..t_n. Throws InvalidSection if an input is not a
/// section, std::invalid_argument if fewer than two sections are given.
PolySection param_section(const Extension& e, const std::vector<Section>& sections);

/// Curvature of a polynomial section, in kernel coordinates.
PolyCochain param_curvature(const Extension& e, const PolySection& sigma_t);

/// Substitutes a point for the simplex parameters.
Section specialize(const PolySection& sigma_t, const std::vector<Rational>& point);
RatCochain specialize(const PolyCochain& c, const std::vector<Rational>& point);

}  // namespace lieclass
