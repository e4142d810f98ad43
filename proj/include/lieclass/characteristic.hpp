#pragma once

/**
 * @file characteristic.hpp
 * @brief Primary (Chern-Weil/Lecomte) and secondary characteristic classes of
 * Lie algebra extensions.
 *
 * For sections s_0..s_n and an invariant f in Sym^p(n, V), the relative
 * Bott-Lecomte cochain is
 *
 *   Delta_f(s_0..s_n) = integral over D_n of f~(a_1 ^ .. ^ a_n ^ R_t ^ .. ^ R_t),
 *
 * with a_i = s_i - s_0, s_t = t_0 s_0 + .. + t_n s_n (t_0 = 1 - t_1 - .. - t_n)
 * and R_t its curvature. It has degree 2p - n. For n = 0 it is f_s itself
 * (integration over a point).
 */

#include <cstddef>
#include <memory>
#include <vector>

#include "lieclass/cohomology.hpp"
#include "lieclass/extension.hpp"

namespace lieclass {

struct DeltaResult {
  RatCochain cochain;
  /// Set when f fails the invariance condition for one of the sections used.
  bool invariance_warning = false;
};

/// f_sigma = f~(R_sigma ^ .. ^ R_sigma), a 2p-cochain on the base.
RatCochain f_sigma(const Extension& e, const SymMultiMap& f, const Section& sigma);

/// Relative Bott-Lecomte cochain. Throws DegreeError if p < n, InvalidSection
/// for a non-section, DimensionError on shape mismatch.
DeltaResult delta_f(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections,
                    const Representation& rep, InvariancePolicy::Mode mode = InvariancePolicy::Mode::section);

/// The polynomial integrand of delta_f before integration (n >= 1).
PolyCochain delta_integrand(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections);

struct CharacteristicClass {
  std::size_t degree = 0;
  RatCochain representative;
  Vec<Rational> coordinates;
  std::shared_ptr<const CohomologySpace> h_space;
};

/// (1/p!) [f_sigma] in H^{2p}(g, V). Throws NotInvariant if f fails the
/// policy, NotClosed if the representative is not a cocycle.
CharacteristicClass chern_weil(const Extension& e, const SymMultiMap& f, const Section& sigma, const Representation& rep,
                               InvariancePolicy::Mode mode = InvariancePolicy::Mode::section);

/// [Delta_f(sigma_a, sigma_b)] in H^{2p-1}(g, V). Throws NotAdmissible if
/// f_sigma does not vanish for either section, NotInvariant, DegreeError if p == 0.
CharacteristicClass secondary_class(const Extension& e, const SymMultiMap& f, const Section& sigma_a,
                                    const Section& sigma_b, const Representation& rep,
                                    InvariancePolicy::Mode mode = InvariancePolicy::Mode::section);

/// How the two sides of the transgression identity compare.
enum class SignMatch {
  both,   ///< both sides vanish
  plus,   ///< lhs == rhs != 0
  minus,  ///< lhs == -rhs != 0
  none,
};
const char* to_string(SignMatch s);

struct TheoremReport {
  RatCochain lhs;         ///< (k - n + 1) d Delta_f(s_0..s_n)
  RatCochain rhs;         ///< sum_i (-1)^i Delta_f(s_0..^s_i..s_n)
  RatCochain difference;  ///< lhs - rhs
  SignMatch sign = SignMatch::none;
  bool invariance_warning = false;
  [[nodiscard]] bool equal() const { return sign != SignMatch::none; }
};

/// Evaluates both sides of (k-n+1) d Delta_f(s_0..s_n) = sum_i (-1)^i Delta_f(..^s_i..).
/// Needs n >= 1 and k >= n.
TheoremReport verify_main_theorem(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections,
                                  const Representation& rep);

}  // namespace lieclass
