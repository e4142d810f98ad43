#include "lieclass/characteristic.hpp"

#include "lieclass/simplex.hpp"

namespace lieclass {

namespace {

void check_inputs(const Extension& e, const SymMultiMap& f, const Representation& rep) {
  if (f.source_dim() != e.kernel().dim()) throw DimensionError("symmetric map is not defined on the kernel");
  if (f.target_dim() != rep.space_dim()) throw DimensionError("symmetric map target does not match the module");
  if (rep.algebra() != e.base()) throw DimensionError("module is not over the base algebra");
}

bool invariant_for_all(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections,
                       const Representation& rep, InvariancePolicy::Mode mode) {
  if (mode == InvariancePolicy::Mode::strict_total) return is_invariant(f, e, rep, InvariancePolicy::strict());
  for (const auto& s : sections)
    if (!is_invariant(f, e, rep, InvariancePolicy::for_section(s))) return false;
  return true;
}

}  // namespace

RatCochain f_sigma(const Extension& e, const SymMultiMap& f, const Section& sigma) {
  if (f.degree() == 0) {
    RatCochain c(e.base_ref(), 0, f.target_dim());
    c.at(0) = f.at(0);
    return c;
  }
  const RatCochain r = section_curvature(e, sigma);
  const std::vector<const RatCochain*> args(f.degree(), &r);
  return compose_sym(f, args);
}

PolyCochain delta_integrand(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections) {
  if (sections.size() < 2) throw std::invalid_argument("integrand needs at least two sections");
  const std::size_t n = sections.size() - 1;
  const std::size_t p = f.degree();
  if (p < n) {
    throw DegreeError("symmetric map of degree " + std::to_string(p) + " has fewer slots than the " + std::to_string(n) +
                      " section differences");
  }
  std::vector<PolyCochain> alphas;
  for (std::size_t i = 1; i <= n; ++i) alphas.push_back(to_poly(section_difference(e, sections[0], sections[i])));
  const PolyCochain r_t = param_curvature(e, param_section(e, sections));
  std::vector<const PolyCochain*> args;
  for (const auto& a : alphas) args.push_back(&a);
  for (std::size_t i = n; i < p; ++i) args.push_back(&r_t);
  return compose_sym(f, args);
}

DeltaResult delta_f(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections,
                    const Representation& rep, InvariancePolicy::Mode mode) {
  check_inputs(e, f, rep);
  if (sections.empty()) throw std::invalid_argument("delta_f needs at least one section");
  for (const auto& s : sections) require_section(e, s);
  DeltaResult result;
  result.invariance_warning = !invariant_for_all(e, f, sections, rep, mode);
  if (sections.size() == 1) {
    result.cochain = f_sigma(e, f, sections.front());
    return result;
  }
  const std::size_t n = sections.size() - 1;
  result.cochain =
      delta_integrand(e, f, sections).map_scalars([n](const MultiPoly& p) { return integrate_poly_simplex(p, n); });
  return result;
}

CharacteristicClass chern_weil(const Extension& e, const SymMultiMap& f, const Section& sigma, const Representation& rep,
                               InvariancePolicy::Mode mode) {
  check_inputs(e, f, rep);
  require_section(e, sigma);
  if (!invariant_for_all(e, f, {sigma}, rep, mode)) throw NotInvariant("symmetric map is not invariant");
  const std::size_t p = f.degree();
  CharacteristicClass cls;
  cls.degree = 2 * p;
  cls.representative = f_sigma(e, f, sigma).scale(Rational(1) / factorial(static_cast<unsigned>(p)));
  auto h = std::make_shared<const CohomologySpace>(cohomology_space(e.base_ref(), rep, cls.degree));
  if (!h->is_cocycle(cls.representative)) throw NotClosed("f_sigma is not a cocycle");
  cls.coordinates = h->coordinates(cls.representative);
  cls.h_space = std::move(h);
  return cls;
}

CharacteristicClass secondary_class(const Extension& e, const SymMultiMap& f, const Section& sigma_a,
                                    const Section& sigma_b, const Representation& rep, InvariancePolicy::Mode mode) {
  check_inputs(e, f, rep);
  require_section(e, sigma_a);
  require_section(e, sigma_b);
  const std::size_t p = f.degree();
  if (p == 0) throw DegreeError("secondary classes need a symmetric map of degree >= 1");
  if (!invariant_for_all(e, f, {sigma_a, sigma_b}, rep, mode)) throw NotInvariant("symmetric map is not invariant");
  if (!f_sigma(e, f, sigma_a).is_zero()) throw NotAdmissible("f_sigma does not vanish for the first section");
  if (!f_sigma(e, f, sigma_b).is_zero()) throw NotAdmissible("f_sigma does not vanish for the second section");

  CharacteristicClass cls;
  cls.degree = 2 * p - 1;
  cls.representative = delta_f(e, f, {sigma_a, sigma_b}, rep, mode).cochain;
  auto h = std::make_shared<const CohomologySpace>(cohomology_space(e.base_ref(), rep, cls.degree));
  if (!h->is_cocycle(cls.representative)) throw NotClosed("transgression cochain of an admissible map is not closed");
  cls.coordinates = h->coordinates(cls.representative);
  cls.h_space = std::move(h);
  return cls;
}

const char* to_string(SignMatch s) {
  switch (s) {
    case SignMatch::both: return "both";
    case SignMatch::plus: return "+";
    case SignMatch::minus: return "-";
    case SignMatch::none: return "none";
  }
  return "none";
}

TheoremReport verify_main_theorem(const Extension& e, const SymMultiMap& f, const std::vector<Section>& sections,
                                  const Representation& rep) {
  if (sections.size() < 2) throw std::invalid_argument("the identity needs n >= 1, i.e. at least two sections");
  const std::size_t n = sections.size() - 1;
  const std::size_t k = f.degree();
  if (k < n) throw DegreeError("degree of f must be at least the number of section differences");

  TheoremReport report;
  const DeltaResult full = delta_f(e, f, sections, rep);
  report.invariance_warning = full.invariance_warning;
  report.lhs = ce_differential(full.cochain, rep).scale(Rational(static_cast<long>(k - n + 1)));

  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Section> rest;
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) rest.push_back(sections[j]);
    RatCochain term = delta_f(e, f, rest, rep).cochain;
    if (i % 2 == 1) term = -term;
    if (i == 0) report.rhs = std::move(term);
    else report.rhs += term;
  }

  report.difference = report.lhs - report.rhs;
  if (report.lhs.is_zero() && report.rhs.is_zero()) report.sign = SignMatch::both;
  else if (report.difference.is_zero()) report.sign = SignMatch::plus;
  else if ((report.lhs + report.rhs).is_zero()) report.sign = SignMatch::minus;
  else report.sign = SignMatch::none;
  return report;
}

}  // namespace lieclass
