#include "lieclass/cohomology.hpp"

namespace lieclass {

Vec<Rational> flatten(const RatCochain& c) {
  Vec<Rational> v;
  v.reserve(c.size() * c.target_dim());
  for (std::size_t r = 0; r < c.size(); ++r) v.insert(v.end(), c.at(r).begin(), c.at(r).end());
  return v;
}

RatCochain unflatten(const AlgebraRef& g, std::size_t degree, std::size_t target_dim, const Vec<Rational>& v) {
  RatCochain c(g, degree, target_dim);
  if (v.size() != c.size() * target_dim) throw DimensionError("flattened cochain has the wrong length");
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t a = 0; a < target_dim; ++a) c.at(r)[a] = v[r * target_dim + a];
  return c;
}

namespace {

RatMatrix differential_matrix_on(const AlgebraRef& g, const Representation& rep, std::size_t p) {
  const std::size_t m = rep.space_dim();
  const std::size_t cols = binomial(g->dim(), p) * m;
  const std::size_t rows = binomial(g->dim(), p + 1) * m;
  RatMatrix d(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vec<Rational> e(cols);
    e[c] = Rational(1);
    const Vec<Rational> image = flatten(ce_differential(unflatten(g, p, m, e), rep));
    for (std::size_t r = 0; r < rows; ++r) d(r, c) = image[r];
  }
  return d;
}

}  // namespace

RatMatrix differential_matrix(const Representation& rep, std::size_t p) {
  return differential_matrix_on(share(rep.algebra()), rep, p);
}

CohomologySpace cohomology_space(const Representation& rep, std::size_t p) {
  return cohomology_space(share(rep.algebra()), rep, p);
}

CohomologySpace cohomology_space(const AlgebraRef& g, const Representation& rep, std::size_t p) {
  if (*g != rep.algebra()) throw DimensionError("module is not over the given algebra");
  CohomologySpace h;
  h.degree_ = p;
  h.g_ = g;
  h.rep_ = rep;
  const std::size_t m = rep.space_dim();
  const std::size_t dim_cp = binomial(g->dim(), p) * m;

  for (const auto& z : nullspace(differential_matrix_on(g, rep, p))) h.cocycles_.push_back(unflatten(g, p, m, z));
  if (p > 0) {
    const RatMatrix prev = differential_matrix_on(g, rep, p - 1);
    for (std::size_t c : independent_columns(prev)) h.coboundaries_.push_back(unflatten(g, p, m, prev.column(c)));
  }

  // pick cocycle-basis vectors that extend the coboundary basis to a basis of Z^p
  std::vector<Vec<Rational>> columns;
  for (const auto& b : h.coboundaries_) columns.push_back(flatten(b));
  for (const auto& z : h.cocycles_) columns.push_back(flatten(z));
  const RatMatrix stacked = RatMatrix::from_columns(dim_cp, columns);
  for (std::size_t c : independent_columns(stacked)) {
    if (c >= h.coboundaries_.size()) h.representatives_.push_back(h.cocycles_[c - h.coboundaries_.size()]);
  }

  std::vector<Vec<Rational>> basis;
  for (const auto& b : h.coboundaries_) basis.push_back(flatten(b));
  for (const auto& r : h.representatives_) basis.push_back(flatten(r));
  h.boundary_then_classes_ = RatMatrix::from_columns(dim_cp, basis);

  h.projection_ = RatMatrix(h.representatives_.size(), h.cocycles_.size());
  for (std::size_t j = 0; j < h.cocycles_.size(); ++j) {
    const Vec<Rational> coords = h.coordinates(h.cocycles_[j]);
    for (std::size_t i = 0; i < coords.size(); ++i) h.projection_(i, j) = coords[i];
  }
  return h;
}

bool CohomologySpace::is_cocycle(const RatCochain& c) const {
  if (c.degree() != degree_ || c.target_dim() != rep_.space_dim() || c.source_dim() != g_->dim())
    throw DimensionError("cochain does not belong to this cohomology space");
  LinearAction<Rational> s = action_of<Rational>(rep_);
  s.source = c.source_ref();
  return covariant_derivative(c, s).is_zero();
}

bool CohomologySpace::is_coboundary(const RatCochain& c) const {
  if (coboundaries_.empty()) return c.is_zero();
  std::vector<Vec<Rational>> cols;
  for (const auto& b : coboundaries_) cols.push_back(flatten(b));
  return solve_linear(RatMatrix::from_columns(c.size() * c.target_dim(), cols), flatten(c)).has_value();
}

Vec<Rational> CohomologySpace::coordinates(const RatCochain& c) const {
  if (!is_cocycle(c)) throw NotACocycle("cochain is not closed");
  const Vec<Rational> flat = flatten(c);
  if (boundary_then_classes_.cols() == 0) return {};
  const auto y = solve_linear(boundary_then_classes_, flat);
  if (!y) throw NotACocycle("cochain is not in the span of the cocycle basis");
  return Vec<Rational>(y->begin() + static_cast<std::ptrdiff_t>(coboundaries_.size()), y->end());
}

bool classes_equal(const RatCochain& a, const RatCochain& b, const CohomologySpace& h) {
  if (!h.is_cocycle(a)) throw NotACocycle("first cochain is not closed");
  if (!h.is_cocycle(b)) throw NotACocycle("second cochain is not closed");
  return h.is_coboundary(a - b);
}

}  // namespace lieclass
