#include "lieclass/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lieclass {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

Exponents padded(const Exponents& e, std::size_t n) {
  Exponents out = e;
  out.resize(n, 0);
  return out;
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  MultiPoly p;
  p.nvars_ = nvars;
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars,
                                const std::vector<std::pair<Exponents, Rational>>& terms) {
  MultiPoly p;
  p.nvars_ = nvars;
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
    p.add_term(e, c);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

MultiPoly MultiPoly::widened(std::size_t nvars) const {
  MultiPoly p = *this;
  p.promote(nvars);
  return p;
}

MultiPoly MultiPoly::derivative(std::size_t index) const {
  MultiPoly out;
  out.nvars_ = std::max(nvars_, index + 1);
  for (const auto& [e, c] : terms_) {
    if (index >= e.size() || e[index] == 0) continue;
    Exponents d = padded(e, out.nvars_);
    const unsigned k = d[index]--;
    out.add_term(d, c * Rational(k));
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) throw std::invalid_argument("evaluation point has too few coordinates");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::promote(std::size_t nvars) {
  if (nvars <= nvars_ && std::all_of(terms_.begin(), terms_.end(),
                                     [&](const auto& t) { return t.first.size() == nvars_; })) {
    return;
  }
  const std::size_t target = std::max(nvars, nvars_);
  TermMap widened;
  for (auto& [e, c] : terms_) widened.emplace(padded(e, target), c);
  terms_ = std::move(widened);
  nvars_ = target;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  promote(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(padded(e, nvars_), c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  promote(o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(padded(e, nvars_), -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  out.nvars_ = std::max(a.nvars_, b.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const Exponents pa = padded(ea, out.nvars_);
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = pa;
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  const std::size_t n = std::max(a.nvars_, b.nvars_);
  auto ib = b.terms_.begin();
  for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib) {
    if (padded(ia->first, n) != padded(ib->first, n) || ia->second != ib->second) return false;
  }
  return true;
}

}  // namespace lieclass
