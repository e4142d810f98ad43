#pragma once

/**
 * @file cochain.hpp
 * @brief Alternating and symmetric multilinear maps on a Lie algebra.
 *
 * A Cochain of degree p is stored densely on strictly increasing basis index
 * tuples (i_1 < ... < i_p), in lexicographic order; its value on any other
 * tuple of basis elements follows from alternation. Scalars are Rational or
 * MultiPoly, and every operation is generic in the scalar type.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lieclass/combinatorics.hpp"
#include "lieclass/errors.hpp"
#include "lieclass/lie_algebra.hpp"

namespace lieclass {

using AlgebraRef = std::shared_ptr<const LieAlgebra>;

inline AlgebraRef share(const LieAlgebra& g) { return std::make_shared<const LieAlgebra>(g); }

inline bool same_algebra(const AlgebraRef& a, const AlgebraRef& b) { return a == b || *a == *b; }

template <typename S>
class Cochain {
public:
  using Scalar = S;

  Cochain() = default;
  /// The zero p-cochain on `source` with values in a space of dimension `target_dim`.
  Cochain(AlgebraRef source, std::size_t degree, std::size_t target_dim)
      : source_(std::move(source)),
        degree_(degree),
        target_dim_(target_dim),
        values_(binomial(source_->dim(), degree), Vec<S>(target_dim)) {}
  Cochain(const LieAlgebra& source, std::size_t degree, std::size_t target_dim)
      : Cochain(share(source), degree, target_dim) {}

  [[nodiscard]] const AlgebraRef& source_ref() const { return source_; }
  [[nodiscard]] const LieAlgebra& source() const { return *source_; }
  [[nodiscard]] std::size_t source_dim() const { return source_->dim(); }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t target_dim() const { return target_dim_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::vector<IndexTuple> tuples() const { return increasing_tuples(source_dim(), degree_); }

  /// Value on the rank-th increasing tuple.
  Vec<S>& at(std::size_t rank) { return values_.at(rank); }
  const Vec<S>& at(std::size_t rank) const { return values_.at(rank); }

  /// Value on a strictly increasing tuple.
  Vec<S>& operator[](const IndexTuple& increasing) { return values_.at(checked_rank(increasing)); }
  const Vec<S>& operator[](const IndexTuple& increasing) const { return values_.at(checked_rank(increasing)); }

  /// Value on arbitrary basis arguments (e_{t_1}, ..., e_{t_p}).
  [[nodiscard]] Vec<S> evaluate(const IndexTuple& t) const {
    if (t.size() != degree_) throw DimensionError("cochain evaluated on the wrong number of arguments");
    auto sorted = sort_alternating(t);
    if (!sorted) return Vec<S>(target_dim_);
    Vec<S> v = (*this)[sorted->sorted];
    if (sorted->sign < 0)
      for (auto& x : v) x = -x;
    return v;
  }

  /// Adds coeff * value(e_k, rest...) into acc, where `rest` is increasing.
  template <typename C>
  void accumulate_with_leading(std::size_t k, const IndexTuple& rest, const C& coeff, Vec<S>& acc) const {
    std::size_t pos = 0;
    while (pos < rest.size() && rest[pos] < k) ++pos;
    if (pos < rest.size() && rest[pos] == k) return;
    IndexTuple t;
    t.reserve(rest.size() + 1);
    t.insert(t.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(pos));
    t.push_back(k);
    t.insert(t.end(), rest.begin() + static_cast<std::ptrdiff_t>(pos), rest.end());
    const Vec<S>& v = values_[increasing_rank(t, source_dim())];
    const bool negate = pos % 2 == 1;
    for (std::size_t a = 0; a < target_dim_; ++a) {
      if (v[a].is_zero()) continue;
      if (negate) acc[a] -= v[a] * coeff;
      else acc[a] += v[a] * coeff;
    }
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : values_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

  Cochain& operator+=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t r = 0; r < values_.size(); ++r)
      for (std::size_t a = 0; a < target_dim_; ++a) values_[r][a] += o.values_[r][a];
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t r = 0; r < values_.size(); ++r)
      for (std::size_t a = 0; a < target_dim_; ++a) values_[r][a] -= o.values_[r][a];
    return *this;
  }
  template <typename C>
  Cochain& scale(const C& c) {
    for (auto& v : values_)
      for (auto& x : v) x = x * c;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a) { return a.scale(Rational(-1)); }
  friend Cochain operator*(const Rational& c, Cochain a) { return a.scale(c); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.target_dim_ == b.target_dim_ && a.source_dim() == b.source_dim() &&
           a.values_ == b.values_;
  }

  /// Applies `fn` to every scalar, producing a cochain over another scalar type.
  template <typename Fn>
  [[nodiscard]] auto map_scalars(Fn fn) const {
    using T = std::decay_t<decltype(fn(std::declval<const S&>()))>;
    Cochain<T> out(source_, degree_, target_dim_);
    for (std::size_t r = 0; r < values_.size(); ++r)
      for (std::size_t a = 0; a < target_dim_; ++a) out.at(r)[a] = fn(values_[r][a]);
    return out;
  }

  /// Applies a linear map (rows = new target dimension) to every value.
  template <typename T>
  [[nodiscard]] Cochain map_values(const Matrix<T>& m) const {
    if (m.cols() != target_dim_) throw DimensionError("linear map does not match cochain target");
    Cochain out(source_, degree_, m.rows());
    for (std::size_t r = 0; r < values_.size(); ++r) out.at(r) = m * values_[r];
    return out;
  }

  void check_compatible(const Cochain& o) const {
    if (degree_ != o.degree_ || target_dim_ != o.target_dim_ || !same_algebra(source_, o.source_)) {
      throw DimensionError("cochains are not of the same shape");
    }
  }

private:
  std::size_t checked_rank(const IndexTuple& t) const {
    if (t.size() != degree_) throw DimensionError("index tuple has the wrong length");
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] >= source_dim() || (i > 0 && t[i - 1] >= t[i])) throw DimensionError("index tuple is not strictly increasing");
    }
    return increasing_rank(t, source_dim());
  }

  AlgebraRef source_;
  std::size_t degree_ = 0;
  std::size_t target_dim_ = 0;
  std::vector<Vec<S>> values_;
};

using RatCochain = Cochain<Rational>;
using PolyCochain = Cochain<MultiPoly>;

inline PolyCochain to_poly(const RatCochain& c) {
  return c.map_scalars([](const Rational& r) { return MultiPoly(r); });
}

/// Cochain of degree 1 whose value on e_j is column j of `m`.
template <typename S>
Cochain<S> one_cochain_from_matrix(const AlgebraRef& source, const Matrix<S>& m) {
  if (m.cols() != source->dim()) throw DimensionError("matrix columns must match the source algebra dimension");
  Cochain<S> c(source, 1, m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) c.at(j) = m.column(j);
  return c;
}

/// Symmetric p-linear map n^p -> V with rational values, stored on
/// non-decreasing index tuples.
class SymMultiMap {
public:
  SymMultiMap() = default;
  SymMultiMap(AlgebraRef source, std::size_t degree, std::size_t target_dim)
      : source_(std::move(source)),
        degree_(degree),
        target_dim_(target_dim),
        values_(binomial(source_->dim() + degree - (degree == 0 ? 0 : 1), degree), Vec<Rational>(target_dim)) {
    if (degree == 0) values_.assign(1, Vec<Rational>(target_dim));
  }
  SymMultiMap(const LieAlgebra& source, std::size_t degree, std::size_t target_dim)
      : SymMultiMap(share(source), degree, target_dim) {}

  [[nodiscard]] const AlgebraRef& source_ref() const { return source_; }
  [[nodiscard]] const LieAlgebra& source() const { return *source_; }
  [[nodiscard]] std::size_t source_dim() const { return source_->dim(); }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t target_dim() const { return target_dim_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] std::vector<IndexTuple> tuples() const { return nondecreasing_tuples(source_dim(), degree_); }

  Vec<Rational>& at(std::size_t rank) { return values_.at(rank); }
  const Vec<Rational>& at(std::size_t rank) const { return values_.at(rank); }

  /// Value on basis arguments in any order.
  [[nodiscard]] const Vec<Rational>& evaluate(IndexTuple t) const {
    if (t.size() != degree_) throw DimensionError("symmetric map evaluated on the wrong number of arguments");
    std::sort(t.begin(), t.end());
    for (std::size_t i : t)
      if (i >= source_dim()) throw DimensionError("basis index out of range");
    return values_[nondecreasing_rank(t, source_dim())];
  }
  /// Sets the value on all orderings of the given basis arguments.
  void set(IndexTuple t, Vec<Rational> value) {
    if (value.size() != target_dim_) throw DimensionError("value has wrong length");
    std::sort(t.begin(), t.end());
    values_.at(nondecreasing_rank(t, source_dim())) = std::move(value);
  }

  /// f(v_1, ..., v_p) for coefficient vectors over any scalar type.
  template <typename S>
  [[nodiscard]] Vec<S> apply(const std::vector<const Vec<S>*>& args) const {
    if (args.size() != degree_) throw DimensionError("symmetric map applied to the wrong number of vectors");
    for (const auto* a : args)
      if (a->size() != source_dim()) throw DimensionError("argument length does not match the source dimension");
    Vec<S> out(target_dim_);
    IndexTuple idx(degree_);
    auto recurse = [&](auto&& self, std::size_t slot, const S& coeff) -> void {
      if (slot == degree_) {
        const Vec<Rational>& v = evaluate(idx);
        for (std::size_t a = 0; a < target_dim_; ++a)
          if (!v[a].is_zero()) out[a] += coeff * v[a];
        return;
      }
      const Vec<S>& arg = *args[slot];
      for (std::size_t i = 0; i < arg.size(); ++i) {
        if (arg[i].is_zero()) continue;
        idx[slot] = i;
        self(self, slot + 1, coeff * arg[i]);
      }
    };
    recurse(recurse, 0, S(1));
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : values_)
      if (!is_zero_vector(v)) return false;
    return true;
  }

  SymMultiMap& operator+=(const SymMultiMap& o) {
    if (degree_ != o.degree_ || target_dim_ != o.target_dim_ || !same_algebra(source_, o.source_))
      throw DimensionError("symmetric maps are not of the same shape");
    for (std::size_t r = 0; r < values_.size(); ++r)
      for (std::size_t a = 0; a < target_dim_; ++a) values_[r][a] += o.values_[r][a];
    return *this;
  }
  SymMultiMap& scale(const Rational& c) {
    for (auto& v : values_)
      for (auto& x : v) x *= c;
    return *this;
  }

  friend bool operator==(const SymMultiMap& a, const SymMultiMap& b) {
    return a.degree_ == b.degree_ && a.target_dim_ == b.target_dim_ && a.source_dim() == b.source_dim() &&
           a.values_ == b.values_;
  }

private:
  AlgebraRef source_;
  std::size_t degree_ = 0;
  std::size_t target_dim_ = 0;
  std::vector<Vec<Rational>> values_;
};

}  // namespace lieclass
