#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ybe/errors.hpp"
#include "ybe/ratfunc.hpp"

namespace ybe {

/// Dense square matrix acting on a tensor product of legs. The row/column
/// multi-index is lexicographic with leg 0 most significant.
template <class T>
class LegMatrix {
 public:
  LegMatrix() = default;

  /// Zero matrix on the given legs.
  explicit LegMatrix(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    size_ = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    data_.assign(size_ * size_, T(0));
  }

  static LegMatrix identity(std::vector<std::size_t> dims) {
    LegMatrix m(std::move(dims));
    for (std::size_t i = 0; i < m.size_; ++i) m(i, i) = T(1);
    return m;
  }

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }
  std::size_t legs() const { return dims_.size(); }

  T& operator()(std::size_t row, std::size_t col) { return data_[row * size_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * size_ + col]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return ybe::is_zero(x); });
  }

  /// Same entries, reinterpreted on a different leg structure of equal size.
  LegMatrix with_dims(std::vector<std::size_t> dims) const {
    LegMatrix m(std::move(dims));
    if (m.size_ != size_) throw DimensionMismatch("with_dims: total size differs");
    m.data_ = data_;
    return m;
  }

  LegMatrix operator+(const LegMatrix& o) const {
    check_same(o, "add");
    LegMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ybe::is_zero(o.data_[i])) r.data_[i] += o.data_[i];
    return r;
  }

  LegMatrix operator-(const LegMatrix& o) const {
    check_same(o, "sub");
    LegMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ybe::is_zero(o.data_[i])) r.data_[i] -= o.data_[i];
    return r;
  }

  LegMatrix operator-() const {
    LegMatrix r = *this;
    for (auto& x : r.data_)
      if (!ybe::is_zero(x)) x = -x;
    return r;
  }

  LegMatrix operator*(const LegMatrix& o) const {
    check_same(o, "mul");
    LegMatrix r(dims_);
    // Row-wise sparse accumulation: zero entries are skipped on both sides.
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t k = 0; k < size_; ++k) {
        const T& a = (*this)(i, k);
        if (ybe::is_zero(a)) continue;
        for (std::size_t j = 0; j < size_; ++j) {
          const T& b = o(k, j);
          if (ybe::is_zero(b)) continue;
          r(i, j) += a * b;
        }
      }
    }
    return r;
  }

  LegMatrix& operator+=(const LegMatrix& o) { return *this = *this + o; }
  LegMatrix& operator-=(const LegMatrix& o) { return *this = *this - o; }

  LegMatrix scaled(const T& c) const {
    LegMatrix r(dims_);
    if (ybe::is_zero(c)) return r;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ybe::is_zero(data_[i])) r.data_[i] = data_[i] * c;
    return r;
  }

  LegMatrix transpose() const {
    LegMatrix r(dims_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> LegMatrix<decltype(f(std::declval<const T&>()))> {
    LegMatrix<decltype(f(std::declval<const T&>()))> r(dims_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  bool operator==(const LegMatrix& o) const { return dims_ == o.dims_ && data_ == o.data_; }

  /// First nonzero entry in row-major order, or false if none.
  bool first_nonzero(std::size_t& row, std::size_t& col) const {
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ybe::is_zero(data_[i])) {
        row = i / size_;
        col = i % size_;
        return true;
      }
    return false;
  }

 private:
  void check_same(const LegMatrix& o, const char* what) const {
    if (size_ != o.size_ || dims_ != o.dims_) throw DimensionMismatch(std::string(what) + ": leg structures differ");
  }

  std::vector<std::size_t> dims_;
  std::size_t size_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = LegMatrix<Rational>;
using PolyMatrix = LegMatrix<MultiPoly>;
using RatFuncMatrix = LegMatrix<RatFunc>;

template <class T>
LegMatrix<T> commutator(const LegMatrix<T>& a, const LegMatrix<T>& b) {
  return a * b - b * a;
}

/// Kronecker product; the legs of b follow the legs of a.
template <class T>
LegMatrix<T> kron(const LegMatrix<T>& a, const LegMatrix<T>& b) {
  std::vector<std::size_t> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  LegMatrix<T> r(std::move(dims));
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const T& x = a(i, j);
      if (ybe::is_zero(x)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const T& y = b(k, l);
          if (!ybe::is_zero(y)) r(i * nb + k, j * nb + l) = x * y;
        }
    }
  return r;
}

/// E_ij of the given dimension, zero-based indices.
template <class T>
LegMatrix<T> elementary(std::size_t n, std::size_t i, std::size_t j) {
  LegMatrix<T> m({n});
  m(i, j) = T(1);
  return m;
}

/// x ⊗ y ↦ y ⊗ x on (K^n)^{⊗2}.
template <class T>
LegMatrix<T> flip_operator(std::size_t n) {
  if (n == 0) throw DimensionMismatch("flip_operator: n must be positive");
  LegMatrix<T> p({n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j * n + i, i * n + j) = T(1);
  return p;
}

namespace detail {

inline std::vector<std::size_t> digits(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

inline std::size_t compose(std::span<const std::size_t> d, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + d[k];
  return index;
}

}  // namespace detail

/// Places a on the listed legs (zero-based, in the order of a's legs) of the
/// ambient space, identity elsewhere.
template <class T>
LegMatrix<T> embed_on_legs(const LegMatrix<T>& a, std::span<const std::size_t> target_legs,
                           const std::vector<std::size_t>& ambient_dims) {
  if (target_legs.size() != a.legs())
    throw DimensionMismatch("embed_on_legs: expected " + std::to_string(a.legs()) + " target legs");
  std::vector<bool> used(ambient_dims.size(), false);
  for (std::size_t k = 0; k < target_legs.size(); ++k) {
    const std::size_t leg = target_legs[k];
    if (leg >= ambient_dims.size()) throw DimensionMismatch("embed_on_legs: leg index out of range");
    if (used[leg]) throw DuplicateLeg("embed_on_legs: leg " + std::to_string(leg) + " repeated");
    used[leg] = true;
    if (ambient_dims[leg] != a.dims()[k]) throw DimensionMismatch("embed_on_legs: leg dimension mismatch");
  }
  LegMatrix<T> r(ambient_dims);
  std::vector<std::size_t> sub(target_legs.size());
  for (std::size_t row = 0; row < r.size(); ++row) {
    std::vector<std::size_t> d = detail::digits(row, ambient_dims);
    for (std::size_t k = 0; k < target_legs.size(); ++k) sub[k] = d[target_legs[k]];
    const std::size_t arow = detail::compose(sub, a.dims());
    for (std::size_t acol = 0; acol < a.size(); ++acol) {
      const T& x = a(arow, acol);
      if (ybe::is_zero(x)) continue;
      const auto cd = detail::digits(acol, a.dims());
      for (std::size_t k = 0; k < target_legs.size(); ++k) d[target_legs[k]] = cd[k];
      r(row, detail::compose(d, ambient_dims)) = x;
    }
  }
  return r;
}

template <class T>
LegMatrix<T> embed_on_legs(const LegMatrix<T>& a, std::initializer_list<std::size_t> target_legs,
                           const std::vector<std::size_t>& ambient_dims) {
  std::vector<std::size_t> legs(target_legs);
  return embed_on_legs(a, std::span<const std::size_t>(legs), ambient_dims);
}

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Converts a rational matrix into one over Q(s,u,v,h).
RatFuncMatrix to_ratfunc(const RationalMatrix& m);

RatFuncMatrix subst_all(const RatFuncMatrix& m, Var x, const MultiPoly& expr);
/// Throws EvalPole if any entry has a pole at the point.
RationalMatrix eval_all(const RatFuncMatrix& m, const Point& point);
RatFuncMatrix partial_eval_all(const RatFuncMatrix& m, const Point& point);

/// Writes m = p / den with p polynomial and den the monic lcm of the entry
/// denominators.
PolyMatrix clear_denominators(const RatFuncMatrix& m, MultiPoly& den);

}  // namespace ybe
