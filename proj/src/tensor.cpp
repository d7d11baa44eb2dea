#include "ybe/tensor.hpp"

namespace ybe {

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(m.dims());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Rational scale = Rational(1) / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a(col, j))) a(i, j) -= f * a(col, j);
        if (!is_zero(inv(col, j))) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RatFuncMatrix to_ratfunc(const RationalMatrix& m) {
  return m.map([](const Rational& x) { return RatFunc(x); });
}

RatFuncMatrix subst_all(const RatFuncMatrix& m, Var x, const MultiPoly& expr) {
  return m.map([&](const RatFunc& f) { return f.is_zero() ? f : f.subst(x, expr); });
}

RationalMatrix eval_all(const RatFuncMatrix& m, const Point& point) {
  return m.map([&](const RatFunc& f) { return f.is_zero() ? Rational(0) : f.eval(point); });
}

RatFuncMatrix partial_eval_all(const RatFuncMatrix& m, const Point& point) {
  return m.map([&](const RatFunc& f) { return f.is_zero() ? f : f.partial_eval(point); });
}

PolyMatrix clear_denominators(const RatFuncMatrix& m, MultiPoly& den) {
  den = MultiPoly(Rational(1));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const RatFunc& f = m(i, j);
      if (!f.is_zero() && !f.is_polynomial() && !(f.den() == den)) den = lcm(den, f.den());
    }
  return m.map([&](const RatFunc& f) {
    if (f.is_zero()) return MultiPoly();
    return f.num() * divide_exact(den, f.den());
  });
}

}  // namespace ybe
