#include "ybe/series.hpp"

#include "ybe/errors.hpp"

namespace ybe {

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<RatFunc> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
  for (const auto& c : coeffs_)
    if (c.contains(Var::h)) throw Error("series coefficient depends on h");
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const RatFunc& c) {
  std::vector<RatFunc> coeffs(order + 1);
  coeffs[0] = c;
  return {order, std::move(coeffs)};
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw OrderMismatch(std::to_string(order_) + " vs " + std::to_string(o.order_));
  std::vector<RatFunc> out(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) out[k] = coeffs_[k] + o.coeffs_[k];
  return {order_, std::move(out)};
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw OrderMismatch(std::to_string(order_) + " vs " + std::to_string(o.order_));
  std::vector<RatFunc> out(order_ + 1);
  for (unsigned i = 0; i <= order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order_; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return {order_, std::move(out)};
}

RatFunc TruncatedSeries::resum() const {
  RatFunc sum;
  for (unsigned k = 0; k <= order_; ++k)
    sum += coeffs_[k] * RatFunc(MultiPoly::monomial(Monomial::of(Var::h, k), Rational(1)));
  return sum;
}

TruncatedSeries series_from_ratfunc(const RatFunc& x, unsigned order) {
  const auto num = x.num().coefficients_in(Var::h);
  const auto den = x.den().coefficients_in(Var::h);
  if (den[0].is_zero()) throw PoleAtExpansionPoint("denominator " + x.den().to_string() + " vanishes at h = 0");
  auto at = [](const std::vector<MultiPoly>& v, unsigned k) { return k < v.size() ? v[k] : MultiPoly(); };
  // Long division: den * sum(c_k h^k) = num, solved order by order.
  const RatFunc d0_inv = RatFunc(den[0]).inverse();
  std::vector<RatFunc> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    RatFunc acc(at(num, k));
    for (unsigned j = 1; j <= k && j < den.size(); ++j)
      if (!den[j].is_zero() && !c[k - j].is_zero()) acc -= RatFunc(den[j]) * c[k - j];
    c[k] = acc * d0_inv;
  }
  return {order, std::move(c)};
}

}  // namespace ybe
