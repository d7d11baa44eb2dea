#pragma once

#include <vector>

#include "ybe/ratfunc.hpp"

namespace ybe {

/// Power series in h truncated after h^order. Coefficients are rational
/// functions free of h.
class TruncatedSeries {
 public:
  TruncatedSeries(unsigned order, std::vector<RatFunc> coeffs);
  static TruncatedSeries constant(unsigned order, const RatFunc& c);

  unsigned order() const { return order_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  const RatFunc& operator[](unsigned k) const { return coeffs_.at(k); }

  /// Throws OrderMismatch when orders differ.
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;

  /// Sum of coeffs[k] * h^k as an element of Q(s,u,v,h).
  RatFunc resum() const;

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  unsigned order_;
  std::vector<RatFunc> coeffs_;
};

/// Expands x around h = 0 up to h^order. Throws PoleAtExpansionPoint when the
/// denominator vanishes identically at h = 0.
TruncatedSeries series_from_ratfunc(const RatFunc& x, unsigned order);

}  // namespace ybe
