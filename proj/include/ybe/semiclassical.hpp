#pragma once

#include <vector>

#include "ybe/catalog.hpp"
#include "ybe/series.hpp"
#include "ybe/verify.hpp"

namespace ybe {

/// R = sum_k h^k M_k + O(h^(N+1)), each M_k over Q(s).
struct SeriesRMatrix {
  unsigned order = 0;
  std::vector<RatFuncMatrix> coeffs;
};

/// Entrywise expansion; throws PoleAtExpansionPoint.
SeriesRMatrix expand_R(const RatFuncMatrix& r, unsigned order);

/// M_1 = r^ exactly; witness names the first differing entry.
VerificationReport check_classical_limit(const RatFuncMatrix& r, const RatFuncMatrix& r_hat);

/// (-c)^(k-1) / s^k * G^.
RatFuncMatrix geometric_term(const RationalMatrix& g_hat, const Rational& c, unsigned k);

/// Returns geometric_term for the entry after checking it against M_k of
/// the expansion; throws Mismatch. Requires k >= 2.
RatFuncMatrix read_off_Rk(const CatalogEntry& entry, unsigned k);

struct FitResult {
  /// Common factor of the residual conditions, as a polynomial in c
  /// (printed in the slot of s).
  std::string condition;
  /// Rational roots of the condition.
  std::vector<Rational> candidates;
  /// Candidates whose exact QYBE check passed.
  std::vector<Rational> verified;
  /// Set when the residual vanishes identically in c (checked exactly with
  /// c symbolic): QYBE does not determine c.
  bool any_value = false;
  std::vector<Point> points;
};

/// Recovers c in a = h/(s + c h), b = h/s from QYBE: residual conditions at
/// seeded points, rational roots of their gcd, exact confirmation.
/// Throws NoSolution when nothing survives.
FitResult fit_shift_constant(const RationalMatrix& g_hat, const RationalMatrix& c_hat, const SamplerConfig& sampler = {});

/// Rational roots of a polynomial in one variable, ascending.
std::vector<Rational> rational_roots(const MultiPoly& p, Var x);

}  // namespace ybe
