#pragma once

#include <string>
#include <vector>

#include "ybe/entry.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

struct CatalogInfo {
  EntryId id;
  std::vector<std::string> params;
  std::string leg_dim;  // formula in the parameters
  std::string description;
};

std::vector<CatalogInfo> list_entries();

struct GCPair {
  RationalMatrix g_hat;
  RationalMatrix c_hat;
};

/// G^ and C^ from the explicit tables; throws ParamOutOfRange.
GCPair build_GC_closed(const CatalogEntry& entry);

/// a = h/(s + c_a h), b = h/(s + c_b h).
struct CoefficientPair {
  Rational c_a;
  Rational c_b;
  RatFunc a;
  RatFunc b;
};

CoefficientPair coefficients(const CatalogEntry& entry);
/// h/(s + c h).
RatFunc shifted_coefficient(const Rational& c);

struct ParametricRMatrix {
  std::string label;
  RationalMatrix g_hat;
  RationalMatrix c_hat;
  CoefficientPair coeffs;
  /// id + a G^ + b C^ over Q(s, h).
  RatFuncMatrix r;
};

ParametricRMatrix assemble_R(const CatalogEntry& entry);
/// The ansatz with arbitrary shift constants for given G^, C^.
ParametricRMatrix assemble_R(const RationalMatrix& g_hat, const RationalMatrix& c_hat, const Rational& c_a,
                             const Rational& c_b = 0, std::string label = "custom");

/// r^(s) = (C^ + G^)/s.
RatFuncMatrix classical_r(const RationalMatrix& g_hat, const RationalMatrix& c_hat);
RatFuncMatrix classical_r(const CatalogEntry& entry);

struct CrosscheckResult {
  bool ok = true;
  std::string detail;  // first differing entry when !ok
};

/// Catalog (G^, C^) against the values computed from the symmetric pair.
CrosscheckResult crosscheck_closed_vs_computed(const CatalogEntry& entry);

}  // namespace ybe
