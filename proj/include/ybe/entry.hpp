#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/rational.hpp"

namespace ybe {

enum class EntryId { sphere, cpn, hpn, glpq_glgl, glpq_sopq, gl2n_glnc };

inline constexpr EntryId kAllEntries[] = {EntryId::sphere,    EntryId::cpn,       EntryId::hpn,
                                          EntryId::glpq_glgl, EntryId::glpq_sopq, EntryId::gl2n_glnc};

std::string to_string(EntryId id);
/// Throws UsageError for an unknown id.
EntryId parse_entry_id(std::string_view name);

/// Parameter names accepted by an entry, in display order.
std::vector<std::string> param_names(EntryId id);

/// One catalog example with its size parameters. Unused parameters stay 0.
struct CatalogEntry {
  EntryId id = EntryId::sphere;
  int n = 0;
  int k = 0;  // sphere only: sign of the sectional curvature
  int p = 0;
  int q = 0;

  static CatalogEntry sphere(int n, int k) { return {EntryId::sphere, n, k, 0, 0}; }
  static CatalogEntry cpn(int n) { return {EntryId::cpn, n, 0, 0, 0}; }
  static CatalogEntry hpn(int n) { return {EntryId::hpn, n, 0, 0, 0}; }
  static CatalogEntry glpq_glgl(int p, int q) { return {EntryId::glpq_glgl, 0, 0, p, q}; }
  static CatalogEntry glpq_sopq(int p, int q) { return {EntryId::glpq_sopq, 0, 0, p, q}; }
  static CatalogEntry gl2n_glnc(int n) { return {EntryId::gl2n_glnc, n, 0, 0, 0}; }

  /// Builds from named parameters; throws ParamOutOfRange on a missing,
  /// extra or out-of-range value.
  static CatalogEntry from_params(EntryId id, const std::map<std::string, int>& params);
  std::map<std::string, int> params() const;

  /// Throws ParamOutOfRange.
  void validate() const;

  /// Real dimension of the division algebra (1, 2 or 4).
  std::size_t algebra_dim() const;
  /// Real dimension of the representation space m.
  std::size_t leg_dim() const;
  /// Shift constant c_a of a = h/(s + c_a h).
  Rational shift_constant() const;

  /// e.g. "sphere(n=3,k=1)".
  std::string label() const;

  bool operator==(const CatalogEntry&) const = default;
};

}  // namespace ybe
