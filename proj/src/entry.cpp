#include "ybe/entry.hpp"

#include <algorithm>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

// Keeps every matrix on three legs at a size exact arithmetic handles.
constexpr std::size_t kMaxLegDim = 8;

}  // namespace

std::string to_string(EntryId id) {
  switch (id) {
    case EntryId::sphere: return "sphere";
    case EntryId::cpn: return "cpn";
    case EntryId::hpn: return "hpn";
    case EntryId::glpq_glgl: return "glpq_glgl";
    case EntryId::glpq_sopq: return "glpq_sopq";
    case EntryId::gl2n_glnc: return "gl2n_glnc";
  }
  return "?";
}

EntryId parse_entry_id(std::string_view name) {
  for (EntryId id : kAllEntries)
    if (to_string(id) == name) return id;
  throw UsageError("unknown entry '" + std::string(name) + "'");
}

std::vector<std::string> param_names(EntryId id) {
  switch (id) {
    case EntryId::sphere: return {"n", "k"};
    case EntryId::cpn:
    case EntryId::hpn:
    case EntryId::gl2n_glnc: return {"n"};
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq: return {"p", "q"};
  }
  return {};
}

CatalogEntry CatalogEntry::from_params(EntryId id, const std::map<std::string, int>& params) {
  const auto names = param_names(id);
  for (const auto& [key, value] : params) {
    (void)value;
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw ParamOutOfRange(to_string(id) + " takes no parameter '" + key + "'");
  }
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw ParamOutOfRange(to_string(id) + " requires parameter '" + key + "'");
    return it->second;
  };
  CatalogEntry e;
  e.id = id;
  switch (id) {
    case EntryId::sphere:
      e.n = get("n");
      e.k = get("k");
      break;
    case EntryId::cpn:
    case EntryId::hpn:
    case EntryId::gl2n_glnc: e.n = get("n"); break;
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq:
      e.p = get("p");
      e.q = get("q");
      break;
  }
  e.validate();
  return e;
}

std::map<std::string, int> CatalogEntry::params() const {
  switch (id) {
    case EntryId::sphere: return {{"n", n}, {"k", k}};
    case EntryId::cpn:
    case EntryId::hpn:
    case EntryId::gl2n_glnc: return {{"n", n}};
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq: return {{"p", p}, {"q", q}};
  }
  return {};
}

void CatalogEntry::validate() const {
  switch (id) {
    case EntryId::sphere:
      if (k < -1 || k > 1) throw ParamOutOfRange("sphere: k must be 1, 0 or -1");
      [[fallthrough]];
    case EntryId::cpn:
    case EntryId::hpn:
    case EntryId::gl2n_glnc:
      if (n < 1) throw ParamOutOfRange(to_string(id) + ": n must be at least 1");
      break;
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq:
      if (p < 1 || q < 1) throw ParamOutOfRange(to_string(id) + ": p and q must be at least 1");
      break;
  }
  if (leg_dim() > kMaxLegDim)
    throw ParamOutOfRange(label() + ": leg dimension " + std::to_string(leg_dim()) + " exceeds " +
                          std::to_string(kMaxLegDim));
}

std::size_t CatalogEntry::algebra_dim() const {
  switch (id) {
    case EntryId::cpn: return 2;
    case EntryId::hpn: return 4;
    default: return 1;
  }
}

std::size_t CatalogEntry::leg_dim() const {
  switch (id) {
    case EntryId::sphere: return std::size_t(n);
    case EntryId::cpn: return 2 * std::size_t(n);
    case EntryId::hpn: return 4 * std::size_t(n);
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq: return std::size_t(p + q);
    case EntryId::gl2n_glnc: return 2 * std::size_t(n);
  }
  return 0;
}

Rational CatalogEntry::shift_constant() const {
  switch (id) {
    case EntryId::sphere: return make_rational(k * (n - 2), 2);
    case EntryId::cpn: return Rational(n);
    case EntryId::hpn: return Rational(2 * n + 2);
    case EntryId::glpq_glgl: return Rational(0);
    case EntryId::glpq_sopq: return make_rational(p + q - 2, 2);
    case EntryId::gl2n_glnc: return Rational(0);
  }
  return Rational(0);
}

std::string CatalogEntry::label() const {
  std::string out = to_string(id) + "(";
  bool first = true;
  for (const auto& name : param_names(id)) {
    const auto ps = params();
    if (!first) out += ",";
    out += name + "=" + std::to_string(ps.at(name));
    first = false;
  }
  return out + ")";
}

}  // namespace ybe
