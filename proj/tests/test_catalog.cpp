#include "doctest.h"
#include "ybe/catalog.hpp"
#include "ybe/errors.hpp"
#include "ybe/lie.hpp"

using namespace ybe;

namespace {

RationalMatrix E(std::size_t n, std::size_t i, std::size_t j) { return elementary<Rational>(n, i - 1, j - 1); }
RatFunc F(const char* num, const char* den = "1") { return RatFunc(MultiPoly::parse(num), MultiPoly::parse(den)); }

std::vector<CatalogEntry> small_entries() {
  return {CatalogEntry::sphere(2, 1),    CatalogEntry::sphere(3, -1),   CatalogEntry::sphere(3, 0),
          CatalogEntry::cpn(1),          CatalogEntry::cpn(2),          CatalogEntry::hpn(1),
          CatalogEntry::glpq_glgl(1, 1), CatalogEntry::glpq_glgl(2, 1), CatalogEntry::glpq_sopq(1, 1),
          CatalogEntry::glpq_sopq(2, 1), CatalogEntry::gl2n_glnc(1),    CatalogEntry::gl2n_glnc(2)};
}

}  // namespace

TEST_CASE("list_entries") {
  const auto entries = list_entries();
  CHECK(entries.size() == 6);
  CHECK(entries[0].id == EntryId::sphere);
  CHECK(entries[0].params == std::vector<std::string>{"n", "k"});
  CHECK(entries[5].id == EntryId::gl2n_glnc);
  CHECK(entries[5].params == std::vector<std::string>{"n"});
  for (EntryId id : kAllEntries) CHECK(parse_entry_id(to_string(id)) == id);
  CHECK_THROWS_AS(parse_entry_id("torus"), UsageError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CatalogEntry::sphere(0, 1).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(CatalogEntry::sphere(3, 2).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(CatalogEntry::glpq_glgl(0, 1).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(build_GC_closed(CatalogEntry::cpn(0)), ParamOutOfRange);
  CHECK_THROWS_AS(CatalogEntry::from_params(EntryId::sphere, {{"n", 3}}), ParamOutOfRange);
  CHECK_THROWS_AS(CatalogEntry::from_params(EntryId::cpn, {{"n", 1}, {"k", 1}}), ParamOutOfRange);
  CHECK(CatalogEntry::from_params(EntryId::glpq_sopq, {{"p", 2}, {"q", 1}}) == CatalogEntry::glpq_sopq(2, 1));
  CHECK(CatalogEntry::hpn(2).leg_dim() == 8);
  CHECK(CatalogEntry::sphere(3, 1).label() == "sphere(n=3,k=1)");
}

TEST_CASE("build_GC_closed examples") {
  const GCPair s2 = build_GC_closed(CatalogEntry::sphere(2, 1));
  CHECK(s2.c_hat == flip_operator<Rational>(2));
  CHECK(s2.g_hat == -(kron(E(2, 1, 1), E(2, 1, 1)) + kron(E(2, 1, 2), E(2, 1, 2)) + kron(E(2, 2, 1), E(2, 2, 1)) +
                      kron(E(2, 2, 2), E(2, 2, 2))));

  const GCPair iv = build_GC_closed(CatalogEntry::glpq_glgl(1, 1));
  CHECK(iv.g_hat == kron(E(2, 1, 1), E(2, 1, 1)) + kron(E(2, 2, 2), E(2, 2, 2)) - kron(E(2, 1, 2), E(2, 2, 1)) -
                        kron(E(2, 2, 1), E(2, 1, 2)));
  const GCPair v = build_GC_closed(CatalogEntry::glpq_sopq(1, 1));
  CHECK(v.g_hat == -kron(E(2, 1, 1), E(2, 1, 1)) - kron(E(2, 2, 2), E(2, 2, 2)) + kron(E(2, 1, 2), E(2, 1, 2)) +
                       kron(E(2, 2, 1), E(2, 2, 1)));
}

TEST_CASE("coefficients") {
  CHECK(coefficients(CatalogEntry::sphere(3, 1)).a == F("h", "s + 1/2*h"));
  CHECK(coefficients(CatalogEntry::cpn(2)).a == F("h", "s + 2*h"));
  CHECK(coefficients(CatalogEntry::hpn(1)).a == F("h", "s + 4*h"));
  CHECK(coefficients(CatalogEntry::glpq_sopq(2, 2)).c_a == 1);
  CHECK(coefficients(CatalogEntry::sphere(4, -1)).c_a == -1);
  for (const auto& entry : small_entries()) {
    const CoefficientPair co = coefficients(entry);
    CHECK(co.c_b == 0);
    CHECK(co.b == F("h", "s"));
  }
}

TEST_CASE("assemble_R and classical_r") {
  const ParametricRMatrix r2 = assemble_R(CatalogEntry::sphere(2, 1));
  const GCPair gc = build_GC_closed(CatalogEntry::sphere(2, 1));
  const RatFuncMatrix expect =
      RatFuncMatrix::identity({2, 2}) + to_ratfunc(gc.g_hat + gc.c_hat).scaled(F("h", "s"));
  CHECK(r2.r == expect);
  const ParametricRMatrix r4 = assemble_R(CatalogEntry::glpq_glgl(1, 1));
  const GCPair g4 = build_GC_closed(CatalogEntry::glpq_glgl(1, 1));
  CHECK(r4.r == RatFuncMatrix::identity({2, 2}) + to_ratfunc(g4.g_hat + g4.c_hat).scaled(F("h", "s")));

  for (const auto& entry : small_entries()) {
    const ParametricRMatrix r = assemble_R(entry);
    CHECK(partial_eval_all(r.r, {{Var::h, Rational(0)}}) == RatFuncMatrix::identity(r.r.dims()));
    const RatFuncMatrix cr = classical_r(entry);
    const RatFuncMatrix scaled = cr.scaled(F("s"));
    for (std::size_t i = 0; i < scaled.size(); ++i)
      for (std::size_t j = 0; j < scaled.size(); ++j) CHECK_FALSE(scaled(i, j).contains(Var::s));
  }
  CHECK(classical_r(CatalogEntry::sphere(2, 1)) ==
        to_ratfunc(flip_operator<Rational>(2) + gc.g_hat).scaled(F("1", "s")));
}

TEST_CASE("catalog invariants") {
  for (const auto& entry : small_entries()) {
    INFO(entry.label());
    const GCPair gc = build_GC_closed(entry);
    const std::size_t n = entry.leg_dim();
    const RationalMatrix p = flip_operator<Rational>(n);
    CHECK(p * gc.g_hat * p == gc.g_hat);
    CHECK(p * gc.c_hat * p == gc.c_hat);
    if (entry.algebra_dim() == 1) CHECK(gc.c_hat == p);
    // k-invariance of C^ + G^ with k from the symmetric pair.
    const auto pair = symmetric_pair_for(entry);
    const RationalMatrix id = RationalMatrix::identity({n});
    for (const auto& k : eigenspace_basis(pair, 1))
      CHECK(commutator(kron(k, id) + kron(id, k), gc.c_hat + gc.g_hat).is_zero());
  }
}

TEST_CASE("closed forms agree with the symmetric-pair construction") {
  for (const auto& entry : small_entries()) {
    INFO(entry.label());
    const CrosscheckResult r = crosscheck_closed_vs_computed(entry);
    CHECK_MESSAGE(r.ok, r.detail);
  }
}
