#include "doctest.h"
#include "ybe/catalog.hpp"
#include "ybe/errors.hpp"
#include "ybe/lie.hpp"
#include "ybe/verify.hpp"

using namespace ybe;

namespace {

RatFunc F(const char* num, const char* den = "1") { return RatFunc(MultiPoly::parse(num), MultiPoly::parse(den)); }

const std::string* find_detail(const VerificationReport& rep, const std::string& key) {
  for (const auto& [k, v] : rep.details)
    if (k == key) return &v;
  return nullptr;
}

// Residual on three legs with explicit spectral arguments.
RatFuncMatrix residual(const RatFuncMatrix& r, const char* a12, const char* a13, const char* a23) {
  const std::size_t n = r.dims()[0];
  const std::vector<std::size_t> dims{n, n, n};
  auto at = [&](const char* arg) { return subst_all(r, Var::s, MultiPoly::parse(arg)); };
  const auto r12 = embed_on_legs(at(a12), {0, 1}, dims);
  const auto r13 = embed_on_legs(at(a13), {0, 2}, dims);
  const auto r23 = embed_on_legs(at(a23), {1, 2}, dims);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

}  // namespace

TEST_CASE("sampler is deterministic and bounded") {
  SamplerConfig cfg;
  cfg.seed = 42;
  RationalSampler a(cfg), b(cfg);
  for (int i = 0; i < 200; ++i) {
    const Rational x = a.next();
    CHECK(x == b.next());
    CHECK(abs(x.get_num()) <= 256);
    CHECK(x.get_den() >= 1);
    CHECK(x.get_den() <= 64);
  }
  cfg.seed = 43;
  RationalSampler c(cfg);
  RationalSampler d(SamplerConfig{.seed = 42});
  bool differs = false;
  for (int i = 0; i < 10; ++i) differs |= c.next() != d.next();
  CHECK(differs);
}

TEST_CASE("parse and print enums") {
  CHECK(parse_backend("exact") == Backend::exact);
  CHECK(parse_backend("sampled") == Backend::sampled);
  CHECK_THROWS_AS(parse_backend("float"), UsageError);
  CHECK(to_string(Verdict::pole_retry_exhausted) == "pole-retry-exhausted");
}

TEST_CASE("CYBE examples") {
  for (auto e : {CatalogEntry::sphere(2, 1), CatalogEntry::sphere(3, 1)}) {
    const auto gc = build_GC_closed(e);
    CHECK(check_cybe(classical_r(e), Backend::exact).passed());
    const auto c_only = to_ratfunc(gc.c_hat).scaled(F("1", "s"));
    CHECK(check_cybe(c_only, Backend::exact).passed());
    CHECK(check_cybe(c_only, Backend::sampled).passed());
  }
  // G/s alone on sphere n=3: recorded verdict is fail.
  const auto gc = build_GC_closed(CatalogEntry::sphere(3, 1));
  const auto rep = check_cybe(to_ratfunc(gc.g_hat).scaled(F("1", "s")), Backend::exact);
  CHECK_FALSE(rep.passed());
  CHECK(rep.witness.has_value());
  CHECK_FALSE(check_cybe(to_ratfunc(gc.g_hat).scaled(F("1", "s")), Backend::sampled).passed());
}

TEST_CASE("CYBE dimension errors") {
  CHECK_THROWS_AS(check_cybe(RatFuncMatrix::identity({2, 3}), Backend::exact), DimensionMismatch);
  CHECK_THROWS_AS(check_qybe(RatFuncMatrix::identity({4}), Backend::exact), DimensionMismatch);
}

TEST_CASE("QYBE examples") {
  for (auto e : {CatalogEntry::sphere(2, 1), CatalogEntry::cpn(1)}) {
    const auto r = assemble_R(e).r;
    const auto ex = check_qybe(r, Backend::exact);
    CHECK(ex.passed());
    CHECK_FALSE(ex.witness.has_value());
    const auto sm = check_qybe(r, Backend::sampled);
    CHECK(sm.passed());
    CHECK(sm.points.size() == 5);
    CHECK(sm.seed == 0u);
  }
  SUBCASE("id + (h/s) G fails on sphere n=3") {
    const auto gc = build_GC_closed(CatalogEntry::sphere(3, 1));
    const auto r = RatFuncMatrix::identity({3, 3}) + to_ratfunc(gc.g_hat).scaled(F("h", "s"));
    const auto ex = check_qybe(r, Backend::exact);
    CHECK(ex.verdict == Verdict::fail);
    REQUIRE(ex.witness.has_value());
    CHECK(ex.witness->find("entry (") == 0);
    CHECK(check_qybe(r, Backend::sampled).verdict == Verdict::fail);
  }
}

TEST_CASE("sampled reports replay identically") {
  const auto r = assemble_R(CatalogEntry::sphere(3, 1)).r;
  SamplerConfig cfg;
  cfg.seed = 7;
  const auto a = check_qybe(r, Backend::sampled, cfg);
  const auto b = check_qybe(r, Backend::sampled, cfg);
  CHECK(a.points == b.points);
  CHECK(a.seed == 7u);
  cfg.seed = 8;
  CHECK(check_qybe(r, Backend::sampled, cfg).points != a.points);
}

TEST_CASE("pole retries exhaust") {
  // Sampled values lie in {-1, 0, 1}, all of them poles of 1/(s^3 - s).
  SamplerConfig cfg;
  cfg.numerator_bound = 1;
  cfg.denominator_bound = 1;
  cfg.max_retries = 3;
  const auto r = RatFuncMatrix::identity({2, 2}) + flip_operator<RatFunc>(2).scaled(F("h", "s^3 - s"));
  const auto rep = check_qybe(r, Backend::sampled, cfg);
  CHECK(rep.verdict == Verdict::pole_retry_exhausted);
  CHECK(rep.witness.has_value());
  CHECK_THROWS_AS(RationalSampler(SamplerConfig{.numerator_bound = 0}), UsageError);
}

TEST_CASE("QYBE residual is flip covariant") {
  // Reversing the three legs maps the residual at (u, v) to minus the
  // residual at (v, u) for flip-symmetric R.
  const auto r = assemble_R(CatalogEntry::sphere(3, 0)).r;
  const auto res = residual(r, "u", "u+v", "v");
  CHECK_FALSE(res.is_zero());
  const auto swapped = residual(r, "v", "u+v", "u");
  const std::size_t n = 3;
  RatFuncMatrix w({n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) w((k * n + j) * n + i, (i * n + j) * n + k) = RatFunc(1);
  CHECK(w * res * w == -swapped);
}

TEST_CASE("backend coherence on catalog entries") {
  for (auto e : {CatalogEntry::sphere(3, 1), CatalogEntry::hpn(1), CatalogEntry::glpq_sopq(2, 1),
                 CatalogEntry::gl2n_glnc(1), CatalogEntry::sphere(3, 0)}) {
    CAPTURE(e.label());
    const auto r = assemble_R(e).r;
    const bool exact = check_qybe(r, Backend::exact).passed();
    const bool sampled = check_qybe(r, Backend::sampled).passed();
    if (exact) CHECK(sampled);
    if (!sampled) CHECK_FALSE(exact);
  }
}

TEST_CASE("index-form CYBE") {
  for (auto pair : {grassmann_pair(2, 1), grassmann_pair(3, 1), grassmann_pair(2, 2)}) {
    CAPTURE(pair.name);
    const auto curv = curvature_from_pair(pair);
    CHECK(check_cybe_index(curv).passed());
    auto bad = curv;
    bad.components[1] += 1;
    const auto rep = check_cybe_index(bad);
    CHECK_FALSE(rep.passed());
    CHECK(rep.witness.has_value());
  }
}

TEST_CASE("identity suites") {
  for (int n : {2, 3, 4}) {
    CAPTURE(n);
    const auto reps = check_identity_suite(CatalogEntry::sphere(n, 1));
    CHECK(reps.size() == 11);
    for (const auto& rep : reps) {
      CAPTURE(rep.check);
      CHECK(rep.passed());
    }
  }
  for (auto e : {CatalogEntry::cpn(1), CatalogEntry::cpn(2), CatalogEntry::hpn(1)}) {
    CAPTURE(e.label());
    const auto reps = check_identity_suite(e);
    REQUIRE(reps.size() >= 2);
    CHECK(reps[0].check == "identity-a");
    CHECK(reps[0].passed());
    CHECK(reps[1].check == "identity-b");
    CHECK(reps[1].passed());
  }
  CHECK_THROWS_AS(identity_suite(CatalogEntry::glpq_glgl(1, 1)), ParamOutOfRange);

  SUBCASE("a broken chain names its link") {
    const auto gc = build_GC_closed(CatalogEntry::sphere(2, 1));
    IdentityChain chain{"z", {{Rational(1), {"C12", "C13"}}, {Rational(1), {"C13", "C12"}}}};
    const auto reps = check_identity_suite(gc.g_hat, gc.c_hat, {chain});
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].check == "identity-z");
    CHECK_FALSE(reps[0].passed());
    REQUIRE(reps[0].witness.has_value());
    CHECK(reps[0].witness->find("IdentityFail") == 0);
  }
}

TEST_CASE("unitarity") {
  for (int n : {2, 3, 4}) {
    const auto rep = check_unitarity(assemble_R(CatalogEntry::sphere(n, 1)).r);
    CHECK(rep.passed());
    const auto* f = find_detail(rep, "factor");
    REQUIRE(f);
    CHECK(RatFunc::parse(*f) == F("s^2 - h^2", "s^2"));
  }
  const auto id = check_unitarity(RatFuncMatrix::identity({3, 3}));
  CHECK(id.passed());
  CHECK(RatFunc::parse(*find_detail(id, "factor")) == RatFunc(1));

  const auto cp = check_unitarity(assemble_R(CatalogEntry::cpn(2)).r);
  CHECK_FALSE(cp.passed());
  REQUIRE(cp.witness.has_value());
  CHECK(cp.witness->find("NotProportional") == 0);
}
