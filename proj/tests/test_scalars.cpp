#include <random>

#include "doctest.h"
#include "ybe/errors.hpp"
#include "ybe/series.hpp"

using namespace ybe;

namespace {

MultiPoly P(const char* text) { return MultiPoly::parse(text); }
RatFunc F(const char* num, const char* den = "1") { return RatFunc(P(num), P(den)); }
Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Small random polynomials in u, v, h with coefficients in [-3, 3].
MultiPoly random_poly(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2), count(1, max_terms);
  std::vector<std::pair<Exponents, Rational>> raw;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) raw.push_back({{0u, unsigned(exp(rng)), unsigned(exp(rng)), unsigned(exp(rng))}, Q(coeff(rng))});
  return MultiPoly::from_terms(raw);
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  MultiPoly den;
  while (den.is_zero()) den = random_poly(rng, 3);
  return RatFunc(random_poly(rng, 3), den);
}

}  // namespace

TEST_CASE("poly_normalize merges, cancels, reduces") {
  CHECK(MultiPoly::from_terms({{{0, 1, 0, 0}, Q(1)}, {{0, 1, 0, 0}, Q(-1)}}).is_zero());
  CHECK(MultiPoly::from_terms({{{0, 0, 0, 1}, Q(1, 2)}, {{0, 0, 0, 1}, Q(1, 2)}}) == P("h"));
  CHECK(MultiPoly::from_terms({{{1, 1, 0, 0}, Q(2, 4)}}) == P("1/2*s*u"));
}

TEST_CASE("polynomial string grammar round-trips") {
  const MultiPoly p = P("3/4*s^2*h - u*v + 7 - 1/3*h^3");
  CHECK(MultiPoly::parse(p.to_string()) == p);
  CHECK(P("1*s^0*u^1*v^0*h^0") == P("u"));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("u +"), ParseError);
  CHECK_THROWS_AS(P("x"), ParseError);
  // Terms print in graded-lex order, leading term first.
  CHECK(P("h + u^2 + s").to_string() == "1*u^2 + 1*s^1 + 1*h^1");
}

TEST_CASE("poly_gcd") {
  CHECK(gcd(P("u^2 - h^2"), P("u + h")) == P("u + h"));
  CHECK(gcd(P("u"), P("h")) == P("1"));
  CHECK(gcd(P("0"), P("2*u + 4")) == P("u + 2"));

  // Oracle: the candidate divides both and leaves coprime cofactors.
  const MultiPoly a = P("u") * P("u + 1/2*h");
  const MultiPoly b = P("u^2");
  const MultiPoly g = gcd(a, b);
  CHECK(g == P("u"));
  CHECK(divide_exact(a, g) * g == a);
  CHECK(divide_exact(b, g) * g == b);
  CHECK(gcd(divide_exact(a, g), divide_exact(b, g)) == P("1"));
}

TEST_CASE("poly_gcd property: divides both, cofactors coprime") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly common = random_poly(rng, 2);
    MultiPoly a = random_poly(rng, 3) * common;
    MultiPoly b = random_poly(rng, 3) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const MultiPoly g = gcd(a, b);
    REQUIRE_NOTHROW(divide_exact(a, g));
    REQUIRE_NOTHROW(divide_exact(b, g));
    CHECK(gcd(divide_exact(a, g), divide_exact(b, g)) == P("1"));
    if (!common.is_zero()) CHECK_NOTHROW(divide_exact(g, common.monic()));
  }
}

TEST_CASE("heuristic gcd agrees with the remainder-sequence gcd") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiPoly common = random_poly(rng, 2);
    const MultiPoly a = random_poly(rng, 2) * common;
    const MultiPoly b = random_poly(rng, 2) * common;
    CHECK(gcd(a, b) == gcd_prs(a, b));
  }
  CHECK(gcd_prs(P("u^2 - h^2"), P("u^2 + 2*u*h + h^2")) == P("u + h"));
}

TEST_CASE("ratfunc_arith examples") {
  CHECK(F("h", "u") + F("h", "u") == F("2*h", "u"));
  CHECK(F("h", "u + 1/2*h") * F("u + 1/2*h") == F("h"));
  const RatFunc diff = F("1", "u + h") - F("1", "u");
  // Cross-multiplication oracle: diff * u * (u + h) must equal -h.
  CHECK(diff * F("u^2 + u*h") == F("-h"));
  CHECK(diff == F("-h", "u^2 + u*h"));
  CHECK_THROWS_AS(F("h") / RatFunc(), DivisionByZero);
  CHECK_THROWS_AS(RatFunc().inverse(), DivisionByZero);
}

TEST_CASE("ratfunc canonical form: monic denominator, coprime") {
  const RatFunc x(P("2*u^2 - 2*h^2"), P("-4*u + 4*h"));
  CHECK(x == F("-1/2*u - 1/2*h"));
  CHECK(x.den() == P("1"));
  const RatFunc y(P("u"), P("-2*h"));
  CHECK(y.den().leading().coeff == 1);
  CHECK(RatFunc::parse(y.to_string()) == y);
}

TEST_CASE("ratfunc field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng), z = random_ratfunc(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == RatFunc());
    if (!x.is_zero()) CHECK(x * x.inverse() == RatFunc(1));
  }
}

TEST_CASE("ratfunc_subst") {
  CHECK(F("h", "s").subst(Var::s, P("u + v")) == F("h", "u + v"));
  CHECK_THROWS_AS(F("h", "s").subst(Var::s, P("0")), SubstitutionPole);
  CHECK(F("h", "s + 2*h").subst(Var::s, P("u")) == F("h", "u + 2*h"));
}

TEST_CASE("ratfunc_eval") {
  CHECK(F("h", "u").eval({{Var::u, Q(2)}, {Var::h, Q(1)}}) == Q(1, 2));
  CHECK_THROWS_AS(F("h", "u + h").eval({{Var::u, Q(1)}, {Var::h, Q(-1)}}), EvalPole);
  CHECK(RatFunc(P("u^2 - h^2"), P("u - h")).eval({{Var::u, Q(3)}, {Var::h, Q(1)}}) == Q(4));
}

TEST_CASE("eval commutes with arithmetic") {
  std::mt19937_64 rng(13);
  const Point pt{{Var::u, Q(3, 7)}, {Var::v, Q(-5, 2)}, {Var::h, Q(11, 3)}};
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng);
    try {
      const Rational ex = x.eval(pt), ey = y.eval(pt);
      CHECK((x + y).eval(pt) == ex + ey);
      CHECK((x * y).eval(pt) == ex * ey);
    } catch (const EvalPole&) {
    }
  }
}

namespace {

// Independent check that sum c_k h^k agrees with x modulo h^(N+1):
// den * series - num must have no terms of h-degree <= N.
bool multiply_back_ok(const RatFunc& x, const TruncatedSeries& ser) {
  RatFunc diff = RatFunc(x.den()) * ser.resum() - RatFunc(x.num());
  // diff = (...)/D with D free of h; every numerator term must carry h^(N+1).
  for (const auto& t : diff.num().terms())
    if (t.mono.exponent(Var::h) <= ser.order()) return false;
  return !diff.den().contains(Var::h);
}

}  // namespace

TEST_CASE("series_from_ratfunc") {
  const RatFunc a = F("h", "u + 1/2*h");
  const auto ser = series_from_ratfunc(a, 3);
  CHECK(ser[0] == RatFunc());
  CHECK(ser[1] == F("1", "u"));
  CHECK(ser[2] == F("-1/2", "u^2"));
  CHECK(ser[3] == F("1/4", "u^3"));
  CHECK(multiply_back_ok(a, ser));

  const auto s2 = series_from_ratfunc(F("h", "u"), 2);
  CHECK(s2[0].is_zero());
  CHECK(s2[1] == F("1", "u"));
  CHECK(s2[2].is_zero());

  const RatFunc b = F("1", "u + h");
  const auto s3 = series_from_ratfunc(b, 2);
  CHECK(s3[0] == F("1", "u"));
  CHECK(s3[1] == F("-1", "u^2"));
  CHECK(s3[2] == F("1", "u^3"));
  CHECK(multiply_back_ok(b, s3));

  CHECK_THROWS_AS(series_from_ratfunc(F("1", "h"), 2), PoleAtExpansionPoint);
}

TEST_CASE("series resummation property") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const RatFunc x = random_ratfunc(rng);
    try {
      const auto ser = series_from_ratfunc(x, 3);
      CHECK(multiply_back_ok(x, ser));
      ++checked;
    } catch (const PoleAtExpansionPoint&) {
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("series_arith") {
  auto S = [](std::vector<RatFunc> c) { return TruncatedSeries(static_cast<unsigned>(c.size() - 1), c); };
  CHECK(S({1, 1, 0}) * S({1, -1, 0}) == S({1, 0, -1}));
  CHECK(S({0, F("1", "u")}) * S({0, F("1", "u")}) == S({0, 0}));
  const auto x = S({1, F("1", "u"), 0});
  CHECK(x * x == S({1, F("2", "u"), F("1", "u^2")}));
  CHECK_THROWS_AS(S({1, 1}) + S({1, 1, 1}), OrderMismatch);
}
