#include <random>

#include "doctest.h"
#include "ybe/tensor.hpp"

using namespace ybe;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::vector<std::size_t> dims) {
  std::uniform_int_distribution<int> d(-4, 4);
  RationalMatrix m(std::move(dims));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = make_rational(d(rng), 1 + std::abs(d(rng)));
  return m;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

RationalMatrix E(std::size_t n, std::size_t i, std::size_t j) { return elementary<Rational>(n, i - 1, j - 1); }

}  // namespace

TEST_CASE("kron examples") {
  RationalMatrix expect({2, 2});
  expect(0, 0) = expect(1, 1) = 1;
  CHECK(kron(E(2, 1, 1), RationalMatrix::identity({2})) == expect);
  CHECK(kron(RationalMatrix::identity({3}), RationalMatrix::identity({2})) == RationalMatrix::identity({3, 2}));
}

TEST_CASE("kron acts factorwise on product vectors") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix a = random_matrix(rng, {2}), b = random_matrix(rng, {3});
    std::vector<Rational> x(2), y(3), xy(6);
    for (auto& t : x) t = d(rng);
    for (auto& t : y) t = d(rng);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) xy[i * 3 + j] = x[i] * y[j];
    const auto ax = mat_vec(a, x), by = mat_vec(b, y), lhs = mat_vec(kron(a, b), xy);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(lhs[i * 3 + j] == ax[i] * by[j]);
  }
}

TEST_CASE("embed_on_legs examples and errors") {
  const RationalMatrix c = flip_operator<Rational>(2);
  CHECK(embed_on_legs(c, {0, 1}, {2, 2, 2}) == kron(c, RationalMatrix::identity({2})));
  const RationalMatrix x = kron(E(2, 1, 2), E(2, 2, 1));
  CHECK(embed_on_legs(x, {0, 2}, {2, 2, 2}) == kron(kron(E(2, 1, 2), RationalMatrix::identity({2})), E(2, 2, 1)));
  // Reversed leg order swaps the factors.
  CHECK(embed_on_legs(x, {1, 0}, {2, 2}) == kron(E(2, 2, 1), E(2, 1, 2)));
  CHECK_THROWS_AS(embed_on_legs(x, {0, 0}, {2, 2, 2}), DuplicateLeg);
  CHECK_THROWS_AS(embed_on_legs(x, {0, 1}, {2, 3, 2}), DimensionMismatch);
  CHECK_THROWS_AS(embed_on_legs(x, {0}, {2, 2, 2}), DimensionMismatch);
  CHECK_THROWS_AS(embed_on_legs(x, {0, 3}, {2, 2, 2}), DimensionMismatch);
}

TEST_CASE("embedding properties on dims [2,2,2]") {
  std::mt19937_64 rng(5);
  const std::vector<std::size_t> amb{2, 2, 2};
  for (int trial = 0; trial < 5; ++trial) {
    const RationalMatrix a = random_matrix(rng, {2, 2}), b = random_matrix(rng, {2, 2});
    const RationalMatrix c = random_matrix(rng, {2});
    CHECK(embed_on_legs(a, {0, 2}, amb) * embed_on_legs(b, {0, 2}, amb) == embed_on_legs(a * b, {0, 2}, amb));
    const RationalMatrix ea = embed_on_legs(a, {0, 1}, amb), ec = embed_on_legs(c, {2}, amb);
    CHECK(ea * ec == ec * ea);
  }
}

TEST_CASE("flip_operator") {
  const RationalMatrix p = flip_operator<Rational>(2);
  // Basis order 11,12,21,22 maps to 11,21,12,22.
  CHECK(p(0, 0) == 1);
  CHECK(p(2, 1) == 1);
  CHECK(p(1, 2) == 1);
  CHECK(p(3, 3) == 1);
  CHECK(p * p == RationalMatrix::identity({2, 2}));
  RationalMatrix sum({3, 3});
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) sum += kron(E(3, i, j), E(3, j, i));
  CHECK(sum == flip_operator<Rational>(3));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const RationalMatrix x = random_matrix(rng, {3}), y = random_matrix(rng, {3});
    const RationalMatrix q = flip_operator<Rational>(3);
    CHECK(q * kron(x, y) * q == kron(y, x));
  }
  CHECK_THROWS_AS(flip_operator<Rational>(0), DimensionMismatch);
}

TEST_CASE("mat_ops") {
  const RationalMatrix c = flip_operator<Rational>(2);
  CHECK(c * c == RationalMatrix::identity({2, 2}));
  const RatFunc hu(MultiPoly::parse("h"), MultiPoly::parse("u"));
  const RationalMatrix v = eval_all(to_ratfunc(RationalMatrix::identity({2})).scaled(hu),
                                    {{Var::u, Rational(1)}, {Var::h, Rational(2)}});
  CHECK(v == RationalMatrix::identity({2}).scaled(2));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const RationalMatrix a = random_matrix(rng, {4}), b = random_matrix(rng, {4}), d = random_matrix(rng, {4});
    CHECK((a * b) * d == a * (b * d));
  }
  CHECK_THROWS_AS(RationalMatrix({4}) + RationalMatrix({2, 2}), DimensionMismatch);
  CHECK_THROWS_AS(RationalMatrix({4}) * RationalMatrix({3}), DimensionMismatch);
}

TEST_CASE("inverse and clear_denominators") {
  std::mt19937_64 rng(2);
  const RationalMatrix a = random_matrix(rng, {4});
  if (auto inv = inverse(a)) CHECK(a * *inv == RationalMatrix::identity({4}));
  CHECK_FALSE(inverse(RationalMatrix({3})).has_value());

  RatFuncMatrix m({2});
  m(0, 0) = RatFunc(MultiPoly::parse("h"), MultiPoly::parse("u"));
  m(1, 1) = RatFunc(MultiPoly(1), MultiPoly::parse("u + h"));
  m(0, 1) = RatFunc(MultiPoly::parse("v"));
  MultiPoly den;
  const PolyMatrix p = clear_denominators(m, den);
  CHECK(den == MultiPoly::parse("u^2 + u*h"));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(RatFunc(p(i, j), den) == m(i, j));
}
