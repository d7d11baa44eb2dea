#pragma once

#include <string>
#include <string_view>

#include "ybe/poly.hpp"

namespace ybe {

/// Element of Q(s, u, v, h) in canonical form: numerator and denominator
/// coprime, denominator monic under graded-lex order. Structural equality is
/// therefore mathematical equality.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}   // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                    // NOLINT
  RatFunc(const MultiPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  /// Throws DivisionByZero for a zero denominator.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  static RatFunc variable(Var x) { return RatFunc(MultiPoly::variable(x)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool contains(Var x) const { return num_.contains(x) || den_.contains(x); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;

  /// Replaces x by a polynomial; throws SubstitutionPole if the denominator
  /// becomes identically zero.
  RatFunc subst(Var x, const MultiPoly& expr) const;
  /// Exact value; throws EvalPole when the denominator vanishes at point.
  Rational eval(const Point& point) const;
  /// Assigns the given variables only; throws EvalPole on a vanishing
  /// denominator.
  RatFunc partial_eval(const Point& point) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// "(num)/(den)" in the polynomial grammar; plain "num" when den = 1.
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

 private:
  struct Canonical {};
  RatFunc(MultiPoly num, MultiPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc reduce(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace ybe
