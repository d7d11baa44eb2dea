#include "ybe/ratfunc.hpp"

#include "ybe/errors.hpp"

namespace ybe {

RatFunc RatFunc::reduce(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  if (num.is_zero()) return RatFunc();
  if (!den.is_constant()) {
    const MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  const Rational lc = den.leading().coeff;
  if (lc != 1) {
    const Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) { *this = reduce(num, den); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return reduce(num_ + o.num_, den_);
  if (den_.is_constant() && o.den_.is_constant())
    return RatFunc(num_.scaled(o.den_.constant_value()) + o.num_.scaled(den_.constant_value()),
                   den_ * o.den_);
  const MultiPoly g = gcd(den_, o.den_);
  const MultiPoly a = divide_exact(o.den_, g);  // cofactor for *this
  const MultiPoly b = divide_exact(den_, g);    // cofactor for o
  return reduce(num_ * a + o.num_ * b, den_ * a);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // Cross-cancel before multiplying; both inputs are already reduced.
  const MultiPoly g1 = gcd(num_, o.den_);
  const MultiPoly g2 = gcd(o.num_, den_);
  const MultiPoly n = divide_exact(num_, g1) * divide_exact(o.num_, g2);
  const MultiPoly d = divide_exact(den_, g2) * divide_exact(o.den_, g1);
  const Rational lc = d.leading().coeff;
  if (lc == 1) return RatFunc(n, d, Canonical{});
  const Rational inv = Rational(1) / lc;
  return RatFunc(n.scaled(inv), d.scaled(inv), Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  return reduce(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZero("division by the zero function");
  return *this * o.inverse();
}

RatFunc RatFunc::subst(Var x, const MultiPoly& expr) const {
  MultiPoly d = den_.subst(x, expr);
  if (d.is_zero())
    throw SubstitutionPole("denominator " + den_.to_string() + " vanishes under " + std::string(1, var_name(x)) +
                           " -> " + expr.to_string());
  return reduce(num_.subst(x, expr), std::move(d));
}

Rational RatFunc::eval(const Point& point) const {
  const Rational d = den_.eval(point);
  if (ybe::is_zero(d)) throw EvalPole("denominator " + den_.to_string() + " vanishes");
  return num_.eval(point) / d;
}

RatFunc RatFunc::partial_eval(const Point& point) const {
  MultiPoly d = den_.partial_eval(point);
  if (d.is_zero()) throw EvalPole("denominator " + den_.to_string() + " vanishes");
  return reduce(num_.partial_eval(point), std::move(d));
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(std::string_view text) {
  // "(num)/(den)" or a bare polynomial.
  std::size_t i = 0;
  while (i < text.size() && text[i] == ' ') ++i;
  if (i < text.size() && text[i] == '(') {
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
    MultiPoly num = MultiPoly::parse(text.substr(i + 1, close - i - 1));
    std::string_view rest = text.substr(close + 1);
    const auto open = rest.find('(');
    const auto slash = rest.find('/');
    const auto last = rest.rfind(')');
    if (slash == std::string_view::npos || open == std::string_view::npos || last == std::string_view::npos ||
        slash > open)
      throw ParseError("expected '(num)/(den)' in '" + std::string(text) + "'");
    MultiPoly den = MultiPoly::parse(rest.substr(open + 1, last - open - 1));
    if (den.is_zero()) throw DivisionByZero("parsed zero denominator");
    return RatFunc(num, den);
  }
  return RatFunc(MultiPoly::parse(text));
}

}  // namespace ybe
