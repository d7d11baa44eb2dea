#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybe/rational.hpp"

namespace ybe {

/// The fixed, globally ordered variable set. `s` is the formal spectral
/// argument, `u` and `v` are the leg differences, `h` is the deformation
/// parameter.
enum class Var : std::uint8_t { s = 0, u = 1, v = 2, h = 3 };

inline constexpr int kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::s, Var::u, Var::v, Var::h};

char var_name(Var x);
Var parse_var(char c);

using Exponents = std::array<unsigned, kNumVars>;

/// Packed monomial. The top 16 bits hold the total degree, followed by one
/// 12-bit exponent per variable with `s` most significant, so comparing keys
/// is graded-lex comparison.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial from_exponents(const Exponents& e);
  static Monomial of(Var x, unsigned power = 1);

  unsigned exponent(Var x) const {
    return static_cast<unsigned>((key_ >> shift(x)) & 0xFFFu);
  }
  unsigned degree() const { return static_cast<unsigned>(key_ >> 48); }
  Exponents exponents() const;
  bool is_one() const { return key_ == 0; }

  bool divides(Monomial other) const;
  Monomial operator*(Monomial other) const { return Monomial(key_ + other.key_); }
  /// Requires divides(other) in the reverse direction: other | *this.
  Monomial operator/(Monomial other) const { return Monomial(key_ - other.key_); }

  std::uint64_t key() const { return key_; }
  auto operator<=>(const Monomial&) const = default;

 private:
  explicit constexpr Monomial(std::uint64_t k) : key_(k) {}
  static constexpr unsigned shift(Var x) {
    return 36u - 12u * static_cast<unsigned>(x);
  }
  std::uint64_t key_ = 0;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Assignment of rational values to (some of) the variables.
using Point = std::map<Var, Rational>;

/// Multivariate polynomial over Q in (s, u, v, h). Terms are stored in
/// strictly decreasing graded-lex order with no zero coefficients, so equal
/// polynomials have identical representations.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(Var x);
  static MultiPoly monomial(Monomial m, const Rational& c);
  /// Canonicalizes an arbitrary list of terms: merges duplicates, drops zeros.
  static MultiPoly from_terms(std::vector<std::pair<Exponents, Rational>> raw);
  static MultiPoly from_terms(std::vector<Term> raw);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value of the constant polynomial; zero for the zero polynomial.
  Rational constant_value() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  unsigned degree(Var x) const;
  bool contains(Var x) const { return degree(x) > 0; }

  /// Coefficients with respect to x: result[k] is the coefficient of x^k,
  /// a polynomial free of x.
  std::vector<MultiPoly> coefficients_in(Var x) const;
  static MultiPoly from_coefficients_in(Var x, const std::vector<MultiPoly>& coeffs);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(Monomial m) const;
  MultiPoly pow(unsigned e) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;

  /// Full evaluation; every variable present must be assigned.
  Rational eval(const Point& point) const;
  /// Substitutes values for the assigned variables only.
  MultiPoly partial_eval(const Point& point) const;
  MultiPoly subst(Var x, const MultiPoly& expr) const;

  bool operator==(const MultiPoly& o) const;

  std::string to_string() const;
  static MultiPoly parse(std::string_view text);

 private:
  explicit MultiPoly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Exact quotient a / b; throws InexactDivision when b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Monic greatest common divisor; gcd(0, b) = monic(b).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);
/// Same contract as gcd, always via the recursive primitive remainder
/// sequence (gcd tries a heuristic evaluation route first).
MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b);

}  // namespace ybe
