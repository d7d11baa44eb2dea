#include "ybe/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ybe/errors.hpp"

namespace ybe {

char var_name(Var x) {
  static constexpr std::array<char, kNumVars> names = {'s', 'u', 'v', 'h'};
  return names[static_cast<std::size_t>(x)];
}

Var parse_var(char c) {
  switch (c) {
    case 's': return Var::s;
    case 'u': return Var::u;
    case 'v': return Var::v;
    case 'h': return Var::h;
    default: throw ParseError(std::string("unknown variable '") + c + "'");
  }
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(const Exponents& e) {
  std::uint64_t key = 0;
  unsigned deg = 0;
  for (Var x : kAllVars) {
    const unsigned p = e[static_cast<std::size_t>(x)];
    if (p > 0xFFFu) throw Error("monomial exponent too large");
    key |= static_cast<std::uint64_t>(p) << shift(x);
    deg += p;
  }
  return Monomial(key | (static_cast<std::uint64_t>(deg) << 48));
}

Monomial Monomial::of(Var x, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(x)] = power;
  return from_exponents(e);
}

Exponents Monomial::exponents() const {
  Exponents e{};
  for (Var x : kAllVars) e[static_cast<std::size_t>(x)] = exponent(x);
  return e;
}

bool Monomial::divides(Monomial other) const {
  for (Var x : kAllVars)
    if (exponent(x) > other.exponent(x)) return false;
  return true;
}

// ------------------------------------------------------------- MultiPoly

namespace {

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<Term> canonical(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && is_zero(out.back().coeff)) out.pop_back();
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (!ybe::is_zero(c)) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::variable(Var x) { return monomial(Monomial::of(x), Rational(1)); }

MultiPoly MultiPoly::monomial(Monomial m, const Rational& c) {
  if (ybe::is_zero(c)) return {};
  return MultiPoly(std::vector<Term>{{m, c}});
}

MultiPoly MultiPoly::from_terms(std::vector<std::pair<Exponents, Rational>> raw) {
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (auto& [e, c] : raw) terms.push_back({Monomial::from_exponents(e), c});
  return from_terms(std::move(terms));
}

MultiPoly MultiPoly::from_terms(std::vector<Term> raw) { return MultiPoly(canonical(std::move(raw))); }

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  return last.mono.is_one() ? last.coeff : Rational(0);
}

unsigned MultiPoly::degree(Var x) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(x));
  return d;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var x) const {
  std::vector<std::vector<Term>> buckets(degree(x) + 1);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(x);
    buckets[e].push_back({t.mono / Monomial::of(x, e), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  // Removing one variable from a sorted list can reorder terms of differing
  // total degree, so each bucket is re-canonicalized.
  for (auto& b : buckets) out.push_back(MultiPoly(canonical(std::move(b))));
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(Var x, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> raw;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_)
      raw.push_back({t.mono * Monomial::of(x, static_cast<unsigned>(k)), t.coeff});
  return MultiPoly(canonical(std::move(raw)));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, Subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (!ybe::is_zero(c)) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const { return MultiPoly(merge<false>(terms_, o.terms_)); }
MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return MultiPoly(merge<true>(terms_, o.terms_)); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial()) return times_monomial(o.terms_[0].mono).scaled(o.terms_[0].coeff);
  if (is_monomial()) return o.times_monomial(terms_[0].mono).scaled(terms_[0].coeff);
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) raw.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return MultiPoly(canonical(std::move(raw)));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (ybe::is_zero(c)) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(Monomial m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;  // order preserved by graded-lex
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading().coeff;
  if (lc == 1) return *this;
  return scaled(Rational(1) / lc);
}

namespace {

Rational power(const Rational& base, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational MultiPoly::eval(const Point& point) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (Var x : kAllVars) {
      const unsigned e = t.mono.exponent(x);
      if (e == 0) continue;
      auto it = point.find(x);
      if (it == point.end()) throw Error(std::string("eval: variable ") + var_name(x) + " not assigned");
      value *= power(it->second, e);
    }
    sum += value;
  }
  return sum;
}

MultiPoly MultiPoly::partial_eval(const Point& point) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    Exponents e = t.mono.exponents();
    for (const auto& [x, val] : point) {
      auto& p = e[static_cast<std::size_t>(x)];
      value *= power(val, p);
      p = 0;
    }
    raw.push_back({Monomial::from_exponents(e), std::move(value)});
  }
  return MultiPoly(canonical(std::move(raw)));
}

MultiPoly MultiPoly::subst(Var x, const MultiPoly& expr) const {
  const auto coeffs = coefficients_in(x);
  MultiPoly result;
  MultiPoly p(Rational(1));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) p = p * expr;
    if (!coeffs[k].is_zero()) result += coeffs[k] * p;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      out += ybe::to_string(c);
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += ybe::to_string(Rational(abs(c)));
    }
    for (Var x : kAllVars) {
      const unsigned e = t.mono.exponent(x);
      if (e == 0) continue;
      out += '*';
      out += var_name(x);
      out += '^';
      out += std::to_string(e);
    }
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
    }
    return MultiPoly::from_terms(std::move(terms));
  }

 private:
  Term term(int sign) {
    Rational coeff(sign);
    Exponents e{};
    bool have_factor = false;
    while (true) {
      skip();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(peek()))) {
        const Var x = parse_var(text_[pos_++]);
        unsigned p = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip();
          p = static_cast<unsigned>(integer().get_ui());
        }
        e[static_cast<std::size_t>(x)] += p;
      } else {
        throw error("expected coefficient or variable");
      }
      have_factor = true;
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw error("empty term");
    return {Monomial::from_exponents(e), coeff};
  }

  Rational number() {
    Integer num = integer();
    Integer den(1);
    skip();
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      skip();
      den = integer();
      if (den == 0) throw error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw error("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  ParseError error(const std::string& what) const {
    return ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ------------------------------------------------------------ division/gcd

std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
  if (a.is_zero()) return MultiPoly();
  for (Var x : kAllVars)
    if (b.degree(x) > a.degree(x)) return std::nullopt;
  const Term& lb = b.leading();
  if (b.is_monomial()) {
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / lb.mono, t.coeff / lb.coeff});
    }
    return MultiPoly::from_terms(std::move(out));
  }
  MultiPoly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!lb.mono.divides(lt.mono)) return std::nullopt;
    const Monomial m = lt.mono / lb.mono;
    const Rational c = lt.coeff / lb.coeff;
    quotient.push_back({m, c});
    rem -= b.times_monomial(m).scaled(c);
  }
  return MultiPoly::from_terms(std::move(quotient));
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw InexactDivision(a.to_string() + " by " + b.to_string());
  return std::move(*q);
}

namespace {

MultiPoly integer_primitive(const MultiPoly& p);

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& p) {
  Exponents e = mono.leading().mono.exponents();
  for (const auto& t : p.terms())
    for (Var x : kAllVars) {
      auto& slot = e[static_cast<std::size_t>(x)];
      slot = std::min(slot, t.mono.exponent(x));
    }
  return MultiPoly::monomial(Monomial::from_exponents(e), Rational(1));
}


// Heuristic gcd by evaluation at a large integer and xi-adic reconstruction.
// Inputs have integer coefficients; the result includes the integer content
// gcd. Returns nullopt when the heuristic gives up.
Integer max_norm(const MultiPoly& p) {
  Integer m(0);
  for (const auto& t : p.terms()) {
    Integer c = abs(t.coeff.get_num());
    if (c > m) m = c;
  }
  return m;
}

Integer integer_content(const MultiPoly& p) {
  Integer g(0);
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

// Coefficientwise symmetric residue in (-xi/2, xi/2].
MultiPoly symmetric_mod(const MultiPoly& p, const Integer& xi) {
  std::vector<Term> out;
  const Integer half = xi / 2;
  for (const auto& t : p.terms()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) out.push_back({t.mono, Rational(r)});
  }
  return MultiPoly::from_terms(std::move(out));
}

std::optional<MultiPoly> heuristic_gcd(const MultiPoly& a, const MultiPoly& b, int depth) {
  if (depth > 8) return std::nullopt;
  if (a.is_constant() || b.is_constant()) {
    Integer g;
    const Integer ca = integer_content(a), cb = integer_content(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return MultiPoly(Rational(g));
  }
  Var x = Var::s;
  for (Var y : kAllVars)
    if (a.contains(y) || b.contains(y)) {
      x = y;
      break;
    }
  const Integer ca = integer_content(a), cb = integer_content(b);
  Integer g_int;
  mpz_gcd(g_int.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const MultiPoly pa = a.scaled(Rational(1) / Rational(ca));
  const MultiPoly pb = b.scaled(Rational(1) / Rational(cb));

  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MultiPoly ea = pa.partial_eval({{x, Rational(xi)}});
    const MultiPoly eb = pb.partial_eval({{x, Rational(xi)}});
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto gamma = heuristic_gcd(ea, eb, depth + 1)) {
        MultiPoly rest = *gamma;
        std::vector<MultiPoly> digits;
        while (!rest.is_zero() && digits.size() < 64) {
          MultiPoly d = symmetric_mod(rest, xi);
          rest = (rest - d).scaled(Rational(1) / Rational(xi));
          digits.push_back(std::move(d));
        }
        if (rest.is_zero()) {
          MultiPoly cand = MultiPoly::from_coefficients_in(x, digits);
          if (!cand.is_zero()) {
            cand = integer_primitive(cand);
            if (try_divide_exact(pa, cand) && try_divide_exact(pb, cand)) return cand.scaled(Rational(g_int));
          }
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MultiPoly content_in(const MultiPoly& p, Var x) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(x)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MultiPoly(Rational(1));
  }
  return g;
}

// Rescales to integer coefficients with gcd 1, keeping rational coefficient
// growth out of the remainder sequence.
MultiPoly integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale == 1 ? p : p.scaled(scale);
}

MultiPoly primitive_part_in(const MultiPoly& p, Var x) {
  if (p.is_zero()) return p;
  return integer_primitive(divide_exact(p, content_in(p, x)));
}

// Pseudo-remainder of a by b as polynomials in x; scaling by powers of the
// leading coefficient is irrelevant because callers take primitive parts.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, Var x) {
  const unsigned db = b.degree(x);
  const MultiPoly lb = b.coefficients_in(x).back();
  while (!a.is_zero() && a.degree(x) >= db) {
    const unsigned da = a.degree(x);
    const MultiPoly la = a.coefficients_in(x).back();
    a = integer_primitive(lb * a - (la * b).times_monomial(Monomial::of(x, da - db)));
  }
  return a;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a.monic() == b.monic()) return a.monic();

  if (auto g = heuristic_gcd(integer_primitive(a), integer_primitive(b), 0)) return g->monic();
  return gcd_prs(a, b);
}

MultiPoly gcd_prs(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));

  // Main variable: the shared one of least degree keeps the remainder
  // sequence short.
  Var x = Var::s;
  bool found = false;
  unsigned best = ~0u;
  for (Var y : kAllVars) {
    const unsigned da = a.degree(y), db = b.degree(y);
    if (da == 0 || db == 0) continue;
    if (std::max(da, db) < best) {
      best = std::max(da, db);
      x = y;
      found = true;
    }
  }
  if (!found) {
    // No shared variable: the gcd can only involve the contents.
    for (Var y : kAllVars)
      if (a.contains(y)) return gcd(content_in(a, y), b);
  }

  const MultiPoly ca = content_in(a, x);
  const MultiPoly cb = content_in(b, x);
  const MultiPoly g_content = gcd(ca, cb);
  MultiPoly pa = integer_primitive(divide_exact(a, ca));
  MultiPoly pb = integer_primitive(divide_exact(b, cb));
  if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);

  MultiPoly result;
  while (true) {
    if (pb.is_zero()) {
      result = pa;
      break;
    }
    if (pb.degree(x) == 0) {
      result = MultiPoly(Rational(1));
      break;
    }
    MultiPoly r = pseudo_remainder(pa, pb, x);
    pa = std::move(pb);
    pb = primitive_part_in(r, x);
  }
  return (g_content * primitive_part_in(result, x)).monic();
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (divide_exact(a, gcd(a, b)) * b).monic();
}

}  // namespace ybe
