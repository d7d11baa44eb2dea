#include "ybe/semiclassical.hpp"

#include <algorithm>

#include "ybe/errors.hpp"

namespace ybe {

SeriesRMatrix expand_R(const RatFuncMatrix& r, unsigned order) {
  SeriesRMatrix out;
  out.order = order;
  out.coeffs.assign(order + 1, RatFuncMatrix(r.dims()));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r(i, j).is_zero()) continue;
      const TruncatedSeries ser = series_from_ratfunc(r(i, j), order);
      for (unsigned k = 0; k <= order; ++k) out.coeffs[k](i, j) = ser[k];
    }
  return out;
}

VerificationReport check_classical_limit(const RatFuncMatrix& r, const RatFuncMatrix& r_hat) {
  VerificationReport rep;
  rep.check = "classical-limit";
  const SeriesRMatrix ser = expand_R(r, 1);
  std::size_t row = 0, col = 0;
  if ((ser.coeffs[1] - r_hat).first_nonzero(row, col)) {
    rep.verdict = Verdict::fail;
    rep.witness = "M1 entry (" + std::to_string(row) + "," + std::to_string(col) + "): " +
                  ser.coeffs[1](row, col).to_string() + " vs " + r_hat(row, col).to_string();
  }
  return rep;
}

RatFuncMatrix geometric_term(const RationalMatrix& g_hat, const Rational& c, unsigned k) {
  Rational scale = 1;
  for (unsigned t = 1; t < k; ++t) scale *= -c;
  const RatFunc f(MultiPoly(scale), MultiPoly::monomial(Monomial::of(Var::s, k), Rational(1)));
  return to_ratfunc(g_hat).scaled(f);
}

RatFuncMatrix read_off_Rk(const CatalogEntry& entry, unsigned k) {
  if (k < 2) throw ParamOutOfRange("read_off_Rk needs k >= 2");
  const ParametricRMatrix r = assemble_R(entry);
  const RatFuncMatrix expect = geometric_term(r.g_hat, r.coeffs.c_a, k);
  const SeriesRMatrix ser = expand_R(r.r, k);
  std::size_t row = 0, col = 0;
  if ((ser.coeffs[k] - expect).first_nonzero(row, col))
    throw Mismatch("M" + std::to_string(k) + " entry (" + std::to_string(row) + "," + std::to_string(col) +
                   "): " + ser.coeffs[k](row, col).to_string() + " vs " + expect(row, col).to_string());
  return expect;
}

namespace {

// Positive divisors of |n| by trial division.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned t = 1; t <= e; ++t) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const MultiPoly& p, Var x) {
  if (p.is_zero()) throw NoSolution("every value is a root of the zero polynomial");
  for (Var y : kAllVars)
    if (y != x && p.contains(y)) throw Error("rational_roots: polynomial is not univariate");
  std::vector<MultiPoly> coeffs = p.coefficients_in(x);
  std::vector<Rational> roots;
  // Strip the power of x dividing p.
  std::size_t low = 0;
  while (coeffs[low].is_zero()) ++low;
  if (low > 0) roots.push_back(0);
  // Integer coefficients a_low .. a_deg.
  Integer lcm_den = 1;
  for (std::size_t k = low; k < coeffs.size(); ++k) {
    const Rational c = coeffs[k].constant_value();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> a;
  for (std::size_t k = low; k < coeffs.size(); ++k) {
    const Rational c = coeffs[k].constant_value() * lcm_den;
    a.push_back(c.get_num());
  }
  if (a.size() > 1) {
    auto value = [&](const Rational& r) {
      Rational acc = 0;
      for (std::size_t k = a.size(); k-- > 0;) acc = acc * r + Rational(a[k]);
      return acc;
    };
    for (const Integer& num : divisors(a.front()))
      for (const Integer& den : divisors(a.back()))
        for (int sign : {1, -1}) {
          Rational r(Integer(num * sign), den);
          r.canonicalize();
          if (is_zero(value(r)) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

FitResult fit_shift_constant(const RationalMatrix& g_hat, const RationalMatrix& c_hat, const SamplerConfig& sampler) {
  // The unknown c is carried as the polynomial variable s; the spectral
  // values are numbers at each sample point.
  const Var kC = Var::s;
  const MultiPoly c = MultiPoly::variable(kC);
  const PolyMatrix g = g_hat.map([](const Rational& x) { return MultiPoly(x); });
  const PolyMatrix cc = c_hat.map([](const Rational& x) { return MultiPoly(x); });
  const PolyMatrix id = PolyMatrix::identity(g_hat.dims());
  // s (s + c h) R(s) = s (s + c h) id + h s G^ + h (s + c h) C^.
  auto cleared = [&](const Rational& s, const Rational& h) {
    const MultiPoly shift = MultiPoly(s) + c.scaled(h);
    return id.map([&](const MultiPoly& x) { return x * shift.scaled(s); }) +
           g.map([&](const MultiPoly& x) { return x.scaled(h * s); }) +
           cc.map([&](const MultiPoly& x) { return x * shift.scaled(h); });
  };
  const std::size_t n = g_hat.dims().at(0);
  const std::vector<std::size_t> amb{n, n, n};

  FitResult out;
  RationalSampler rng(sampler);
  MultiPoly condition;
  for (int k = 0; k < sampler.num_points; ++k) {
    Point pt;
    for (int attempt = 0;; ++attempt) {
      if (attempt == sampler.max_retries) throw NoSolution("no usable sample point");
      pt = rng.next_point({Var::u, Var::v, Var::h});
      if (!is_zero(pt[Var::u]) && !is_zero(pt[Var::v]) && !is_zero(pt[Var::u] + pt[Var::v]) && !is_zero(pt[Var::h]))
        break;
    }
    out.points.push_back(pt);
    const Rational h = pt[Var::h];
    const PolyMatrix r12 = embed_on_legs(cleared(pt[Var::u], h), {0, 1}, amb);
    const PolyMatrix r13 = embed_on_legs(cleared(pt[Var::u] + pt[Var::v], h), {0, 2}, amb);
    const PolyMatrix r23 = embed_on_legs(cleared(pt[Var::v], h), {1, 2}, amb);
    const PolyMatrix res = r12 * r13 * r23 - r23 * r13 * r12;
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = 0; j < res.size(); ++j)
        if (!res(i, j).is_zero()) condition = gcd(condition, res(i, j));
  }
  out.condition = condition.to_string();
  if (condition.is_zero()) {
    // Every c passes at the sample points. Certify over Q(c, u, v, h) with
    // c in the slot of s, which is free once the arguments are substituted.
    const RatFuncMatrix gr = to_ratfunc(g_hat), cr = to_ratfunc(c_hat);
    const RatFuncMatrix rid = RatFuncMatrix::identity(g_hat.dims());
    const MultiPoly hp = MultiPoly::variable(Var::h);
    auto leg = [&](const MultiPoly& arg) {
      return rid + gr.scaled(RatFunc(hp, arg + c * hp)) + cr.scaled(RatFunc(hp, arg));
    };
    const SpectralArgs args = SpectralArgs::difference();
    if (!check_qybe_legs(leg(args.a12), leg(args.a13), leg(args.a23)).passed())
      throw NoSolution("residual vanishes at the sample points but not identically in c");
    out.any_value = true;
    return out;
  }
  out.candidates = rational_roots(condition, kC);
  for (const Rational& cand : out.candidates) {
    const ParametricRMatrix r = assemble_R(g_hat, c_hat, cand);
    if (check_qybe(r.r, Backend::exact).passed()) out.verified.push_back(cand);
  }
  if (out.verified.empty()) throw NoSolution("no rational candidate survives exact verification (condition " +
                                             out.condition + ")");
  return out;
}

}  // namespace ybe
