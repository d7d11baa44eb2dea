#include "ybe/verify.hpp"

#include <chrono>

#include "ybe/errors.hpp"

namespace ybe {

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "sampled"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::pole_retry_exhausted: return "pole-retry-exhausted";
  }
  return "?";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "sampled") return Backend::sampled;
  throw UsageError("unknown mode '" + std::string(text) + "'");
}

RationalSampler::RationalSampler(const SamplerConfig& config) : config_(config), engine_(config.seed) {
  if (config.numerator_bound < 1 || config.denominator_bound < 1 || config.num_points < 1 || config.max_retries < 1)
    throw UsageError("sampler bounds must be positive");
}

Rational RationalSampler::next() {
  const std::uint64_t span = 2 * std::uint64_t(config_.numerator_bound) + 1;
  const long num = long(engine_() % span) - config_.numerator_bound;
  const long den = long(engine_() % std::uint64_t(config_.denominator_bound)) + 1;
  return make_rational(num, den);
}

Point RationalSampler::next_point(const std::vector<Var>& vars) {
  Point p;
  for (Var x : vars) p[x] = next();
  return p;
}

SpectralArgs SpectralArgs::difference() {
  const MultiPoly u = MultiPoly::variable(Var::u), v = MultiPoly::variable(Var::v);
  return {u, u + v, v};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string entry_text(std::size_t row, std::size_t col, const std::string& value) {
  return "entry (" + std::to_string(row) + "," + std::to_string(col) + "): " + value;
}

std::string point_text(const Point& p) {
  std::string out;
  for (const auto& [x, val] : p) {
    if (!out.empty()) out += ", ";
    out += std::string(1, var_name(x)) + "=" + to_string(val);
  }
  return out;
}

std::size_t leg_dim_of(const RatFuncMatrix& r, const char* what) {
  if (r.legs() != 2 || r.dims()[0] != r.dims()[1])
    throw DimensionMismatch(std::string(what) + ": expected an operator on two equal legs");
  return r.dims()[0];
}

template <class T>
struct ThreeLegs {
  LegMatrix<T> m12, m13, m23;
};

template <class T>
ThreeLegs<T> embed3(const LegMatrix<T>& a12, const LegMatrix<T>& a13, const LegMatrix<T>& a23) {
  const std::size_t n = a12.dims()[0];
  const std::vector<std::size_t> amb{n, n, n};
  return {embed_on_legs(a12, {0, 1}, amb), embed_on_legs(a13, {0, 2}, amb), embed_on_legs(a23, {1, 2}, amb)};
}

Rational eval_poly(const MultiPoly& p, const Point& pt) { return p.eval(pt); }

// Evaluates r(s, h) at the three spectral values of a sample point. Returns
// false on a pole.
bool evaluate_legs(const RatFuncMatrix& r, const SpectralArgs& args, const Point& pt, ThreeLegs<Rational>& out) {
  try {
    auto at = [&](const MultiPoly& arg) {
      Point q{{Var::s, eval_poly(arg, pt)}};
      if (auto it = pt.find(Var::h); it != pt.end()) q[Var::h] = it->second;
      return eval_all(r, q);
    };
    out = embed3(at(args.a12), at(args.a13), at(args.a23));
    return true;
  } catch (const EvalPole&) {
    return false;
  }
}

using Residual = std::function<RationalMatrix(const ThreeLegs<Rational>&)>;

void run_sampled(VerificationReport& rep, const RatFuncMatrix& r, const SamplerConfig& cfg, const SpectralArgs& args,
                 const std::vector<Var>& vars, const Residual& residual) {
  rep.seed = cfg.seed;
  RationalSampler sampler(cfg);
  for (int k = 0; k < cfg.num_points; ++k) {
    ThreeLegs<Rational> legs;
    Point pt;
    bool found = false;
    for (int attempt = 0; attempt < cfg.max_retries && !found; ++attempt) {
      pt = sampler.next_point(vars);
      // h = 0 makes every catalog R the identity; such points test nothing.
      if (auto it = pt.find(Var::h); it != pt.end() && is_zero(it->second)) continue;
      found = evaluate_legs(r, args, pt, legs);
    }
    if (!found) {
      rep.verdict = Verdict::pole_retry_exhausted;
      rep.witness = "no pole-free point after " + std::to_string(cfg.max_retries) + " draws";
      return;
    }
    rep.points.push_back(pt);
    const RationalMatrix res = residual(legs);
    std::size_t row = 0, col = 0;
    if (res.first_nonzero(row, col)) {
      rep.verdict = Verdict::fail;
      rep.witness = "at " + point_text(pt) + ", " + entry_text(row, col, to_string(res(row, col)));
      return;
    }
  }
  rep.verdict = Verdict::pass;
}

struct ClearedFactor {
  PolyMatrix p;
  MultiPoly den;
};

ClearedFactor cleared(const RatFuncMatrix& r) {
  ClearedFactor f;
  f.p = clear_denominators(r, f.den);
  return f;
}

ClearedFactor cleared(const RatFuncMatrix& r, const MultiPoly& arg) { return cleared(subst_all(r, Var::s, arg)); }

void finish_exact(VerificationReport& rep, const PolyMatrix& residual, const MultiPoly& den) {
  std::size_t row = 0, col = 0;
  if (residual.first_nonzero(row, col)) {
    rep.verdict = Verdict::fail;
    rep.witness = entry_text(row, col, RatFunc(residual(row, col), den).to_string());
  } else {
    rep.verdict = Verdict::pass;
  }
}

}  // namespace

VerificationReport check_cybe(const RatFuncMatrix& r, Backend backend, const SamplerConfig& sampler,
                              const SpectralArgs& args) {
  const auto start = Clock::now();
  leg_dim_of(r, "check_cybe");
  VerificationReport rep;
  rep.check = "cybe";
  rep.backend = backend;
  if (backend == Backend::exact) {
    const ClearedFactor f12 = cleared(r, args.a12), f13 = cleared(r, args.a13), f23 = cleared(r, args.a23);
    const auto p = embed3(f12.p, f13.p, f23.p);
    // Common denominator d12 d13 d23 multiplied through.
    const PolyMatrix res = commutator(p.m12, p.m13).map([&](const MultiPoly& x) { return x * f23.den; }) +
                           commutator(p.m12, p.m23).map([&](const MultiPoly& x) { return x * f13.den; }) +
                           commutator(p.m13, p.m23).map([&](const MultiPoly& x) { return x * f12.den; });
    finish_exact(rep, res, f12.den * f13.den * f23.den);
  } else {
    run_sampled(rep, r, sampler, args, {Var::u, Var::v}, [](const ThreeLegs<Rational>& l) {
      return commutator(l.m12, l.m13) + commutator(l.m12, l.m23) + commutator(l.m13, l.m23);
    });
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport check_cybe_index(const CurvatureTensor& r) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "cybe-index";
  rep.backend = Backend::exact;
  const RationalMatrix k = curvature_operator(r);
  const std::size_t d = r.dim;
  // M(i,k,j,l) is the coefficient of E_ij (x) E_kl.
  auto M = [&](std::size_t i, std::size_t kk, std::size_t j, std::size_t l) -> const Rational& {
    return k(i * d + kk, j * d + l);
  };
  auto fail = [&](const char* which, std::size_t i, std::size_t n, std::size_t kk, std::size_t l, std::size_t rr,
                  std::size_t s, const Rational& v) {
    rep.verdict = Verdict::fail;
    rep.witness = std::string(which) + " at (i,n,k,l,r,s)=(" + std::to_string(i) + "," + std::to_string(n) + "," +
                  std::to_string(kk) + "," + std::to_string(l) + "," + std::to_string(rr) + "," + std::to_string(s) +
                  "): " + to_string(v);
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t n = 0; n < d; ++n)
      for (std::size_t kk = 0; kk < d; ++kk)
        for (std::size_t l = 0; l < d; ++l)
          for (std::size_t rr = 0; rr < d; ++rr)
            for (std::size_t s = 0; s < d; ++s) {
              Rational four = 0, mirror = 0;
              for (std::size_t m = 0; m < d; ++m) {
                four += M(i, kk, m, l) * M(m, rr, n, s) - M(m, kk, n, l) * M(i, rr, m, s) +
                        M(i, kk, n, m) * M(m, rr, l, s) - M(i, m, n, l) * M(kk, rr, m, s);
                mirror += M(i, kk, n, m) * M(m, rr, l, s) - M(i, m, n, l) * M(kk, rr, m, s) +
                          M(i, rr, n, m) * M(kk, m, l, s) - M(kk, rr, l, m) * M(i, m, n, s);
              }
              if (!is_zero(four)) {
                fail("four-term identity", i, n, kk, l, rr, s, four);
                rep.elapsed_ms = ms_since(start);
                return rep;
              }
              if (!is_zero(mirror)) {
                fail("mirror identity", i, n, kk, l, rr, s, mirror);
                rep.elapsed_ms = ms_since(start);
                return rep;
              }
            }
  rep.verdict = Verdict::pass;
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport check_qybe(const RatFuncMatrix& r, Backend backend, const SamplerConfig& sampler,
                              const SpectralArgs& args) {
  const auto start = Clock::now();
  leg_dim_of(r, "check_qybe");
  VerificationReport rep;
  rep.check = "qybe";
  rep.backend = backend;
  if (backend == Backend::exact) {
    rep = check_qybe_legs(subst_all(r, Var::s, args.a12), subst_all(r, Var::s, args.a13),
                          subst_all(r, Var::s, args.a23));
  } else {
    run_sampled(rep, r, sampler, args, {Var::u, Var::v, Var::h}, [](const ThreeLegs<Rational>& l) {
      return l.m12 * l.m13 * l.m23 - l.m23 * l.m13 * l.m12;
    });
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

VerificationReport check_qybe_legs(const RatFuncMatrix& r12, const RatFuncMatrix& r13, const RatFuncMatrix& r23) {
  const auto start = Clock::now();
  leg_dim_of(r12, "check_qybe");
  VerificationReport rep;
  rep.check = "qybe";
  rep.backend = Backend::exact;
  // Scalars commute, so clearing each factor's denominator separately
  // rescales both sides by the same d12 d13 d23.
  const ClearedFactor f12 = cleared(r12), f13 = cleared(r13), f23 = cleared(r23);
  const auto p = embed3(f12.p, f13.p, f23.p);
  const PolyMatrix res = p.m12 * p.m13 * p.m23 - p.m23 * p.m13 * p.m12;
  finish_exact(rep, res, f12.den * f13.den * f23.den);
  rep.elapsed_ms = ms_since(start);
  return rep;
}

namespace {

IdentityTerm T(const Rational& c, std::initializer_list<const char*> f) {
  return {c, std::vector<std::string>(f.begin(), f.end())};
}

// (c)-(k), shared by all three projective-type entries.
std::vector<IdentityChain> common_chains() {
  const Rational one = 1, neg = -1;
  return {
      {"c", {T(one, {"C12", "G13", "G23"}), T(one, {"G23", "G13", "C12"}), T(neg, {"G23"})}},
      {"d", {T(one, {"G12", "G13", "C23"}), T(one, {"C23", "G13", "G12"}), T(neg, {"G12"})}},
      {"e", {T(one, {"C12", "C13", "C23"}), T(one, {"C23", "C13", "C12"}), T(one, {"C13"})}},
      {"f", {T(one, {"G13", "G23"}), T(neg, {"C12", "G23"}), T(neg, {"G13", "C12"})}},
      {"g", {T(one, {"G12", "G13"}), T(neg, {"C23", "G13"}), T(neg, {"G12", "C23"})}},
      {"h", {T(one, {"G13", "G12"}), T(neg, {"C23", "G12"}), T(neg, {"G13", "C23"})}},
      {"i", {T(one, {"G23", "G13"}), T(neg, {"C12", "G13"}), T(neg, {"G23", "C12"})}},
      {"j", {T(one, {"C12", "C13"}), T(one, {"C23", "C12"}), T(one, {"C13", "C23"})}},
      {"k", {T(one, {"C13", "C12"}), T(one, {"C12", "C23"}), T(one, {"C23", "C13"})}},
  };
}

}  // namespace

std::vector<IdentityChain> identity_suite(const CatalogEntry& entry) {
  entry.validate();
  const Rational one = 1, neg = -1, half = make_rational(1, 2);
  std::vector<IdentityChain> out;
  switch (entry.id) {
    case EntryId::sphere: {
      const Rational inv_n = make_rational(1, entry.n);
      out.push_back({"a",
                     {T(one, {"G12", "G23"}), T(neg, {"C13", "G23"}), T(neg, {"G12", "C13"}),
                      T(neg, {"G12", "G13", "G23"}), T(inv_n, {"G12", "C13", "G23"}), T(neg, {"G12", "C13", "C23"}),
                      T(neg, {"C23", "G13", "C12"}), T(neg, {"C12", "C13", "G23"})}});
      out.push_back({"b",
                     {T(one, {"G23", "G12"}), T(neg, {"G23", "C13"}), T(neg, {"C13", "G12"}),
                      T(neg, {"G23", "G13", "G12"}), T(inv_n, {"G23", "C13", "G12"}), T(neg, {"G23", "C13", "C12"}),
                      T(neg, {"C12", "G13", "C23"}), T(neg, {"C23", "C13", "G12"})}});
      break;
    }
    case EntryId::cpn: {
      const Rational w = make_rational(1, 2 * entry.n);
      out.push_back({"a", {T(one, {"G12", "G23"}), T(neg, {"C13", "G23"}), T(neg, {"G12", "C13"}),
                           T(w, {"G12", "C13", "G23"})}});
      out.push_back({"b", {T(one, {"G23", "G12"}), T(neg, {"G23", "C13"}), T(neg, {"C13", "G12"}),
                           T(w, {"G23", "C13", "G12"})}});
      break;
    }
    case EntryId::hpn: {
      const Rational w = make_rational(1, 4 * entry.n);
      out.push_back({"a",
                     {T(one, {"G12", "G23"}), T(neg, {"C13", "G23"}), T(neg, {"G12", "C13"}),
                      T(half, {"G12", "G13", "G23"}), T(w, {"G12", "C13", "G23"}), T(half, {"G12", "C13", "C23"}),
                      T(half, {"C23", "G13", "C12"}), T(half, {"C12", "C13", "G23"})}});
      out.push_back({"b",
                     {T(one, {"G23", "G12"}), T(neg, {"G23", "C13"}), T(neg, {"C13", "G12"}),
                      T(half, {"G23", "G13", "G12"}), T(w, {"G23", "C13", "G12"}), T(half, {"G23", "C13", "C12"}),
                      T(half, {"C12", "G13", "C23"}), T(half, {"C23", "C13", "G12"})}});
      break;
    }
    default: throw ParamOutOfRange(to_string(entry.id) + " has no stated identity suite");
  }
  for (auto& chain : common_chains()) out.push_back(std::move(chain));
  return out;
}

namespace {

std::string term_text(const IdentityTerm& t) {
  std::string out = t.coeff == 1 ? "" : t.coeff == -1 ? "-" : to_string(t.coeff) + " ";
  for (const auto& f : t.factors) out += f;
  return out;
}

}  // namespace

std::vector<VerificationReport> check_identity_suite(const RationalMatrix& g_hat, const RationalMatrix& c_hat,
                                                     const std::vector<IdentityChain>& chains) {
  const auto g = embed3(g_hat, g_hat, g_hat), c = embed3(c_hat, c_hat, c_hat);
  const std::map<std::string, const RationalMatrix*> factors{{"G12", &g.m12}, {"G13", &g.m13}, {"G23", &g.m23},
                                                             {"C12", &c.m12}, {"C13", &c.m13}, {"C23", &c.m23}};
  auto value = [&](const IdentityTerm& t) {
    RationalMatrix acc = RationalMatrix::identity(g.m12.dims());
    for (const auto& f : t.factors) {
      auto it = factors.find(f);
      if (it == factors.end()) throw UsageError("unknown identity factor " + f);
      acc = acc * *it->second;
    }
    return acc.scaled(t.coeff);
  };
  std::vector<VerificationReport> out;
  for (const auto& chain : chains) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.check = "identity-" + chain.letter;
    rep.backend = Backend::exact;
    std::vector<RationalMatrix> values;
    for (const auto& t : chain.terms) values.push_back(value(t));
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
      const RationalMatrix diff = values[t] - values[t + 1];
      std::size_t row = 0, col = 0;
      if (diff.first_nonzero(row, col)) {
        rep.verdict = Verdict::fail;
        rep.witness = "IdentityFail: (" + chain.letter + ") link " + std::to_string(t + 1) + ": " + term_text(chain.terms[t]) +
                      " = " + term_text(chain.terms[t + 1]) + " fails at " +
                      entry_text(row, col, to_string(values[t](row, col)) + " vs " + to_string(values[t + 1](row, col)));
        break;
      }
    }
    rep.elapsed_ms = ms_since(start);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<VerificationReport> check_identity_suite(const CatalogEntry& entry) {
  const auto chains = identity_suite(entry);
  const GCPair gc = build_GC_closed(entry);
  auto reports = check_identity_suite(gc.g_hat, gc.c_hat, chains);
  for (auto& r : reports) {
    r.entry = to_string(entry.id);
    r.params = entry.params();
  }
  return reports;
}

VerificationReport check_unitarity(const RatFuncMatrix& r) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.check = "unitarity";
  rep.backend = Backend::exact;
  const RatFuncMatrix prod = r * subst_all(r, Var::s, -MultiPoly::variable(Var::s));
  const RatFunc f = prod(0, 0);
  rep.verdict = Verdict::pass;
  for (std::size_t i = 0; i < prod.size() && rep.passed(); ++i)
    for (std::size_t j = 0; j < prod.size(); ++j) {
      const RatFunc& x = prod(i, j);
      if (i == j ? x == f : x.is_zero()) continue;
      rep.verdict = Verdict::fail;
      rep.witness = "NotProportional: " + entry_text(i, j, x.to_string()) + " vs factor " + f.to_string();
      break;
    }
  if (rep.passed()) rep.details.emplace_back("factor", f.to_string());
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace ybe
