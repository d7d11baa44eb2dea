#include "ybe/grassmann.hpp"

#include <chrono>

#include "ybe/errors.hpp"
#include "ybe/semiclassical.hpp"

namespace ybe {

namespace {

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void require_pq(std::size_t p, std::size_t q) {
  if (p < 1 || q < 1) throw ParamOutOfRange("grassmann: p and q must be at least 1");
}

std::string entry_name(AlgebraKind algebra) {
  return algebra == AlgebraKind::real ? "grassmann" : "grassmann-" + to_string(algebra);
}

// Index of the realified E_ij * units[unit] on m = K^(p x q).
struct MIndex {
  std::size_t q, d;
  std::size_t operator()(std::size_t i, std::size_t j, std::size_t unit) const { return (i * q + j) * d + unit; }
};

// X -> (V -> X V), applied leg by leg to a two-leg operator on K^p.
RatFuncMatrix left_action(const RatFuncMatrix& m, std::size_t p, std::size_t q, std::size_t d) {
  const std::size_t a = d * p, D = d * p * q;
  const MIndex idx{q, d};
  RatFuncMatrix out({D, D});
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      const RatFunc& x = m(r, c);
      if (is_zero(x)) continue;
      const std::size_t r1 = r / a, r2 = r % a, c1 = c / a, c2 = c % a;
      for (std::size_t j1 = 0; j1 < q; ++j1)
        for (std::size_t j2 = 0; j2 < q; ++j2) {
          const std::size_t row = idx(r1 / d, j1, r1 % d) * D + idx(r2 / d, j2, r2 % d);
          const std::size_t col = idx(c1 / d, j1, c1 % d) * D + idx(c2 / d, j2, c2 % d);
          out(row, col) = x;
        }
    }
  return out;
}

// Y -> (V -> V Y) for K-linear Y, applied leg by leg. Entry (k, j) of Y is
// read from column unit 0 of its realified block; v * y is then right
// multiplication on the units.
RatFuncMatrix right_action(const RatFuncMatrix& m, std::size_t p, std::size_t q, const DivisionAlgebra& alg) {
  const std::size_t d = alg.dim(), b = d * q, D = d * p * q;
  const MIndex idx{q, d};
  RatFuncMatrix out({D, D});
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      const RatFunc& x = m(r, c);
      if (is_zero(x)) continue;
      const std::size_t r1 = r / b, r2 = r % b, c1 = c / b, c2 = c % b;
      if (c1 % d != 0 || c2 % d != 0) continue;
      const std::size_t k1 = r1 / d, u1 = r1 % d, k2 = r2 / d, u2 = r2 % d;
      const std::size_t j1 = c1 / d, j2 = c2 / d;
      for (std::size_t i1 = 0; i1 < p; ++i1)
        for (std::size_t i2 = 0; i2 < p; ++i2)
          for (std::size_t b1 = 0; b1 < d; ++b1)
            for (std::size_t b2 = 0; b2 < d; ++b2) {
              const auto m1 = alg.multiply(b1, u1), m2 = alg.multiply(b2, u2);
              const std::size_t row = idx(i1, j1, m1.index) * D + idx(i2, j2, m2.index);
              const std::size_t col = idx(i1, k1, b1) * D + idx(i2, k2, b2);
              const RatFunc term = m1.sign * m2.sign > 0 ? x : -x;
              out(row, col) += term;
            }
    }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

GrassmannSpace::GrassmannSpace(std::size_t p, std::size_t q, std::size_t legs) : p_(p), q_(q), legs_(legs) {
  require_pq(p, q);
  if (legs < 1 || legs > 3) throw ParamOutOfRange("grassmann: number of legs must be 1, 2 or 3");
  rows_ = power(p, legs);
  cols_ = power(q, legs);
}

std::pair<std::size_t, std::size_t> GrassmannSpace::split(std::size_t index) const {
  const std::size_t pq = p_ * q_;
  std::size_t row = 0, col = 0, scale_r = 1, scale_c = 1;
  for (std::size_t k = 0; k < legs_; ++k) {
    const std::size_t e = index % pq;
    index /= pq;
    row += (e / q_) * scale_r;
    col += (e % q_) * scale_c;
    scale_r *= p_;
    scale_c *= q_;
  }
  return {row, col};
}

std::size_t GrassmannSpace::join(std::size_t row, std::size_t col) const {
  const std::size_t pq = p_ * q_;
  std::size_t index = 0, scale = 1;
  for (std::size_t k = 0; k < legs_; ++k) {
    index += ((row % p_) * q_ + col % q_) * scale;
    row /= p_;
    col /= q_;
    scale *= pq;
  }
  return index;
}

GrassmannSpace build_leg_maps(std::size_t p, std::size_t q, std::size_t legs) { return GrassmannSpace(p, q, legs); }

ComposedRMatrix compose(const RatFuncMatrix& r_p, const RatFuncMatrix& r_q, std::size_t p, std::size_t q,
                        AlgebraKind algebra) {
  require_pq(p, q);
  const DivisionAlgebra alg = DivisionAlgebra::of(algebra);
  const std::size_t d = alg.dim();
  if (r_p.dims() != std::vector<std::size_t>{d * p, d * p} || r_q.dims() != std::vector<std::size_t>{d * q, d * q})
    throw DimensionMismatch("compose: factor leg dimensions must be d*p and d*q");
  ComposedRMatrix out{p, q, algebra, r_p, r_q, {}};
  // Left and right multiplications commute.
  out.r = left_action(r_p, p, q, d) * right_action(r_q, p, q, alg);
  return out;
}

ComposedRMatrix compose_R(std::size_t p, std::size_t q, int k_curv) {
  require_pq(p, q);
  const auto ep = CatalogEntry::sphere(int(p), k_curv), eq = CatalogEntry::sphere(int(q), k_curv);
  ep.validate();
  eq.validate();
  return compose(assemble_R(ep).r, assemble_R(eq).r, p, q);
}

ComposedRMatrix compose_variant(std::size_t p, std::size_t q, AlgebraKind algebra) {
  require_pq(p, q);
  auto factor = [&](std::size_t n) {
    switch (algebra) {
      case AlgebraKind::complex: return CatalogEntry::cpn(int(n));
      case AlgebraKind::quaternion: return CatalogEntry::hpn(int(n));
      default: throw ParamOutOfRange("compose_variant: algebra must be complex or quaternion");
    }
  };
  const auto ep = factor(p), eq = factor(q);
  ep.validate();
  eq.validate();
  return compose(assemble_R(ep).r, assemble_R(eq).r, p, q, algebra);
}

VerificationReport check_qybe_composed(const ComposedRMatrix& r, Backend backend, const SamplerConfig& sampler) {
  VerificationReport rep = check_qybe(r.r, backend, sampler);
  rep.entry = entry_name(r.algebra);
  rep.params = {{"p", int(r.p)}, {"q", int(r.q)}};
  return rep;
}

VerificationReport check_qybe_grassmann(std::size_t p, std::size_t q, Backend backend, const SamplerConfig& sampler) {
  return check_qybe_composed(compose_R(p, q), backend, sampler);
}

VerificationReport expansion_check_grassmann(std::size_t p, std::size_t q) {
  const auto start = std::chrono::steady_clock::now();
  const ComposedRMatrix composed = compose_R(p, q);
  VerificationReport rep;
  rep.check = "expansion";
  rep.entry = entry_name(AlgebraKind::real);
  rep.params = {{"p", int(p)}, {"q", int(q)}};
  rep.backend = Backend::exact;

  const std::size_t D = p * q;
  const RationalMatrix t = represented_casimir_k(grassmann_pair(p, q)).with_dims({D, D});
  const RationalMatrix id = RationalMatrix::identity({D, D});
  const RatFunc inv_s(MultiPoly(1), MultiPoly::variable(Var::s));
  const std::vector<RatFuncMatrix> expected{
      to_ratfunc(id), to_ratfunc(t).scaled(inv_s),
      to_ratfunc((t * t).scaled(make_rational(1, 2)) - id).scaled(inv_s * inv_s)};

  const SeriesRMatrix series = expand_R(composed.r, 2);
  rep.verdict = Verdict::pass;
  for (unsigned k = 0; k <= 2; ++k) {
    const RatFuncMatrix diff = series.coeffs[k] - expected[k];
    std::size_t row = 0, col = 0;
    if (diff.first_nonzero(row, col)) {
      rep.verdict = Verdict::fail;
      rep.witness = "Mismatch: order " + std::to_string(k) + ", entry (" + std::to_string(row) + "," +
                    std::to_string(col) + "): got " + series.coeffs[k](row, col).to_string() + ", expected " +
                    expected[k](row, col).to_string();
      break;
    }
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

}  // namespace ybe
