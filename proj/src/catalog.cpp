#include "ybe/catalog.hpp"

#include "ybe/errors.hpp"
#include "ybe/lie.hpp"

namespace ybe {

std::vector<CatalogInfo> list_entries() {
  return {
      {EntryId::sphere, param_names(EntryId::sphere), "n", "constant curvature k: gl(n,R) / so(n)"},
      {EntryId::cpn, param_names(EntryId::cpn), "2n", "complex projective space: gl(n,C) / u(n)"},
      {EntryId::hpn, param_names(EntryId::hpn), "4n", "quaternionic projective space: gl(n,H) / sp(n)"},
      {EntryId::glpq_glgl, param_names(EntryId::glpq_glgl), "p+q", "gl(p+q,R) / gl(p) x gl(q)"},
      {EntryId::glpq_sopq, param_names(EntryId::glpq_sopq), "p+q", "gl(p+q,R) / so(p,q)"},
      {EntryId::gl2n_glnc, param_names(EntryId::gl2n_glnc), "2n", "gl(2n,R) / gl(n,C)"},
  };
}

namespace {

RationalMatrix e(std::size_t n, std::size_t i, std::size_t j) { return elementary<Rational>(n, i, j); }

// Sum over units q of sign(q) (qE_ij) (x) (qE_kl) with the given index
// pattern, realified: sign is +1 for the unit 1 and -1 otherwise.
GCPair projective(const CatalogEntry& entry, AlgebraKind kind) {
  const DivisionAlgebra alg = DivisionAlgebra::of(kind);
  const std::size_t n = std::size_t(entry.n), m = n * alg.dim();
  GCPair out{RationalMatrix({m, m}), RationalMatrix({m, m})};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < alg.dim(); ++u) {
        const Rational sign = u == 0 ? 1 : -1;
        const RationalMatrix qij = realified_elementary(alg, n, i, j, u);
        out.g_hat -= kron(qij, qij);
        out.c_hat += kron(qij, realified_elementary(alg, n, j, i, u)).scaled(sign);
      }
  return out;
}

}  // namespace

GCPair build_GC_closed(const CatalogEntry& entry) {
  entry.validate();
  switch (entry.id) {
    case EntryId::sphere: {
      const std::size_t n = std::size_t(entry.n);
      GCPair out{RationalMatrix({n, n}), RationalMatrix({n, n})};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          out.g_hat -= kron(e(n, i, j), e(n, i, j));
          out.c_hat += kron(e(n, i, j), e(n, j, i));
        }
      return out;
    }
    case EntryId::cpn: return projective(entry, AlgebraKind::complex);
    case EntryId::hpn: return projective(entry, AlgebraKind::quaternion);
    case EntryId::glpq_glgl:
    case EntryId::glpq_sopq: {
      const std::size_t p = std::size_t(entry.p), n = std::size_t(entry.p + entry.q);
      const bool iv = entry.id == EntryId::glpq_glgl;
      GCPair out{RationalMatrix({n, n}), RationalMatrix({n, n})};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // Same block (both in P or both in Q) versus mixed blocks.
          const Rational same = (i < p) == (j < p) ? 1 : -1;
          if (iv)
            out.g_hat += kron(e(n, i, j), e(n, j, i)).scaled(same);
          else
            out.g_hat -= kron(e(n, i, j), e(n, i, j)).scaled(same);
          out.c_hat += kron(e(n, i, j), e(n, j, i));
        }
      return out;
    }
    case EntryId::gl2n_glnc: {
      const std::size_t n = std::size_t(entry.n), m = 2 * n;
      GCPair out{RationalMatrix({m, m}), RationalMatrix({m, m})};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          out.g_hat += kron(e(m, i + n, j + n), e(m, j, i));
          out.g_hat += kron(e(m, i, j), e(m, j + n, i + n));
          out.g_hat -= kron(e(m, i, j + n), e(m, j, i + n));
          out.g_hat -= kron(e(m, i + n, j), e(m, j + n, i));
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.c_hat += kron(e(m, i, j), e(m, j, i));
      return out;
    }
  }
  throw ParamOutOfRange("unknown entry");
}

RatFunc shifted_coefficient(const Rational& c) {
  const MultiPoly h = MultiPoly::variable(Var::h);
  return RatFunc(h, MultiPoly::variable(Var::s) + h.scaled(c));
}

CoefficientPair coefficients(const CatalogEntry& entry) {
  entry.validate();
  const Rational c_a = entry.shift_constant();
  return {c_a, Rational(0), shifted_coefficient(c_a), shifted_coefficient(0)};
}

ParametricRMatrix assemble_R(const RationalMatrix& g_hat, const RationalMatrix& c_hat, const Rational& c_a,
                             const Rational& c_b, std::string label) {
  ParametricRMatrix out;
  out.label = std::move(label);
  out.g_hat = g_hat;
  out.c_hat = c_hat;
  out.coeffs = {c_a, c_b, shifted_coefficient(c_a), shifted_coefficient(c_b)};
  const RatFuncMatrix g = to_ratfunc(g_hat), c = to_ratfunc(c_hat);
  out.r = RatFuncMatrix::identity(g_hat.dims()) + g.scaled(out.coeffs.a) + c.scaled(out.coeffs.b);
  return out;
}

ParametricRMatrix assemble_R(const CatalogEntry& entry) {
  const GCPair gc = build_GC_closed(entry);
  const CoefficientPair co = coefficients(entry);
  return assemble_R(gc.g_hat, gc.c_hat, co.c_a, co.c_b, entry.label());
}

RatFuncMatrix classical_r(const RationalMatrix& g_hat, const RationalMatrix& c_hat) {
  return to_ratfunc(c_hat + g_hat).scaled(RatFunc(MultiPoly(1), MultiPoly::variable(Var::s)));
}

RatFuncMatrix classical_r(const CatalogEntry& entry) {
  const GCPair gc = build_GC_closed(entry);
  return classical_r(gc.g_hat, gc.c_hat);
}

CrosscheckResult crosscheck_closed_vs_computed(const CatalogEntry& entry) {
  const GCPair closed = build_GC_closed(entry);
  const RepresentedPair computed = represent_CG(symmetric_pair_for(entry));
  const std::pair<const char*, std::pair<const RationalMatrix*, const RationalMatrix*>> pairs[] = {
      {"G^", {&closed.g_hat, &computed.g_hat}}, {"C^", {&closed.c_hat, &computed.c_hat}}};
  for (const auto& [name, mats] : pairs) {
    std::size_t row = 0, col = 0;
    if ((*mats.first - *mats.second).first_nonzero(row, col))
      return {false, std::string(name) + " differs at (" + std::to_string(row) + "," + std::to_string(col) +
                         "): catalog " + to_string((*mats.first)(row, col)) + ", computed " +
                         to_string((*mats.second)(row, col))};
  }
  return {};
}

}  // namespace ybe
