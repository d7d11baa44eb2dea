#include "ybe/lie.hpp"

#include <algorithm>

#include "ybe/errors.hpp"

namespace ybe {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::real: return "real";
    case AlgebraKind::complex: return "complex";
    case AlgebraKind::quaternion: return "quaternion";
  }
  return "?";
}

DivisionAlgebra DivisionAlgebra::of(AlgebraKind kind) {
  DivisionAlgebra a;
  a.kind_ = kind;
  a.dim_ = kind == AlgebraKind::real ? 1 : kind == AlgebraKind::complex ? 2 : 4;
  return a;
}

DivisionAlgebra::Product DivisionAlgebra::multiply(std::size_t a, std::size_t b) const {
  if (a >= dim_ || b >= dim_) throw DimensionMismatch("unit index out of range");
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  // Remaining cases only occur for H: ij = k, jk = i, ki = j and reversed
  // products pick up a sign.
  const std::size_t c = 6 - a - b;
  const bool cyclic = (a % 3) + 1 == b;
  return {cyclic ? 1 : -1, c};
}

RationalMatrix DivisionAlgebra::left_regular(std::size_t a) const {
  RationalMatrix m({dim_});
  for (std::size_t b = 0; b < dim_; ++b) {
    const Product pr = multiply(a, b);
    m(pr.index, b) = pr.sign;
  }
  return m;
}

RationalMatrix realified_elementary(const DivisionAlgebra& algebra, std::size_t n, std::size_t i,
                                    std::size_t j, std::size_t unit) {
  return kron(elementary<Rational>(n, i, j), algebra.left_regular(unit)).with_dims({n * algebra.dim()});
}

std::vector<RationalMatrix> build_basis(const DivisionAlgebra& algebra, std::size_t n) {
  std::vector<RationalMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < algebra.dim(); ++u) out.push_back(realified_elementary(algebra, n, i, j, u));
  return out;
}

Rational frobenius(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.size() != y.size()) throw DimensionMismatch("frobenius");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(x(i, j)) && !is_zero(y(i, j))) sum += x(i, j) * y(i, j);
  return sum;
}

Rational trace_product(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.size() != y.size()) throw DimensionMismatch("trace_product");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(x(i, j)) && !is_zero(y(j, i))) sum += x(i, j) * y(j, i);
  return sum;
}

MatrixBasis::MatrixBasis(std::vector<RationalMatrix> elements) : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  RationalMatrix f({n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) f(a, b) = f(b, a) = frobenius(elements_[a], elements_[b]);
  auto inv = inverse(f);
  if (!inv) throw SingularGram("basis elements are linearly dependent");
  frobenius_inverse_ = std::move(*inv);
}

std::vector<Rational> MatrixBasis::coordinates(const RationalMatrix& x) const {
  const std::size_t n = size();
  if (x.size() != matrix_dim()) throw NotInSpan("matrix has the wrong size for the basis");
  std::vector<Rational> rhs(n), coords(n);
  for (std::size_t a = 0; a < n; ++a) rhs[a] = frobenius(elements_[a], x);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(frobenius_inverse_(a, b))) coords[a] += frobenius_inverse_(a, b) * rhs[b];
  if (!(combine(coords) == x)) throw NotInSpan("matrix is not in the span of the basis");
  return coords;
}

bool MatrixBasis::contains(const RationalMatrix& x) const {
  try {
    coordinates(x);
    return true;
  } catch (const NotInSpan&) {
    return false;
  }
}

RationalMatrix MatrixBasis::combine(const std::vector<Rational>& coords) const {
  RationalMatrix out({matrix_dim()});
  for (std::size_t a = 0; a < size(); ++a)
    if (!is_zero(coords[a])) out += elements_[a].scaled(coords[a]);
  return out;
}

std::vector<RationalMatrix> independent_subset(const std::vector<RationalMatrix>& spanning) {
  // Row echelon form over the flattened entries.
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows;
  std::vector<RationalMatrix> out;
  for (const auto& m : spanning) {
    std::vector<Rational> v(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) v[i * m.size() + j] = m(i, j);
    for (const auto& [pivot, row] : rows) {
      if (is_zero(v[pivot])) continue;
      const Rational f = v[pivot] / row[pivot];
      for (std::size_t t = 0; t < v.size(); ++t)
        if (!is_zero(row[t])) v[t] -= f * row[t];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !is_zero(x); });
    if (nz == v.end()) continue;
    rows.emplace_back(std::size_t(nz - v.begin()), std::move(v));
    out.push_back(m);
  }
  return out;
}

namespace {

RationalMatrix signature(std::size_t p, std::size_t q) {
  RationalMatrix m({p + q});
  for (std::size_t i = 0; i < p + q; ++i) m(i, i) = i < p ? -1 : 1;
  return m;
}

SymmetricPairDescriptor make_pair(std::string name, const CatalogEntry& entry, AlgebraKind kind, std::size_t n,
                                  const std::function<RationalMatrix(const RationalMatrix&)>& theta) {
  SymmetricPairDescriptor pair;
  pair.name = std::move(name);
  pair.algebra = DivisionAlgebra::of(kind);
  pair.params = entry.params();
  pair.basis = MatrixBasis(build_basis(pair.algebra, n));
  pair.kappa_scale = make_rational(1, long(pair.algebra.dim()));
  const std::size_t dim = pair.basis.size();
  pair.theta = RationalMatrix({dim});
  for (std::size_t a = 0; a < dim; ++a) {
    const auto coords = pair.basis.coordinates(theta(pair.basis[a]));
    for (std::size_t c = 0; c < dim; ++c) pair.theta(c, a) = coords[c];
  }
  return pair;
}

std::vector<Rational> apply_coords(const RationalMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(m(i, j)) && !is_zero(x[j])) y[i] += m(i, j) * x[j];
  return y;
}

}  // namespace

SymmetricPairDescriptor symmetric_pair_for(const CatalogEntry& entry) {
  entry.validate();
  auto neg_transpose = [](const RationalMatrix& x) { return -x.transpose(); };
  switch (entry.id) {
    case EntryId::sphere:
      return make_pair("gl(n,R)/so(n)", entry, AlgebraKind::real, std::size_t(entry.n), neg_transpose);
    case EntryId::cpn:
      // On realified matrices the conjugate transpose is the plain transpose.
      return make_pair("gl(n,C)/u(n)", entry, AlgebraKind::complex, std::size_t(entry.n), neg_transpose);
    case EntryId::hpn:
      return make_pair("gl(n,H)/sp(n)", entry, AlgebraKind::quaternion, std::size_t(entry.n), neg_transpose);
    case EntryId::glpq_glgl: {
      const RationalMatrix i = signature(std::size_t(entry.p), std::size_t(entry.q));
      return make_pair("gl(p+q,R)/gl(p)xgl(q)", entry, AlgebraKind::real, std::size_t(entry.p + entry.q),
                       [i](const RationalMatrix& x) { return i * x * i; });
    }
    case EntryId::glpq_sopq: {
      const RationalMatrix i = signature(std::size_t(entry.p), std::size_t(entry.q));
      return make_pair("gl(p+q,R)/so(p,q)", entry, AlgebraKind::real, std::size_t(entry.p + entry.q),
                       [i](const RationalMatrix& x) { return -(i * x.transpose() * i); });
    }
    case EntryId::gl2n_glnc: {
      const std::size_t n = std::size_t(entry.n);
      RationalMatrix j({2 * n}), j_inv({2 * n});
      for (std::size_t a = 0; a < n; ++a) {
        j(a, a + n) = 1;
        j(a + n, a) = -1;
        j_inv(a, a + n) = -1;
        j_inv(a + n, a) = 1;
      }
      // Conjugation by the complex structure; fixes exactly gl(n,C).
      return make_pair("gl(2n,R)/gl(n,C)", entry, AlgebraKind::real, 2 * n,
                       [j, j_inv](const RationalMatrix& x) { return j * x * j_inv; });
    }
  }
  throw ParamOutOfRange("unknown entry");
}

RationalMatrix involution_apply(const SymmetricPairDescriptor& pair, const RationalMatrix& x) {
  return pair.basis.combine(apply_coords(pair.theta, pair.basis.coordinates(x)));
}

Rational kappa(const SymmetricPairDescriptor& pair, const RationalMatrix& x, const RationalMatrix& y) {
  if (!pair.basis.contains(x) || !pair.basis.contains(y)) throw NotInSpan("kappa argument outside g~");
  return pair.kappa_scale * trace_product(x, y);
}

GramData gram_and_dual(const SymmetricPairDescriptor& pair) {
  const std::size_t n = pair.basis.size();
  GramData out{RationalMatrix({n}), {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      out.gram(a, b) = out.gram(b, a) = pair.kappa_scale * trace_product(pair.basis[a], pair.basis[b]);
  auto inv = inverse(out.gram);
  if (!inv) throw SingularGram(pair.name + ": trace form degenerate on the basis");
  out.inverse = std::move(*inv);
  return out;
}

CasimirPair build_CG(const SymmetricPairDescriptor& pair) {
  const GramData gd = gram_and_dual(pair);
  // G = sum_ab Ginv_ab theta(b_a) (x) b_b, so its coefficient matrix is
  // Theta * Ginv.
  return {{gd.inverse}, {pair.theta * gd.inverse}};
}

RationalMatrix phi_apply(const SymmetricPairDescriptor& pair, const TwoTensor& t, const RationalMatrix& z) {
  const std::size_t n = pair.basis.size();
  std::vector<Rational> k(n), out(n);
  for (std::size_t b = 0; b < n; ++b) k[b] = kappa(pair, pair.basis[b], z);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(t.coeffs(a, b))) out[a] += t.coeffs(a, b) * k[b];
  return pair.basis.combine(out);
}

namespace {

RationalMatrix represent(const SymmetricPairDescriptor& pair, const TwoTensor& t) {
  const std::size_t m = pair.basis.matrix_dim();
  RationalMatrix out({m, m});
  for (std::size_t a = 0; a < pair.basis.size(); ++a)
    for (std::size_t b = 0; b < pair.basis.size(); ++b)
      if (!is_zero(t.coeffs(a, b))) out += kron(pair.basis[a], pair.basis[b]).scaled(t.coeffs(a, b));
  return out;
}

// Projections (b + sign theta b)/2 of every basis element, reduced to a
// basis; origin[i] is the basis index the i-th element came from.
std::vector<RationalMatrix> projections(const SymmetricPairDescriptor& pair, int sign,
                                        std::vector<std::size_t>* origin) {
  std::vector<RationalMatrix> all;
  const Rational half = make_rational(sign, 2);
  for (std::size_t a = 0; a < pair.basis.size(); ++a) {
    std::vector<Rational> col(pair.basis.size());
    for (std::size_t c = 0; c < col.size(); ++c) col[c] = pair.theta(c, a);
    all.push_back(pair.basis[a].scaled(make_rational(1, 2)) + pair.basis.combine(col).scaled(half));
  }
  std::vector<RationalMatrix> kept = independent_subset(all);
  if (origin) {
    origin->clear();
    std::size_t next = 0;
    for (std::size_t a = 0; a < all.size() && next < kept.size(); ++a)
      if (all[a] == kept[next]) {
        origin->push_back(a);
        ++next;
      }
  }
  return kept;
}

std::string label(const SymmetricPairDescriptor& pair, std::size_t a) {
  static const char* units[] = {"", "i", "j", "k"};
  const std::size_t d = pair.algebra.dim();
  const std::size_t n = pair.basis.matrix_dim() / d;
  const std::size_t unit = a % d, ij = a / d;
  return std::string(units[unit]) + "E" + std::to_string(ij / n + 1) + "," + std::to_string(ij % n + 1);
}

}  // namespace

RepresentedPair represent_CG(const SymmetricPairDescriptor& pair) {
  const CasimirPair cg = build_CG(pair);
  return {represent(pair, cg.c), represent(pair, cg.g)};
}

std::vector<RationalMatrix> eigenspace_basis(const SymmetricPairDescriptor& pair, int sign) {
  return projections(pair, sign, nullptr);
}

SplittingResult check_splitting(const SymmetricPairDescriptor& pair) {
  const std::size_t n = pair.basis.size();
  if (!(pair.theta * pair.theta == RationalMatrix::identity({n}))) {
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Rational> e(n);
      e[a] = 1;
      if (apply_coords(pair.theta, apply_coords(pair.theta, e)) != e)
        return {false, "theta^2 != id on " + label(pair, a)};
    }
  }
  std::vector<std::size_t> k_origin, m_origin;
  const auto k = projections(pair, 1, &k_origin);
  const auto m = projections(pair, -1, &m_origin);
  auto in_eigenspace = [&](const RationalMatrix& x, int sign) {
    const RationalMatrix tx = involution_apply(pair, x);
    return sign > 0 ? tx == x : tx == -x;
  };
  struct Case {
    const std::vector<RationalMatrix>* left;
    const std::vector<std::size_t>* lo;
    const char* ln;
    const std::vector<RationalMatrix>* right;
    const std::vector<std::size_t>* ro;
    const char* rn;
    int target;
  };
  const Case cases[] = {{&k, &k_origin, "k", &k, &k_origin, "k", 1},
                        {&k, &k_origin, "k", &m, &m_origin, "m", -1},
                        {&m, &m_origin, "m", &m, &m_origin, "m", 1}};
  for (const Case& c : cases)
    for (std::size_t a = 0; a < c.left->size(); ++a)
      for (std::size_t b = 0; b < c.right->size(); ++b) {
        const RationalMatrix br = commutator((*c.left)[a], (*c.right)[b]);
        if (!in_eigenspace(br, c.target))
          return {false, std::string("[") + c.ln + "(" + label(pair, (*c.lo)[a]) + "), " + c.rn + "(" +
                             label(pair, (*c.ro)[b]) + ")] not in " + (c.target > 0 ? "k" : "m")};
      }
  return {};
}

void require_splitting(const SymmetricPairDescriptor& pair) {
  const SplittingResult r = check_splitting(pair);
  if (!r.ok) throw SplittingViolation(pair.name + ": " + r.detail);
}

SymmetricPairDescriptor corrupt_theta(const SymmetricPairDescriptor& pair, std::size_t a) {
  SymmetricPairDescriptor out = pair;
  for (std::size_t c = 0; c < out.basis.size(); ++c)
    if (!is_zero(out.theta(c, a))) out.theta(c, a) = -out.theta(c, a);
  out.name += " (corrupted)";
  return out;
}

GeometricPair grassmann_pair(std::size_t p, std::size_t q, const Rational& form_scale) {
  if (p < 1 || q < 1) throw ParamOutOfRange("grassmann pair needs p, q >= 1");
  const std::size_t n = p + q;
  auto gen = [n](std::size_t a, std::size_t b) {
    return elementary<Rational>(n, a, b) - elementary<Rational>(n, b, a);
  };
  std::vector<RationalMatrix> k, m;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if ((a < p) == (b < p)) k.push_back(gen(a, b));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) m.push_back(gen(i, p + j));
  return {"so(" + std::to_string(n) + ")/so(" + std::to_string(p) + ")xso(" + std::to_string(q) + ")",
          MatrixBasis(std::move(k)), MatrixBasis(std::move(m)), form_scale};
}

GeometricPair change_basis(const GeometricPair& pair, const RationalMatrix& k_change,
                           const RationalMatrix& m_change) {
  auto recombine = [](const MatrixBasis& basis, const RationalMatrix& change) {
    if (change.size() != basis.size()) throw DimensionMismatch("change_basis: wrong size");
    std::vector<RationalMatrix> out;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      std::vector<Rational> col(basis.size());
      for (std::size_t b = 0; b < basis.size(); ++b) col[b] = change(b, a);
      out.push_back(basis.combine(col));
    }
    return MatrixBasis(std::move(out));
  };
  return {pair.name, recombine(pair.k_basis, k_change), recombine(pair.m_basis, m_change), pair.form_scale};
}

SplittingResult check_splitting(const GeometricPair& pair) {
  const MatrixBasis* spaces[] = {&pair.k_basis, &pair.m_basis};
  const char* names[] = {"k", "m"};
  for (int x = 0; x < 2; ++x)
    for (int y = x; y < 2; ++y) {
      const MatrixBasis& target = (x == y) ? pair.k_basis : pair.m_basis;
      for (std::size_t a = 0; a < spaces[x]->size(); ++a)
        for (std::size_t b = 0; b < spaces[y]->size(); ++b)
          if (!target.contains(commutator((*spaces[x])[a], (*spaces[y])[b])))
            return {false, std::string("[") + names[x] + std::to_string(a) + ", " + names[y] + std::to_string(b) +
                               "] not in " + (x == y ? "k" : "m")};
    }
  return {};
}

RationalMatrix rho_k(const GeometricPair& pair, std::size_t a) {
  const std::size_t dm = pair.m_basis.size();
  RationalMatrix out({dm});
  for (std::size_t b = 0; b < dm; ++b) {
    const auto col = pair.m_basis.coordinates(commutator(pair.k_basis[a], pair.m_basis[b]));
    for (std::size_t c = 0; c < dm; ++c) out(c, b) = col[c];
  }
  return out;
}

RationalMatrix metric_m(const GeometricPair& pair) {
  const std::size_t dm = pair.m_basis.size();
  RationalMatrix g({dm});
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = 0; b < dm; ++b) g(a, b) = pair.form_scale * trace_product(pair.m_basis[a], pair.m_basis[b]);
  return g;
}

CurvatureTensor curvature_from_pair(const GeometricPair& pair) {
  const SplittingResult split = check_splitting(pair);
  if (!split.ok) throw SplittingViolation(pair.name + ": " + split.detail);
  const std::size_t d = pair.m_basis.size();
  CurvatureTensor r{d, std::vector<Rational>(d * d * d * d), metric_m(pair)};
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      const RationalMatrix xy = commutator(pair.m_basis[j], pair.m_basis[k]);
      for (std::size_t l = 0; l < d; ++l) {
        const auto coords = pair.m_basis.coordinates(-commutator(xy, pair.m_basis[l]));
        for (std::size_t i = 0; i < d; ++i) r.at(i, j, k, l) = coords[i];
      }
    }
  return r;
}

RationalMatrix curvature_operator(const CurvatureTensor& r) {
  const std::size_t d = r.dim;
  auto ginv = inverse(r.metric);
  if (!ginv) throw SingularGram("metric on m is degenerate");
  RationalMatrix out({d, d});
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t dd = 0; dd < d; ++dd)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k) {
          Rational sum = 0;
          for (std::size_t j = 0; j < d; ++j)
            if (!is_zero((*ginv)(dd, j))) sum += (*ginv)(dd, j) * r.at(c, j, k, l);
          out(c * d + dd, l * d + k) = sum;
        }
  return out;
}

RationalMatrix represented_casimir_k(const GeometricPair& pair) {
  const std::size_t dk = pair.k_basis.size(), dm = pair.m_basis.size();
  RationalMatrix gamma({dk});
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = 0; b < dk; ++b) gamma(a, b) = pair.form_scale * trace_product(pair.k_basis[a], pair.k_basis[b]);
  auto ginv = inverse(gamma);
  if (!ginv) throw SingularGram(pair.name + ": form degenerate on k");
  std::vector<RationalMatrix> rho;
  for (std::size_t a = 0; a < dk; ++a) rho.push_back(rho_k(pair, a));
  RationalMatrix t({dm, dm});
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = 0; b < dk; ++b)
      if (!is_zero((*ginv)(a, b))) t += kron(rho[a], rho[b]).scaled((*ginv)(a, b));
  return t;
}

Rational proportionality_constant(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.dims() != rhs.dims()) throw DimensionMismatch("proportionality_constant");
  std::size_t row = 0, col = 0;
  if (!rhs.first_nonzero(row, col)) throw NoProportionality("reference matrix is zero");
  const Rational c = lhs(row, col) / rhs(row, col);
  if (is_zero(c)) throw NoProportionality("zero multiple at entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
  const RationalMatrix diff = lhs - rhs.scaled(c);
  if (diff.first_nonzero(row, col))
    throw NoProportionality("ratio " + to_string(c) + " fails at entry (" + std::to_string(row) + "," +
                            std::to_string(col) + ")");
  return c;
}

Rational verify_curvature_casimir(const GeometricPair& pair) {
  return proportionality_constant(curvature_operator(curvature_from_pair(pair)), represented_casimir_k(pair));
}

}  // namespace ybe
