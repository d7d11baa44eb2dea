#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ybe/entry.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

enum class AlgebraKind { real, complex, quaternion };

std::string to_string(AlgebraKind kind);

/// R, C or H with the unit basis (1), (1,i) or (1,i,j,k).
class DivisionAlgebra {
 public:
  static DivisionAlgebra of(AlgebraKind kind);

  AlgebraKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }

  /// units[a] * units[b] = sign * units[index].
  struct Product {
    int sign;
    std::size_t index;
  };
  Product multiply(std::size_t a, std::size_t b) const;

  /// Matrix of left multiplication by units[a] on the algebra, columns
  /// indexed by the unit basis.
  RationalMatrix left_regular(std::size_t a) const;

 private:
  AlgebraKind kind_ = AlgebraKind::real;
  std::size_t dim_ = 1;
};

/// Realified (dn)x(dn) matrices {E_ij * q}; index (i*n + j)*d + unit.
std::vector<RationalMatrix> build_basis(const DivisionAlgebra& algebra, std::size_t n);

/// Realification of the matrix whose only entry is the unit u at (i, j).
RationalMatrix realified_elementary(const DivisionAlgebra& algebra, std::size_t n, std::size_t i,
                                    std::size_t j, std::size_t unit);

/// Linearly independent list of single-leg rational matrices with exact
/// coordinate extraction.
class MatrixBasis {
 public:
  MatrixBasis() = default;
  /// Throws SingularGram if the matrices are linearly dependent.
  explicit MatrixBasis(std::vector<RationalMatrix> elements);

  std::size_t size() const { return elements_.size(); }
  const RationalMatrix& operator[](std::size_t a) const { return elements_[a]; }
  const std::vector<RationalMatrix>& elements() const { return elements_; }
  std::size_t matrix_dim() const { return elements_.empty() ? 0 : elements_[0].size(); }

  /// Throws NotInSpan.
  std::vector<Rational> coordinates(const RationalMatrix& x) const;
  bool contains(const RationalMatrix& x) const;
  RationalMatrix combine(const std::vector<Rational>& coords) const;

 private:
  std::vector<RationalMatrix> elements_;
  RationalMatrix frobenius_inverse_;
};

/// Extracts a basis of the span of the given matrices (first-come order).
std::vector<RationalMatrix> independent_subset(const std::vector<RationalMatrix>& spanning);

/// Frobenius pairing sum_ij X_ij Y_ij.
Rational frobenius(const RationalMatrix& x, const RationalMatrix& y);
/// tr(XY) without forming the product.
Rational trace_product(const RationalMatrix& x, const RationalMatrix& y);

/// g~ with its basis, involution and trace form.
struct SymmetricPairDescriptor {
  std::string name;
  DivisionAlgebra algebra;
  std::map<std::string, int> params;
  MatrixBasis basis;
  /// Column a holds the coordinates of theta(basis[a]).
  RationalMatrix theta;
  /// kappa(X, Y) = kappa_scale * tr(XY).
  Rational kappa_scale;
};

/// The pair behind a catalog entry, built from its defining data.
SymmetricPairDescriptor symmetric_pair_for(const CatalogEntry& entry);

/// Throws NotInSpan.
RationalMatrix involution_apply(const SymmetricPairDescriptor& pair, const RationalMatrix& x);
/// Throws NotInSpan.
Rational kappa(const SymmetricPairDescriptor& pair, const RationalMatrix& x, const RationalMatrix& y);

struct GramData {
  RationalMatrix gram;
  RationalMatrix inverse;
};
/// Throws SingularGram.
GramData gram_and_dual(const SymmetricPairDescriptor& pair);

/// Element of g~ (x) g~: coeffs(a, b) multiplies basis[a] (x) basis[b].
struct TwoTensor {
  RationalMatrix coeffs;
};

struct CasimirPair {
  TwoTensor c;
  TwoTensor g;
};
CasimirPair build_CG(const SymmetricPairDescriptor& pair);

/// Phi(T)(Z) = sum T_ab basis[a] kappa(basis[b], Z).
RationalMatrix phi_apply(const SymmetricPairDescriptor& pair, const TwoTensor& t, const RationalMatrix& z);

struct RepresentedPair {
  RationalMatrix c_hat;
  RationalMatrix g_hat;
};
/// Images under rho (x) rho, rho the realified matrix action on m.
RepresentedPair represent_CG(const SymmetricPairDescriptor& pair);

/// Basis of the +1 (k) or -1 (m) eigenspace of theta inside g~.
std::vector<RationalMatrix> eigenspace_basis(const SymmetricPairDescriptor& pair, int sign);

struct SplittingResult {
  bool ok = true;
  std::string detail;
};

/// [k,k] in k, [k,m] in m, [m,m] in k for the eigenspaces of theta, plus
/// theta^2 = id. Reports the first offending pair.
SplittingResult check_splitting(const SymmetricPairDescriptor& pair);
/// Same check, throwing SplittingViolation.
void require_splitting(const SymmetricPairDescriptor& pair);

/// Copy of the pair with theta(basis[a]) negated.
SymmetricPairDescriptor corrupt_theta(const SymmetricPairDescriptor& pair, std::size_t a);

// Geometric side: a matrix Lie algebra g = k + m with explicit bases.

struct GeometricPair {
  std::string name;
  MatrixBasis k_basis;
  MatrixBasis m_basis;
  /// Invariant form = form_scale * tr(XY).
  Rational form_scale;
};

/// so(p+q) with k = so(p) x so(q) block diagonal and m the off-diagonal
/// blocks X_ij = E_{i,p+j} - E_{p+j,i}, index i*q + j.
GeometricPair grassmann_pair(std::size_t p, std::size_t q, const Rational& form_scale = make_rational(1, 2));

/// Replaces both bases by the given invertible recombinations:
/// new_m[a] = sum_b m_change(b, a) m[b], likewise for k.
GeometricPair change_basis(const GeometricPair& pair, const RationalMatrix& k_change,
                           const RationalMatrix& m_change);

SplittingResult check_splitting(const GeometricPair& pair);

/// rho(k_a) as a matrix on m coordinates.
RationalMatrix rho_k(const GeometricPair& pair, std::size_t a);
/// Metric g_ab on m from the invariant form.
RationalMatrix metric_m(const GeometricPair& pair);

struct CurvatureTensor {
  std::size_t dim = 0;
  /// at(i, j, k, l): coefficient of e_i in R(e_j, e_k) e_l.
  std::vector<Rational> components;
  RationalMatrix metric;

  Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return components[((i * dim + j) * dim + k) * dim + l];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return components[((i * dim + j) * dim + k) * dim + l];
  }
};

/// R(X,Y)Z = -[[X,Y],Z]; throws SplittingViolation if the pair does not split.
CurvatureTensor curvature_from_pair(const GeometricPair& pair);

/// Curvature as an element of End(m) (x) End(m): entry ((c,d),(l,k)) is
/// sum_j g^{dj} R^c_{jkl}.
RationalMatrix curvature_operator(const CurvatureTensor& r);

/// t^ = sum (Gamma_k^{-1})_ab rho(k_a) (x) rho(k_b); throws SingularGram.
RationalMatrix represented_casimir_k(const GeometricPair& pair);

/// The unique c with lhs = c * rhs; throws NoProportionality.
Rational proportionality_constant(const RationalMatrix& lhs, const RationalMatrix& rhs);

/// Constant c* with curvature_operator = c* t^; throws NoProportionality.
Rational verify_curvature_casimir(const GeometricPair& pair);

}  // namespace ybe
