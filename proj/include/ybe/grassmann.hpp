#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybe/catalog.hpp"
#include "ybe/lie.hpp"
#include "ybe/verify.hpp"

namespace ybe {

/// m = Hom(R^q, R^p) with basis E_ij, index i*q + j, and its tensor powers
/// reshaped into p^l x q^l arrays.
class GrassmannSpace {
 public:
  /// Throws ParamOutOfRange unless p, q >= 1 and 1 <= legs <= 3.
  GrassmannSpace(std::size_t p, std::size_t q, std::size_t legs);

  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t legs() const { return legs_; }
  /// (pq)^l.
  std::size_t size() const { return rows_ * cols_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// ((i1,j1),...,(il,jl)) -> ((i1..il), (j1..jl)).
  std::pair<std::size_t, std::size_t> split(std::size_t index) const;
  std::size_t join(std::size_t row, std::size_t col) const;

  /// Row-major p^l x q^l array of a vector on m^(x)l, and back.
  template <class T>
  std::vector<T> reshape(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      const auto [r, c] = split(a);
      out[r * cols_ + c] = v[a];
    }
    return out;
  }
  template <class T>
  std::vector<T> unreshape(const std::vector<T>& arr) const {
    std::vector<T> out(arr.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[join(r, c)] = arr[r * cols_ + c];
    return out;
  }

 private:
  std::size_t p_, q_, legs_, rows_, cols_;
};

GrassmannSpace build_leg_maps(std::size_t p, std::size_t q, std::size_t legs);

struct ComposedRMatrix {
  std::size_t p = 0, q = 0;
  AlgebraKind algebra = AlgebraKind::real;
  RatFuncMatrix r_p;
  RatFuncMatrix r_q;
  /// V -> R^p V R^q on m (x) m, legs of dimension d*p*q.
  RatFuncMatrix r;
};

/// Composition for factors on (K^p)^(x)2 and (K^q)^(x)2, realified:
/// R^p acts by left multiplication and R^q by right multiplication on
/// m = K^(p x q). Throws DimensionMismatch.
ComposedRMatrix compose(const RatFuncMatrix& r_p, const RatFuncMatrix& r_q, std::size_t p, std::size_t q,
                        AlgebraKind algebra = AlgebraKind::real);

/// Sphere factors with n = p and n = q. Throws ParamOutOfRange.
ComposedRMatrix compose_R(std::size_t p, std::size_t q, int k_curv = 1);

/// Projective factors (cpn or hpn) at sizes p and q.
ComposedRMatrix compose_variant(std::size_t p, std::size_t q, AlgebraKind algebra);

/// Direct QYBE on the composed matrices.
VerificationReport check_qybe_grassmann(std::size_t p, std::size_t q, Backend backend,
                                        const SamplerConfig& sampler = {});
VerificationReport check_qybe_composed(const ComposedRMatrix& r, Backend backend, const SamplerConfig& sampler = {});

/// M0 = id, M1 = t^/s and M2 = (t^^2/2 - id)/s^2 for the composed R.
VerificationReport expansion_check_grassmann(std::size_t p, std::size_t q);

}  // namespace ybe
