#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ybe/catalog.hpp"
#include "ybe/lie.hpp"
#include "ybe/tensor.hpp"

namespace ybe {

enum class Backend { exact, sampled };
enum class Verdict { pass, fail, pole_retry_exhausted };

std::string to_string(Backend b);
std::string to_string(Verdict v);
/// Throws UsageError.
Backend parse_backend(std::string_view text);

struct SamplerConfig {
  std::uint64_t seed = 0;
  int num_points = 5;
  long numerator_bound = 256;
  long denominator_bound = 64;
  int max_retries = 32;
};

/// Seeded source of rationals p/q with |p| <= numerator_bound and
/// 1 <= q <= denominator_bound. The mapping from the raw 64-bit stream is
/// fixed here so runs replay identically everywhere.
class RationalSampler {
 public:
  explicit RationalSampler(const SamplerConfig& config);
  Rational next();
  /// Values for the listed variables, in order.
  Point next_point(const std::vector<Var>& vars);

 private:
  SamplerConfig config_;
  std::mt19937_64 engine_;
};

struct VerificationReport {
  std::string check;
  std::string entry;
  std::map<std::string, int> params;
  Backend backend = Backend::exact;
  Verdict verdict = Verdict::pass;
  std::optional<std::string> witness;
  std::optional<std::uint64_t> seed;
  std::vector<Point> points;
  double elapsed_ms = 0;
  /// Extra named results (scalar factor, fitted constant, ...).
  std::vector<std::pair<std::string, std::string>> details;

  bool passed() const { return verdict == Verdict::pass; }
};

/// Spectral arguments carried by the leg pairs (1,2), (1,3), (2,3), as
/// polynomials in u and v.
struct SpectralArgs {
  MultiPoly a12, a13, a23;
  /// lambda_i - lambda_j: u, u + v, v.
  static SpectralArgs difference();
};

/// [r12(u), r13(u+v)] + [r12(u), r23(v)] + [r13(u+v), r23(v)] = 0 for r(s)
/// on two equal legs.
VerificationReport check_cybe(const RatFuncMatrix& r, Backend backend, const SamplerConfig& sampler = {},
                              const SpectralArgs& args = SpectralArgs::difference());

/// Index form of CYBE for the curvature operator M = curvature_operator(R):
/// the four-term identity equivalent to [M12,M13] + [M12,M23] = 0, and its
/// mirror [M12,M23] + [M13,M23] = 0.
VerificationReport check_cybe_index(const CurvatureTensor& r);

/// R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u) for R(s, h).
VerificationReport check_qybe(const RatFuncMatrix& r, Backend backend, const SamplerConfig& sampler = {},
                              const SpectralArgs& args = SpectralArgs::difference());

/// Exact QYBE for leg factors already carrying their spectral arguments
/// (any variables); each is an operator on two equal legs.
VerificationReport check_qybe_legs(const RatFuncMatrix& r12, const RatFuncMatrix& r13, const RatFuncMatrix& r23);

struct IdentityTerm {
  Rational coeff;
  /// Factor names such as "G12", "C13", applied left to right.
  std::vector<std::string> factors;
};

struct IdentityChain {
  std::string letter;
  /// Every term equals the next one.
  std::vector<IdentityTerm> terms;
};

/// The chains (a)-(k) for the entry, with the entry-specific (a), (b).
/// Throws ParamOutOfRange for entries without a stated suite.
std::vector<IdentityChain> identity_suite(const CatalogEntry& entry);

/// One report per identity letter.
std::vector<VerificationReport> check_identity_suite(const CatalogEntry& entry);
/// Same, on arbitrary G^ and C^ with a given chain list.
std::vector<VerificationReport> check_identity_suite(const RationalMatrix& g_hat, const RationalMatrix& c_hat,
                                                     const std::vector<IdentityChain>& chains);

/// R(s) R(-s) = f id; f is reported as detail "factor" on success.
VerificationReport check_unitarity(const RatFuncMatrix& r);

}  // namespace ybe
