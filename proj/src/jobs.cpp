#include "ybe/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ybe/catalog.hpp"
#include "ybe/errors.hpp"
#include "ybe/grassmann.hpp"
#include "ybe/lie.hpp"
#include "ybe/semiclassical.hpp"

namespace ybe {

const char* const kVersion = "0.1.0";

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::string> kCatalogChecks{"cybe",        "cybe-casimir", "qybe",      "identities",
                                              "unitarity",   "crosscheck",   "splitting", "classical-limit",
                                              "readoff",     "fit",          "cybe-index", "curvature-casimir"};
const std::vector<std::string> kGrassmannChecks{"qybe", "expansion", "cybe-index", "curvature-casimir", "splitting"};
const std::vector<std::string> kVariantChecks{"qybe"};

// d*p*q bound for composed legs, matching the catalog's leg bound.
constexpr int kMaxComposedLeg = 8;

bool is_grassmann(const std::string& entry) { return entry.rfind("grassmann", 0) == 0; }

AlgebraKind variant_algebra(const std::string& entry) {
  if (entry == "grassmann") return AlgebraKind::real;
  if (entry == "grassmann-complex") return AlgebraKind::complex;
  if (entry == "grassmann-quaternion") return AlgebraKind::quaternion;
  throw UsageError("unknown entry '" + entry + "'");
}

std::pair<std::size_t, std::size_t> grassmann_params(const JobSpec& job) {
  for (const auto& [k, v] : job.params)
    if (k != "p" && k != "q") throw UsageError(job.entry + ": unexpected parameter '" + k + "'");
  if (!job.params.count("p") || !job.params.count("q")) throw UsageError(job.entry + ": parameters p and q required");
  const int p = job.params.at("p"), q = job.params.at("q");
  const int d = int(DivisionAlgebra::of(variant_algebra(job.entry)).dim());
  if (p < 1 || q < 1) throw UsageError(job.entry + ": p and q must be at least 1");
  if (d * p * q > kMaxComposedLeg)
    throw UsageError(job.entry + ": leg dimension " + std::to_string(d * p * q) + " exceeds " +
                     std::to_string(kMaxComposedLeg));
  return {std::size_t(p), std::size_t(q)};
}

CatalogEntry catalog_entry(const JobSpec& job) {
  try {
    auto e = CatalogEntry::from_params(parse_entry_id(job.entry), job.params);
    e.validate();
    return e;
  } catch (const ParamOutOfRange& ex) {
    throw UsageError(ex.what());
  }
}

// so(n) > so(n-1) for the sphere entry.
GeometricPair geometric_pair(const JobSpec& job) {
  if (is_grassmann(job.entry)) {
    const auto [p, q] = grassmann_params(job);
    return grassmann_pair(p, q);
  }
  const CatalogEntry e = catalog_entry(job);
  if (e.id != EntryId::sphere || e.n < 2)
    throw UsageError(job.check + ": needs a geometric pair (sphere with n >= 2, or grassmann)");
  return grassmann_pair(std::size_t(e.n - 1), 1);
}

VerificationReport simple(const std::string& check, bool ok, std::string witness = {}) {
  VerificationReport rep;
  rep.check = check;
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  if (!ok) rep.witness = std::move(witness);
  return rep;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + to_string(x);
  return out;
}

std::vector<VerificationReport> run_catalog(const JobSpec& job) {
  const CatalogEntry e = catalog_entry(job);
  const std::string& c = job.check;
  if (c == "cybe") return {check_cybe(classical_r(e), job.mode, job.sampler)};
  if (c == "cybe-casimir") {
    const auto gc = build_GC_closed(e);
    const RatFunc inv_s(MultiPoly(1), MultiPoly::variable(Var::s));
    auto rep = check_cybe(to_ratfunc(gc.c_hat).scaled(inv_s), job.mode, job.sampler);
    rep.check = c;
    return {rep};
  }
  if (c == "qybe") return {check_qybe(assemble_R(e).r, job.mode, job.sampler)};
  if (c == "identities") {
    try {
      return check_identity_suite(e);
    } catch (const ParamOutOfRange& ex) {
      throw UsageError(ex.what());
    }
  }
  if (c == "unitarity") return {check_unitarity(assemble_R(e).r)};
  if (c == "crosscheck") {
    const auto res = crosscheck_closed_vs_computed(e);
    return {simple(c, res.ok, "Mismatch: " + res.detail)};
  }
  if (c == "splitting") {
    const auto res = check_splitting(symmetric_pair_for(e));
    return {simple(c, res.ok, "SplittingViolation: " + res.detail)};
  }
  if (c == "classical-limit") return {check_classical_limit(assemble_R(e).r, classical_r(e))};
  if (c == "readoff") {
    if (job.order < 2) throw UsageError("readoff: order must be at least 2");
    read_off_Rk(e, job.order);
    auto rep = simple(c, true);
    rep.details.emplace_back("order", std::to_string(job.order));
    rep.details.emplace_back("coefficient", geometric_term(RationalMatrix::identity({1}), e.shift_constant(),
                                                           job.order)(0, 0).to_string());
    return {rep};
  }
  if (c == "fit") {
    const auto gc = build_GC_closed(e);
    const FitResult fit = fit_shift_constant(gc.g_hat, gc.c_hat, job.sampler);
    const Rational expected = e.shift_constant();
    VerificationReport rep;
    rep.check = c;
    rep.backend = Backend::exact;
    rep.seed = job.sampler.seed;
    rep.points = fit.points;
    std::string condition = fit.condition;
    std::replace(condition.begin(), condition.end(), 's', 'c');
    rep.details.emplace_back("condition", condition);
    rep.details.emplace_back("candidates", join(fit.candidates));
    rep.details.emplace_back("fitted", fit.any_value ? "any" : join(fit.verified));
    rep.details.emplace_back("expected", to_string(expected));
    if (fit.any_value) {
      rep.verdict = Verdict::fail;
      rep.witness = "NoSolution: QYBE holds for every c, the constant is not determined";
    } else if (fit.verified != std::vector<Rational>{expected}) {
      rep.verdict = Verdict::fail;
      rep.witness = "Mismatch: fitted {" + join(fit.verified) + "}, expected " + to_string(expected);
    } else {
      rep.verdict = Verdict::pass;
    }
    return {rep};
  }
  throw UsageError("unknown check '" + c + "' for entry " + job.entry);
}

std::vector<VerificationReport> run_geometric(const JobSpec& job) {
  const GeometricPair pair = geometric_pair(job);
  if (job.check == "cybe-index") return {check_cybe_index(curvature_from_pair(pair))};
  if (job.check == "curvature-casimir") {
    auto rep = simple(job.check, true);
    rep.details.emplace_back("constant", to_string(verify_curvature_casimir(pair)));
    return {rep};
  }
  const auto res = check_splitting(pair);
  return {simple(job.check, res.ok, "SplittingViolation: " + res.detail)};
}

std::vector<VerificationReport> run_grassmann(const JobSpec& job) {
  const AlgebraKind alg = variant_algebra(job.entry);
  const auto [p, q] = grassmann_params(job);
  if (job.check == "qybe") {
    const auto composed = alg == AlgebraKind::real ? compose_R(p, q) : compose_variant(p, q, alg);
    return {check_qybe_composed(composed, job.mode, job.sampler)};
  }
  if (job.check == "expansion") return {expansion_check_grassmann(p, q)};
  return run_geometric(job);
}

bool is_verdict_error(const Error& ex) {
  return dynamic_cast<const NoSolution*>(&ex) || dynamic_cast<const Mismatch*>(&ex) ||
         dynamic_cast<const NoProportionality*>(&ex) || dynamic_cast<const SplittingViolation*>(&ex) ||
         dynamic_cast<const IdentityFail*>(&ex) || dynamic_cast<const NotProportional*>(&ex);
}

std::string job_label(const JobSpec& job) {
  std::string s = job.check + " " + job.entry + "(";
  bool first = true;
  for (const auto& [k, v] : job.params) {
    s += (first ? "" : ",") + k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<std::string> all_entries() {
  std::vector<std::string> out;
  for (EntryId id : kAllEntries) out.push_back(to_string(id));
  out.insert(out.end(), {"grassmann", "grassmann-complex", "grassmann-quaternion"});
  return out;
}

std::vector<std::string> checks_for(const std::string& entry) {
  if (entry == "grassmann") return kGrassmannChecks;
  if (is_grassmann(entry)) {
    variant_algebra(entry);
    return kVariantChecks;
  }
  parse_entry_id(entry);
  return kCatalogChecks;
}

void validate(const JobSpec& job) {
  const auto checks = checks_for(job.entry);
  if (std::find(checks.begin(), checks.end(), job.check) == checks.end())
    throw UsageError("unknown check '" + job.check + "' for entry " + job.entry);
  if (is_grassmann(job.entry)) {
    grassmann_params(job);
  } else {
    const CatalogEntry e = catalog_entry(job);
    if ((job.check == "cybe-index" || job.check == "curvature-casimir") && (e.id != EntryId::sphere || e.n < 2))
      throw UsageError(job.check + ": needs a geometric pair (sphere with n >= 2, or grassmann)");
    if (job.check == "identities" && e.id != EntryId::sphere && e.id != EntryId::cpn && e.id != EntryId::hpn)
      throw UsageError("identities: no identity suite for " + job.entry);
    if (job.check == "readoff" && job.order < 2) throw UsageError("readoff: order must be at least 2");
  }
  if (job.sampler.num_points < 1 || job.sampler.max_retries < 1 || job.sampler.numerator_bound < 1 ||
      job.sampler.denominator_bound < 1)
    throw UsageError("sampler bounds must be positive");
}

std::vector<VerificationReport> run_job(const JobSpec& job) {
  validate(job);
  const auto start = Clock::now();
  std::vector<VerificationReport> reports;
  try {
    if (is_grassmann(job.entry))
      reports = run_grassmann(job);
    else if (job.check == "cybe-index" || job.check == "curvature-casimir")
      reports = run_geometric(job);
    else
      reports = run_catalog(job);
  } catch (const UsageError&) {
    throw;
  } catch (const Error& ex) {
    if (!is_verdict_error(ex)) throw InternalError(job_label(job) + ": " + ex.what());
    auto rep = simple(job.check, false, ex.what());
    reports = {rep};
  } catch (const std::exception& ex) {
    throw InternalError(job_label(job) + ": " + ex.what());
  }
  const double total = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (auto& rep : reports) {
    rep.entry = job.entry;
    rep.params = job.params;
    if (rep.check.empty()) rep.check = job.check;
    if (rep.elapsed_ms == 0) rep.elapsed_ms = total;
  }
  return reports;
}

Json job_to_json(const JobSpec& job) {
  Json j;
  j["check"] = job.check;
  j["entry"] = job.entry;
  j["params"] = params_to_json(job.params);
  j["mode"] = to_string(job.mode);
  j["seed"] = job.sampler.seed;
  j["points"] = job.sampler.num_points;
  if (job.check == "readoff") j["order"] = job.order;
  if (!job.out.empty()) j["out"] = job.out;
  return j;
}

JobSpec job_from_json(const Json& j, std::uint64_t default_seed) {
  try {
    JobSpec job;
    job.check = j.at("check").get<std::string>();
    job.entry = j.at("entry").get<std::string>();
    if (j.contains("params"))
      for (const auto& [k, v] : j["params"].items()) job.params[k] = v.get<int>();
    if (j.contains("mode")) job.mode = parse_backend(j["mode"].get<std::string>());
    job.sampler.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : default_seed;
    if (j.contains("points")) job.sampler.num_points = j["points"].get<int>();
    if (j.contains("order")) job.order = j["order"].get<unsigned>();
    if (j.contains("out")) job.out = j["out"].get<std::string>();
    return job;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("job json: ") + ex.what());
  }
}

Json manifest_to_json(const RunManifest& m) {
  Json j;
  j["version"] = m.version;
  j["seed"] = m.seed;
  j["jobs"] = Json::array();
  for (const auto& job : m.jobs) j["jobs"].push_back(job_to_json(job));
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  try {
    RunManifest m;
    m.seed = j.contains("seed") ? j["seed"].get<std::uint64_t>() : 0;
    m.version = j.contains("version") ? j["version"].get<std::string>() : kVersion;
    for (const auto& job : j.at("jobs")) m.jobs.push_back(job_from_json(job, m.seed));
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("manifest json: ") + ex.what());
  }
}

std::vector<JobOutcome> run_manifest(const RunManifest& m, unsigned threads) {
  std::vector<JobOutcome> outcomes(m.jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < m.jobs.size();) {
      try {
        outcomes[i].reports = run_job(m.jobs[i]);
        outcomes[i].exit_code = exit_code(outcomes[i].reports);
      } catch (const UsageError& ex) {
        outcomes[i].error = ex.what();
        outcomes[i].exit_code = 2;
      } catch (const std::exception& ex) {
        outcomes[i].error = ex.what();
        outcomes[i].exit_code = 3;
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(m.jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return outcomes;
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

int exit_code(const std::vector<JobOutcome>& outcomes) {
  int code = 0;
  for (const auto& o : outcomes) code = std::max(code, o.exit_code);
  return code;
}

}  // namespace ybe
