#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybe/report.hpp"
#include "ybe/verify.hpp"

namespace ybe {

/// Raised for failures that are not a verdict: an unexpected module error,
/// wrapped with the job it came from.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string check;
  std::string entry;
  std::map<std::string, int> params;
  Backend mode = Backend::exact;
  SamplerConfig sampler;
  /// Expansion order for readoff.
  unsigned order = 2;
  /// Report destination for manifest jobs; empty means none.
  std::string out;
};

struct RunManifest {
  std::uint64_t seed = 0;
  std::string version;
  std::vector<JobSpec> jobs;
};

extern const char* const kVersion;

/// Checks accepted by the entry kind ("sphere", ..., "grassmann",
/// "grassmann-complex", "grassmann-quaternion").
std::vector<std::string> checks_for(const std::string& entry);
std::vector<std::string> all_entries();

/// Throws UsageError for an unknown check, entry or parameter set.
void validate(const JobSpec& job);

/// Dispatches to the owning module. Verdict-type errors (no solution,
/// mismatch, ...) become fail reports; parameter errors raise UsageError;
/// anything else raises InternalError.
std::vector<VerificationReport> run_job(const JobSpec& job);

Json job_to_json(const JobSpec& job);
/// Missing "seed" falls back to default_seed. Throws UsageError.
JobSpec job_from_json(const Json& j, std::uint64_t default_seed);
Json manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const Json& j);

struct JobOutcome {
  std::vector<VerificationReport> reports;
  /// Set when the job raised instead of reporting.
  std::string error;
  int exit_code = 0;
};

/// Runs up to `threads` jobs at a time; outcomes follow manifest order.
std::vector<JobOutcome> run_manifest(const RunManifest& m, unsigned threads = 1);

/// 0 all pass, 1 some check failed, 2 usage error, 3 internal error.
int exit_code(const std::vector<VerificationReport>& reports);
int exit_code(const std::vector<JobOutcome>& outcomes);

}  // namespace ybe
