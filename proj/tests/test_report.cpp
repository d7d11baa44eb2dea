#include "doctest.h"
#include "ybe/catalog.hpp"
#include "ybe/errors.hpp"
#include "ybe/jobs.hpp"
#include "ybe/report.hpp"

using namespace ybe;

namespace {

JobSpec job(const char* check, const char* entry, std::map<std::string, int> params,
            Backend mode = Backend::exact) {
  JobSpec j;
  j.check = check;
  j.entry = entry;
  j.params = std::move(params);
  j.mode = mode;
  return j;
}

}  // namespace

TEST_CASE("matrix json round trip") {
  const auto r = assemble_R(CatalogEntry::sphere(2, 1)).r;
  const Json j = matrix_to_json(r);
  CHECK(j["dims"] == Json::array({2, 2}));
  CHECK(j["ring"] == "ratfunc");
  CHECK(j["vars"] == Json::array({"s", "u", "v", "h"}));
  // Nonzero entries only, sorted.
  std::size_t last = 0;
  for (const auto& e : j["entries"]) {
    const std::size_t key = e[0].get<std::size_t>() * r.size() + e[1].get<std::size_t>();
    CHECK(key >= last);
    last = key;
    CHECK(e[2].get<std::string>() != "0");
  }
  CHECK(matrix_from_json(j) == r);
  CHECK(matrix_from_json(Json::parse(j.dump())) == r);

  const auto g = build_GC_closed(CatalogEntry::cpn(1)).g_hat;
  const Json jg = matrix_to_json(g);
  CHECK(jg["ring"] == "rational");
  CHECK(matrix_from_json(jg) == to_ratfunc(g));
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dims":[2],"ring":"float","entries":[]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dims":[2],"ring":"rational","entries":[[5,0,"1"]]})")),
                  ParseError);
}

TEST_CASE("report json") {
  const auto reps = run_job(job("qybe", "sphere", {{"n", 3}, {"k", 1}}));
  REQUIRE(reps.size() == 1);
  const Json j = report_to_json(reps[0]);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check", "entry", "params", "backend", "verdict", "elapsed_ms", "seed",
                                         "witness"});
  CHECK(j["params"].dump() == R"({"n":3,"k":1})");
  CHECK(j["verdict"] == "pass");
  CHECK(j["witness"].is_null());
  CHECK(report_to_json(reps[0], false)["elapsed_ms"].is_null());

  const auto back = report_from_json(j);
  CHECK(back.check == "qybe");
  CHECK(back.params == reps[0].params);
  CHECK(back.verdict == Verdict::pass);

  const auto sampled = run_job(job("qybe", "cpn", {{"n", 1}}, Backend::sampled))[0];
  const auto js = report_to_json(sampled);
  CHECK(js["points"].size() == 5);
  CHECK(report_from_json(js).points == sampled.points);
}

TEST_CASE("emit_reports") {
  auto reps = run_job(job("qybe", "sphere", {{"n", 2}, {"k", 1}}));
  const Json one = Json::parse(emit_reports(reps, ReportFormat::json));
  CHECK(one.is_array());
  CHECK(one.size() == 1);
  reps.push_back(run_job(job("qybe", "sphere", {{"n", 3}, {"k", 0}}))[0]);
  CHECK(exit_code(reps) == 1);
  const std::string text = emit_reports(reps, ReportFormat::text);
  CHECK(text.find("VERDICT") != std::string::npos);
  CHECK(text.find("witness:") != std::string::npos);
  CHECK(emit_reports(reps, ReportFormat::json, false) == emit_reports(reps, ReportFormat::json, false));
}

TEST_CASE("job validation") {
  CHECK_THROWS_AS(validate(job("qybe", "sphere", {{"n", 0}, {"k", 1}})), UsageError);
  CHECK_THROWS_AS(validate(job("qybe", "torus", {})), UsageError);
  CHECK_THROWS_AS(validate(job("expansion", "sphere", {{"n", 2}, {"k", 1}})), UsageError);
  CHECK_THROWS_AS(validate(job("identities", "glpq_glgl", {{"p", 1}, {"q", 1}})), UsageError);
  CHECK_THROWS_AS(validate(job("qybe", "grassmann", {{"p", 3}, {"q", 3}})), UsageError);
  CHECK_THROWS_AS(validate(job("qybe", "grassmann", {{"p", 2}})), UsageError);
  CHECK_THROWS_AS(validate(job("cybe-index", "cpn", {{"n", 1}})), UsageError);
  CHECK_NOTHROW(validate(job("qybe", "grassmann-quaternion", {{"p", 2}, {"q", 1}})));
}

TEST_CASE("every entry and check is reachable") {
  const std::map<std::string, std::map<std::string, int>> params{
      {"sphere", {{"n", 3}, {"k", 1}}},  {"cpn", {{"n", 1}}},          {"hpn", {{"n", 1}}},
      {"glpq_glgl", {{"p", 2}, {"q", 1}}}, {"glpq_sopq", {{"p", 2}, {"q", 1}}}, {"gl2n_glnc", {{"n", 1}}},
      {"grassmann", {{"p", 2}, {"q", 1}}}, {"grassmann-complex", {{"p", 1}, {"q", 1}}},
      {"grassmann-quaternion", {{"p", 1}, {"q", 1}}}};
  for (const auto& entry : all_entries()) {
    for (const auto& check : checks_for(entry)) {
      CAPTURE(entry);
      CAPTURE(check);
      JobSpec j = job(check.c_str(), entry.c_str(), params.at(entry));
      const bool needs_suite = check == "identities" && entry != "sphere" && entry != "cpn" && entry != "hpn";
      const bool needs_pair = (check == "cybe-index" || check == "curvature-casimir") &&
                              entry != "sphere" && entry != "grassmann";
      if (needs_suite || needs_pair) {
        CHECK_THROWS_AS(run_job(j), UsageError);
        continue;
      }
      std::vector<VerificationReport> reps;
      CHECK_NOTHROW(reps = run_job(j));
      CHECK_FALSE(reps.empty());
      for (const auto& r : reps) {
        CHECK(r.entry == entry);
        CHECK(r.params == params.at(entry));
      }
    }
  }
}

TEST_CASE("run_job examples") {
  CHECK(run_job(job("qybe", "sphere", {{"n", 2}, {"k", 1}}))[0].passed());
  const auto fit = run_job(job("fit", "sphere", {{"n", 4}, {"k", 1}}))[0];
  CHECK(fit.passed());
  bool found = false;
  for (const auto& [k, v] : fit.details)
    if (k == "fitted") {
      CHECK(v == "1");
      found = true;
    }
  CHECK(found);
  const auto ids = run_job(job("identities", "cpn", {{"n", 1}}));
  CHECK(ids.size() == 11);
  CHECK(ids[0].passed());
  CHECK(ids[1].passed());
  // A mismatching read-off order is a verdict, not an error.
  CHECK(run_job(job("readoff", "hpn", {{"n", 1}}))[0].passed());
}

TEST_CASE("manifest round trip and replay") {
  const Json j = Json::parse(R"({"seed": 5, "jobs": [
    {"check": "qybe", "entry": "sphere", "params": {"n": 2, "k": 1}, "mode": "sampled"},
    {"check": "qybe", "entry": "sphere", "params": {"n": 3, "k": 0}, "mode": "sampled", "seed": 9},
    {"check": "cybe", "entry": "cpn", "params": {"n": 2}}]})");
  const RunManifest m = manifest_from_json(j);
  REQUIRE(m.jobs.size() == 3);
  CHECK(m.jobs[0].sampler.seed == 5);
  CHECK(m.jobs[1].sampler.seed == 9);
  CHECK(manifest_from_json(manifest_to_json(m)).jobs.size() == 3);

  const auto a = run_manifest(m, 3), b = run_manifest(m, 1);
  REQUIRE(a.size() == 3);
  CHECK(exit_code(a) == 1);
  auto dump = [](const std::vector<JobOutcome>& os) {
    std::vector<VerificationReport> all;
    for (const auto& o : os) all.insert(all.end(), o.reports.begin(), o.reports.end());
    return emit_reports(all, ReportFormat::json, false);
  };
  CHECK(dump(a) == dump(b));
  CHECK(a[0].reports[0].passed());
  CHECK_FALSE(a[1].reports[0].passed());

  CHECK_THROWS_AS(manifest_from_json(Json::parse(R"({"seed": 1})")), UsageError);
  RunManifest bad;
  bad.jobs.push_back(job("qybe", "sphere", {{"n", 0}, {"k", 1}}));
  CHECK(run_manifest(bad)[0].exit_code == 2);
}
