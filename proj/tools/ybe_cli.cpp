// Command-line front end: list, build, verify, expand, fit, grassmann, run.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ybe/catalog.hpp"
#include "ybe/errors.hpp"
#include "ybe/grassmann.hpp"
#include "ybe/jobs.hpp"
#include "ybe/semiclassical.hpp"

using namespace ybe;

namespace {

struct ParamFlags {
  std::optional<int> n, k, p, q;

  void add(CLI::App* cmd) {
    cmd->add_option("--n", n, "size parameter n");
    cmd->add_option("--k", k, "curvature sign k (sphere)");
    cmd->add_option("--p", p, "size parameter p");
    cmd->add_option("--q", q, "size parameter q");
  }

  std::map<std::string, int> params() const {
    std::map<std::string, int> out;
    if (n) out["n"] = *n;
    if (k) out["k"] = *k;
    if (p) out["p"] = *p;
    if (q) out["q"] = *q;
    return out;
  }
};

struct OutputFlags {
  std::string out = "-";
  std::string format = "json";
  bool no_timing = false;

  void add(CLI::App* cmd) {
    cmd->add_option("--out", out, "output path, - for stdout");
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--no-timing", no_timing, "write elapsed_ms as null");
  }
  ReportFormat report_format() const { return format == "text" ? ReportFormat::text : ReportFormat::json; }
};

struct SamplerFlags {
  std::optional<std::uint64_t> seed;
  int points = 5;

  void add(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "sampler seed (default: YBE_SEED or 0)");
    cmd->add_option("--points", points, "sample points");
  }
  SamplerConfig config() const;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("YBE_SEED");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string("YBE_SEED is not an integer: ") + env);
  return v;
}

SamplerConfig SamplerFlags::config() const {
  SamplerConfig cfg;
  cfg.seed = seed ? *seed : default_seed();
  cfg.num_points = points;
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int emit(const std::vector<VerificationReport>& reports, const OutputFlags& out) {
  write_output(out.out, emit_reports(reports, out.report_format(), !out.no_timing));
  return exit_code(reports);
}

RatFuncMatrix entry_R(const std::string& entry, const std::map<std::string, int>& params) {
  if (entry.rfind("grassmann", 0) == 0) {
    JobSpec probe{"qybe", entry, params};
    validate(probe);
    const std::size_t p = params.at("p"), q = params.at("q");
    if (entry == "grassmann") return compose_R(p, q).r;
    return compose_variant(p, q, entry == "grassmann-complex" ? AlgebraKind::complex : AlgebraKind::quaternion).r;
  }
  JobSpec probe{"qybe", entry, params};
  validate(probe);
  return assemble_R(CatalogEntry::from_params(parse_entry_id(entry), params)).r;
}

int cmd_list(const OutputFlags& out) {
  const auto entries = list_entries();
  if (out.format == "json") {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json j;
      j["entry"] = to_string(e.id);
      j["params"] = e.params;
      j["leg_dim"] = e.leg_dim;
      j["description"] = e.description;
      j["checks"] = checks_for(to_string(e.id));
      arr.push_back(j);
    }
    for (const char* g : {"grassmann", "grassmann-complex", "grassmann-quaternion"}) {
      Json j;
      j["entry"] = g;
      j["params"] = {"p", "q"};
      j["leg_dim"] = std::string(g) == "grassmann" ? "p*q" : std::string(g) == "grassmann-complex" ? "2*p*q" : "4*p*q";
      j["description"] = "composed R on p x q matrices";
      j["checks"] = checks_for(g);
      arr.push_back(j);
    }
    write_output(out.out, arr.dump(2) + "\n");
  } else {
    std::ostringstream s;
    for (const auto& e : entries) {
      std::string params;
      for (const auto& p : e.params) params += (params.empty() ? "" : ",") + p;
      s << to_string(e.id) << "  (" << params << ")  leg " << e.leg_dim << "  " << e.description << "\n";
    }
    s << "grassmann  (p,q)  leg p*q  composed R on p x q matrices\n";
    write_output(out.out, s.str());
  }
  return 0;
}

int cmd_build(const std::string& entry, const ParamFlags& pf, const std::string& what, const std::string& out) {
  const auto params = pf.params();
  Json j;
  if (what == "R") {
    j = matrix_to_json(entry_R(entry, params));
  } else {
    JobSpec probe{"qybe", entry, params};
    validate(probe);
    if (entry.rfind("grassmann", 0) == 0) throw UsageError("build: only R is available for " + entry);
    const auto e = CatalogEntry::from_params(parse_entry_id(entry), params);
    if (what == "G") j = matrix_to_json(build_GC_closed(e).g_hat);
    else if (what == "C") j = matrix_to_json(build_GC_closed(e).c_hat);
    else j = matrix_to_json(classical_r(e));
  }
  write_output(out, j.dump(2) + "\n");
  return 0;
}

int cmd_expand(const std::string& entry, const ParamFlags& pf, unsigned order, const std::string& out) {
  const SeriesRMatrix series = expand_R(entry_R(entry, pf.params()), order);
  if (out == "-") {
    Json arr = Json::array();
    for (unsigned k = 0; k <= order; ++k) arr.push_back({{"order", k}, {"matrix", matrix_to_json(series.coeffs[k])}});
    write_output(out, arr.dump(2) + "\n");
    return 0;
  }
  // One file per order in the output directory.
  std::filesystem::create_directories(out);
  for (unsigned k = 0; k <= order; ++k)
    write_output((std::filesystem::path(out) / ("M" + std::to_string(k) + ".json")).string(),
                 matrix_to_json(series.coeffs[k]).dump(2) + "\n");
  return 0;
}

int cmd_run(const std::string& path, unsigned threads, const OutputFlags& out) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(path + ": " + ex.what());
  }
  const RunManifest m = manifest_from_json(j);
  for (const auto& job : m.jobs) validate(job);
  const auto outcomes = run_manifest(m, threads);
  std::vector<VerificationReport> all;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (!o.error.empty()) std::cerr << "job " << i << ": " << o.error << "\n";
    if (!m.jobs[i].out.empty())
      write_output(m.jobs[i].out, emit_reports(o.reports, out.report_format(), !out.no_timing));
    all.insert(all.end(), o.reports.begin(), o.reports.end());
  }
  write_output(out.out, emit_reports(all, out.report_format(), !out.no_timing));
  return exit_code(outcomes);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of rational R-matrices on symmetric spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  OutputFlags out;
  ParamFlags pf;
  SamplerFlags sf;
  std::string entry, check, mode = "exact", what = "R", manifest, algebra = "real";
  unsigned order = 2, threads = 1;

  auto* list = app.add_subcommand("list", "list catalog entries");
  out.add(list);

  auto* build = app.add_subcommand("build", "emit R, G, C or r as matrix JSON");
  build->add_option("--entry", entry, "entry id")->required();
  pf.add(build);
  build->add_option("--what", what, "R, G, C or r")->check(CLI::IsMember({"R", "G", "C", "r"}));
  build->add_option("--out", out.out, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "run one check");
  verify->add_option("--entry", entry, "entry id")->required();
  verify->add_option("--check", check, "check id")->required();
  verify->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  verify->add_option("--order", order, "order for readoff");
  pf.add(verify);
  sf.add(verify);
  out.add(verify);

  auto* expand = app.add_subcommand("expand", "h-expansion coefficients M_0..M_N");
  expand->add_option("--entry", entry, "entry id")->required();
  expand->add_option("--order", order, "highest order N");
  expand->add_option("--out", out.out, "directory for M<k>.json, - for stdout");
  pf.add(expand);

  auto* fit = app.add_subcommand("fit", "recover the shift constant from QYBE");
  fit->add_option("--entry", entry, "entry id")->required();
  pf.add(fit);
  sf.add(fit);
  out.add(fit);

  auto* grass = app.add_subcommand("grassmann", "composed R on p x q matrices");
  grass->require_subcommand(1);
  auto* gverify = grass->add_subcommand("verify", "check the composed R");
  gverify->add_option("--p", pf.p, "rows")->required();
  gverify->add_option("--q", pf.q, "columns")->required();
  gverify->add_option("--check", check, "qybe, expansion, cybe-index, curvature-casimir or splitting")->required();
  gverify->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  gverify->add_option("--algebra", algebra, "real, complex or quaternion")
      ->check(CLI::IsMember({"real", "complex", "quaternion"}));
  sf.add(gverify);
  out.add(gverify);

  auto* run = app.add_subcommand("run", "run a JSON manifest");
  run->add_option("manifest", manifest, "manifest path")->required();
  run->add_option("--jobs", threads, "concurrent jobs")->check(CLI::PositiveNumber);
  out.add(run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) return cmd_list(out);
    if (*build) return cmd_build(entry, pf, what, out.out);
    if (*expand) return cmd_expand(entry, pf, order, out.out);
    if (*run) return cmd_run(manifest, threads, out);

    JobSpec job;
    job.params = pf.params();
    job.mode = parse_backend(mode);
    job.sampler = sf.config();
    job.order = order;
    if (*verify) {
      job.entry = entry;
      job.check = check;
    } else if (*fit) {
      job.entry = entry;
      job.check = "fit";
    } else {
      job.entry = algebra == "real" ? "grassmann" : "grassmann-" + algebra;
      job.check = check;
    }
    return emit(run_job(job), out);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
