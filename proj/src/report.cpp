#include "ybe/report.hpp"

#include <cstdio>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

Json vars_json() {
  Json v = Json::array();
  for (Var x : {Var::s, Var::u, Var::v, Var::h}) v.push_back(std::string(1, var_name(x)));
  return v;
}

template <class T, class F>
Json matrix_json(const LegMatrix<T>& m, const char* ring, F&& text) {
  Json j;
  j["dims"] = m.dims();
  j["ring"] = ring;
  j["vars"] = vars_json();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (!is_zero(m(r, c))) entries.push_back(Json::array({r, c, text(m(r, c))}));
  j["entries"] = std::move(entries);
  return j;
}

Json point_json(const Point& p) {
  Json j = Json::object();
  for (const auto& [x, value] : p) j[std::string(1, var_name(x))] = to_string(value);
  return j;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

Json params_to_json(const std::map<std::string, int>& params) {
  // Catalog order first, anything else after.
  static const char* const kOrder[] = {"n", "k", "p", "q"};
  Json j = Json::object();
  for (const char* k : kOrder)
    if (auto it = params.find(k); it != params.end()) j[k] = it->second;
  for (const auto& [k, v] : params)
    if (!j.contains(k)) j[k] = v;
  return j;
}

namespace {

std::string params_text(const std::map<std::string, int>& params) {
  std::string out;
  const Json ordered = params_to_json(params);
  for (const auto& [k, v] : ordered.items())
    out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v.get<int>());
  return out;
}

}  // namespace

Json matrix_to_json(const RatFuncMatrix& m) {
  return matrix_json(m, "ratfunc", [](const RatFunc& x) { return x.to_string(); });
}

Json matrix_to_json(const RationalMatrix& m) {
  return matrix_json(m, "rational", [](const Rational& x) { return to_string(x); });
}

RatFuncMatrix matrix_from_json(const Json& j) {
  try {
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    const std::string ring = j.at("ring").get<std::string>();
    if (ring != "ratfunc" && ring != "rational") throw ParseError("unknown ring '" + ring + "'");
    RatFuncMatrix m(dims);
    for (const auto& e : j.at("entries")) {
      const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
      if (r >= m.size() || c >= m.size()) throw ParseError("entry index out of range");
      const std::string text = e.at(2).get<std::string>();
      m(r, c) = ring == "rational" ? RatFunc(MultiPoly(parse_rational(text))) : RatFunc::parse(text);
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("matrix json: ") + ex.what());
  }
}

Json report_to_json(const VerificationReport& rep, bool with_timing) {
  Json j;
  j["check"] = rep.check;
  j["entry"] = rep.entry;
  j["params"] = params_to_json(rep.params);
  j["backend"] = to_string(rep.backend);
  j["verdict"] = to_string(rep.verdict);
  j["elapsed_ms"] = with_timing ? Json(rep.elapsed_ms) : Json(nullptr);
  j["seed"] = rep.seed ? Json(*rep.seed) : Json(nullptr);
  j["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
  if (!rep.points.empty()) {
    Json pts = Json::array();
    for (const auto& p : rep.points) pts.push_back(point_json(p));
    j["points"] = std::move(pts);
  }
  if (!rep.details.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : rep.details) d[k] = v;
    j["details"] = std::move(d);
  }
  return j;
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport rep;
    rep.check = j.at("check").get<std::string>();
    rep.entry = j.at("entry").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) rep.params[k] = v.get<int>();
    rep.backend = parse_backend(j.at("backend").get<std::string>());
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "pass") rep.verdict = Verdict::pass;
    else if (verdict == "fail") rep.verdict = Verdict::fail;
    else if (verdict == "pole-retry-exhausted") rep.verdict = Verdict::pole_retry_exhausted;
    else throw ParseError("unknown verdict '" + verdict + "'");
    if (j.contains("elapsed_ms") && !j["elapsed_ms"].is_null()) rep.elapsed_ms = j["elapsed_ms"].get<double>();
    if (!j.at("seed").is_null()) rep.seed = j["seed"].get<std::uint64_t>();
    if (!j.at("witness").is_null()) rep.witness = j["witness"].get<std::string>();
    if (j.contains("points"))
      for (const auto& p : j["points"]) {
        Point pt;
        for (const auto& [k, v] : p.items()) pt[parse_var(k.at(0))] = parse_rational(v.get<std::string>());
        rep.points.push_back(pt);
      }
    if (j.contains("details"))
      for (const auto& [k, v] : j["details"].items()) rep.details.emplace_back(k, v.get<std::string>());
    return rep;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("report json: ") + ex.what());
  } catch (const UsageError& ex) {
    throw ParseError(ex.what());
  }
}

std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format, bool with_timing) {
  if (format == ReportFormat::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, with_timing));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << pad("CHECK", 18) << pad("ENTRY", 22) << pad("PARAMS", 14) << pad("BACKEND", 9) << pad("VERDICT", 22)
      << "MS\n";
  for (const auto& r : reports) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    out << pad(r.check, 18) << pad(r.entry, 22) << pad(params_text(r.params), 14) << pad(to_string(r.backend), 9)
        << pad(to_string(r.verdict), 22) << (with_timing ? ms : "-") << "\n";
    if (r.witness) out << "    witness: " << *r.witness << "\n";
    for (const auto& [k, v] : r.details) out << "    " << k << ": " << v << "\n";
  }
  return out.str();
}

}  // namespace ybe
