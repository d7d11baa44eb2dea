#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ybe/tensor.hpp"
#include "ybe/verify.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

/// {"dims", "ring", "vars", "entries": [[row, col, "value"], ...]} with
/// nonzero entries only, sorted by (row, col).
Json matrix_to_json(const RatFuncMatrix& m);
Json matrix_to_json(const RationalMatrix& m);
/// Accepts both rings; throws ParseError.
RatFuncMatrix matrix_from_json(const Json& j);

/// Parameters in catalog order (n, k, p, q).
Json params_to_json(const std::map<std::string, int>& params);

/// elapsed_ms is written as null when with_timing is false, which makes the
/// output byte-stable.
Json report_to_json(const VerificationReport& rep, bool with_timing = true);
/// Throws ParseError.
VerificationReport report_from_json(const Json& j);

enum class ReportFormat { json, text };

/// JSON array, or a fixed-width table.
std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format,
                         bool with_timing = true);

}  // namespace ybe
