#ifndef FFRT_REPORT_HPP
#define FFRT_REPORT_HPP

#include <string>
#include <vector>

#include "ffrt/summand_catalog.hpp"
#include "ffrt/verifier.hpp"

namespace ffrt {

enum class ReportFormat { Text, Json };

// Serialized catalog report. JSON schema:
// {scenario, params, consistent, entries: [{kind, indices, frobenius_level,
//  twist, multiplicity, flag}], residual_degrees: [], runtime_ms}
std::string emit_catalog_report(const std::string& scenario,
                                const std::vector<SummandInstance>& entries, int n,
                                std::int64_t p, int r, ReportFormat format,
                                const std::vector<std::string>& notes = {},
                                long long runtime_ms = 0);

std::string emit_verify_report(const VerifyReport& rep, ReportFormat format);

}  // namespace ffrt

#endif
