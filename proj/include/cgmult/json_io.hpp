#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "cgmult/cg_exact.hpp"
#include "cgmult/oracle.hpp"

namespace cgm {

nlohmann::json to_json(const CGValue& v);
nlohmann::json to_json(const CGCertificate& cert);
nlohmann::json to_json(const CaseRecord& rec);
nlohmann::json to_json(const TheoremReport& report);

/// Human-readable fixed-width table of the sweep.
std::string report_to_text(const TheoremReport& report);

/// Row-major JSON array-of-arrays.
nlohmann::json matrix_to_json(const Mat& M);

}  // namespace cgm
