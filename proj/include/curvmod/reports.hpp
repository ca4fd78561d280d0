#pragma once

#include <string>

#include "json.hpp"

#include "curvmod/curvature.hpp"
#include "curvmod/kostant.hpp"

namespace curvmod {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::ordered_json report_header(const std::string& command, const std::string& mode);

nlohmann::ordered_json curvature_report_json(const CurvatureReport& rep);

// Full pipeline for the spinor algebras: the curvature report on the named
// representation plus the graded checks on the matching one-grading of e6
// (node 1 for the even parity, node 6 for the odd one).
nlohmann::ordered_json full_report(const std::string& algebra);

nlohmann::ordered_json kmodule_report(const std::string& algebra);
nlohmann::ordered_json prolong_report(const std::string& algebra);
nlohmann::ordered_json cohomology_report(const std::string& algebra, int node, int degree,
                                         RankMode mode,
                                         const std::vector<std::uint64_t>& primes);
nlohmann::ordered_json kostant_report(const std::string& type, int node, int degree);

} // namespace curvmod
