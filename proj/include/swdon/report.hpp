#pragma once

#include "swdon/relations.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace swdon {

using ReportJson = nlohmann::ordered_json;

/// Report skeleton: schema_version, command echo and manifold name.
ReportJson report_header(const std::string& command, const std::vector<std::string>& argv,
                         const std::string& manifold);

ReportJson to_json(const Rational& v);
ReportJson to_json(const CohClass& c);
/// {"variables": [...], "order": n, "terms": [{"exponents": [...], "coefficient": "p/q"}, ...]}
ReportJson to_json(const Jet& jet);
ReportJson to_json(const VanishingOrder& order);
ReportJson to_json(const ValidationReport& report);
ReportJson to_json(const SstReport& report);
ReportJson to_json(const DvanishReport& report);
ReportJson to_json(const BoundReport& report);
ReportJson to_json(const RegionDescription& region);

/// Inverse of to_json(Rational).
Rational rational_from_json(const ReportJson& node);

}  // namespace swdon
