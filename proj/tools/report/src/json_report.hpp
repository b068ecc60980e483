#pragma once

#include <json.hpp>

#include "ncsimo/dof_region.hpp"
#include "ncsimo/report.hpp"
#include "ncsimo_report/suites.hpp"

namespace ncsimo::json_report {

using nlohmann::ordered_json;

ordered_json to_json(const BoundReport& r);
ordered_json to_json(const DofRegion& r);
ordered_json to_json(const suite::Check& c);
ordered_json to_json(const suite::SuiteResult& s);
// Finite doubles as numbers, everything else as null.
ordered_json number(double x);

}  // namespace ncsimo::json_report
