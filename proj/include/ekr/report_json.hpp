#pragma once

// JSON/CSV serialization of reports and search outcomes. Rationals are
// serialized as strings ("p" or "p/q") so nothing is squeezed through
// floating point.

#include "ekr/report.hpp"
#include "ekr/search.hpp"

#include <json.hpp>

#include <string>

namespace ekr {

nlohmann::json report_to_json(const LemmaReport& r);
nlohmann::json family_to_json(const SetFamily& f);
nlohmann::json outcome_to_json(const SearchOutcome& o);

std::string report_csv_header();
std::string report_csv_row(const LemmaReport& r);

}  // namespace ekr
