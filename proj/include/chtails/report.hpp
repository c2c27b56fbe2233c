#ifndef CHTAILS_REPORT_HPP
#define CHTAILS_REPORT_HPP

#include "chtails/scenarios.hpp"

#include <string>
#include <vector>

namespace chtails {

// Fixed column order of the series CSV.
extern const char* const series_csv_header;

std::string format_series_csv(const ExperimentReport& rep);
std::string format_report_json(const ExperimentReport& rep);

// x,u,h columns for the recorded snapshot with index row.
std::string format_profile_csv(const ExperimentReport& rep, std::size_t row);

// Writes the formats requested in rep.config.output into dir (created if
// missing): series.csv, report.json, profile_r<k>.csv.  Returns the paths.
std::vector<std::string> write_outputs(const ExperimentReport& rep, const std::string& dir);

} // namespace chtails

#endif
