#pragma once

#include "parind/config.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace parind {

struct ReportRow {
  std::string id;
  /// Which identity or property the row checks.
  std::string identity;
  bool pass = false;
  std::map<std::string, std::string> values;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  std::string suite;
  std::vector<ReportRow> rows;

  bool passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

Report run_restriction(const RunConfig& c);
Report run_characters(const RunConfig& c);
/// Requires n = 2 with the Borel blocks; ConfigError otherwise.
Report run_orbital(const RunConfig& c);
Report run_unipotent(const RunConfig& c);
Report run_saturate(const RunConfig& c);
std::vector<Report> run_all(const RunConfig& c);

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const std::vector<Report>& rs);
std::vector<Report> reports_from_json(const nlohmann::json& j);

/// One line per row: suite,id,identity,pass,values (values as a JSON object).
std::string to_csv(const std::vector<Report>& rs);
std::vector<Report> reports_from_csv(const std::string& text);

}  // namespace parind
