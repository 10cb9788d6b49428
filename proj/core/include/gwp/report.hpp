#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gwp {

struct ReportRow {
  std::string label;
  std::optional<std::string> exact;
  std::optional<double> numeric;
  bool verified = true;
};

struct Report {
  std::string command;
  std::string mode;
  std::vector<ReportRow> rows;
  std::vector<std::string> verdicts;
  std::vector<std::string> warnings;

  bool all_verified() const;

  /// {"command", "mode", "rows": [{"label", "exact", "numeric", "verified"}],
  ///  "verdicts", "warnings"}, keys in that order. Deterministic.
  std::string to_json() const;
  std::string to_table() const;
};

/// |a - b| <= max(rel · max(|a|, |b|), abs_floor).
bool numerically_close(double a, double b, double rel = 1e-9, double abs_floor = 1e-12);

}  // namespace gwp
