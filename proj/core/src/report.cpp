#include "gwp/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gwp/scalar.hpp"

namespace gwp {

namespace {

// Code points, so labels containing '·' line up.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace

bool numerically_close(double a, double b, double rel, double abs_floor) {
  double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(rel * scale, abs_floor);
}

bool Report::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.verified; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["mode"] = mode;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["label"] = r.label;
    row["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
    row["numeric"] = r.numeric ? nlohmann::ordered_json(*r.numeric) : nlohmann::ordered_json(nullptr);
    row["verified"] = r.verified;
    doc["rows"].push_back(std::move(row));
  }
  doc["verdicts"] = verdicts;
  doc["warnings"] = warnings;
  return doc.dump(2) + "\n";
}

std::string Report::to_table() const {
  std::size_t w_label = 5, w_exact = 5, w_numeric = 7;
  std::vector<std::string> numerics;
  for (const auto& r : rows) {
    numerics.push_back(r.numeric ? format_double(*r.numeric) : "-");
    w_label = std::max(w_label, display_width(r.label));
    w_exact = std::max(w_exact, r.exact ? display_width(*r.exact) : 1);
    w_numeric = std::max(w_numeric, numerics.back().size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, display_width(s)), ' '); };

  std::ostringstream out;
  out << command << " (mode: " << mode << ")\n";
  out << pad("label", w_label) << "  " << pad("exact", w_exact) << "  " << pad("numeric", w_numeric)
      << "  verified\n";
  out << std::string(w_label + w_exact + w_numeric + 14, '-') << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << pad(r.label, w_label) << "  " << pad(r.exact.value_or("-"), w_exact) << "  "
        << pad(numerics[i], w_numeric) << "  " << (r.verified ? "yes" : "NO") << "\n";
  }
  for (const auto& v : verdicts) out << "verdict: " << v << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace gwp
