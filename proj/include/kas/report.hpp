#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kas {

/// A check is flagged (rather than passed/failed) when the implementation is
/// correct but the printed source text of the identity is not; flags never
/// affect exit status.
enum class CheckStatus { pass, fail, flagged };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::fail;
  std::string detail;

  friend bool operator==(const Check& a, const Check& b) = default;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> paper_anchors;

  void add(std::string id, std::string description, bool passed,
           std::string detail = "");
  void add_flagged(std::string id, std::string description, std::string detail);

  bool all_passed() const;  // no failed checks; flagged checks do not fail
  int failed_count() const;
  int flagged_count() const;

  /// Concatenates another report's checks and anchors into this one.
  void merge(const Report& other);

  friend bool operator==(const Report& a, const Report& b) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);

}  // namespace kas
