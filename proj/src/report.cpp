#include "kas/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kas {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::flagged:
      return "flagged";
  }
  throw std::logic_error("unknown CheckStatus");
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") {
    return CheckStatus::pass;
  }
  if (s == "fail") {
    return CheckStatus::fail;
  }
  if (s == "flagged") {
    return CheckStatus::flagged;
  }
  throw std::invalid_argument("unknown check status: " + s);
}

void Report::add(std::string id, std::string description, bool passed,
                 std::string detail) {
  checks.push_back(Check{std::move(id), std::move(description),
                         passed ? CheckStatus::pass : CheckStatus::fail,
                         std::move(detail)});
}

void Report::add_flagged(std::string id, std::string description,
                         std::string detail) {
  checks.push_back(Check{std::move(id), std::move(description),
                         CheckStatus::flagged, std::move(detail)});
}

bool Report::all_passed() const { return failed_count() == 0; }

int Report::failed_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::fail;
  }));
}

int Report::flagged_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::flagged;
  }));
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& a : other.paper_anchors) {
    if (std::find(paper_anchors.begin(), paper_anchors.end(), a) ==
        paper_anchors.end()) {
      paper_anchors.push_back(a);
    }
  }
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"status", to_string(c.status)},
                      {"detail", c.detail}});
  }
  return nlohmann::json{{"suite", r.suite},
                        {"checks", std::move(checks)},
                        {"paper_anchors", r.paper_anchors}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back(Check{c.at("id").get<std::string>(),
                             c.at("description").get<std::string>(),
                             check_status_from_string(c.at("status").get<std::string>()),
                             c.at("detail").get<std::string>()});
  }
  r.paper_anchors = j.at("paper_anchors").get<std::vector<std::string>>();
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << "\n";
  for (const auto& c : r.checks) {
    const char* tag = c.status == CheckStatus::pass   ? "PASS"
                      : c.status == CheckStatus::fail ? "FAIL"
                                                      : "FLAG";
    os << "  [" << tag << "] " << c.id << " — " << c.description << "\n";
    if (!c.detail.empty()) {
      os << "         " << c.detail << "\n";
    }
  }
  const int failed = r.failed_count();
  const int flagged = r.flagged_count();
  os << "  " << (r.checks.size() - static_cast<std::size_t>(failed + flagged))
     << " passed, " << failed << " failed, " << flagged << " flagged\n";
  return os.str();
}

}  // namespace kas
