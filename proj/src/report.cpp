#include <eigenkit/report.hpp>

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace eigenkit {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

namespace {

ordered_json report_to_ordered(const VerificationReport& r) {
  ordered_json j;
  j["task"] = r.task;
  j["status"] = to_string(r.status());
  j["items"] = ordered_json::array();
  for (const auto& it : r.items) {
    ordered_json ji;
    ji["id"] = it.id;
    ji["expected"] = it.expected;
    ji["computed"] = it.computed;
    ji["pass"] = it.pass;
    j["items"].push_back(std::move(ji));
  }
  j["ms"] = r.ms;
  return j;
}

VerificationReport report_from_ordered(const ordered_json& j) {
  VerificationReport r;
  r.task = j.at("task").get<std::string>();
  r.explicitly_skipped = j.at("status").get<std::string>() == "skipped";
  for (const auto& ji : j.at("items")) {
    r.add(ji.at("id").get<std::string>(), ji.at("expected").get<std::string>(),
          ji.at("computed").get<std::string>(), ji.at("pass").get<bool>());
  }
  r.ms = j.at("ms").get<std::int64_t>();
  return r;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  return report_to_ordered(r).dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  return report_from_ordered(ordered_json::parse(text));
}

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_to_ordered(r));
  return arr.dump(2);
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  std::vector<VerificationReport> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(report_from_ordered(e));
  } else {
    out.push_back(report_from_ordered(j));
  }
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "[" << to_string(r.status()) << "] " << r.task << " (" << r.pass_count() << "/"
      << r.items.size() << " checks, " << r.ms << " ms)\n";
  for (const auto& it : r.items) {
    out << "  " << (it.pass ? "ok  " : "FAIL") << " " << it.id;
    if (it.pass && it.expected == it.computed) {
      out << ": " << it.computed << "\n";
    } else {
      out << ": expected " << it.expected << ", computed " << it.computed << "\n";
    }
  }
  return out.str();
}

}  // namespace eigenkit
