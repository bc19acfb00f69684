#pragma once

// Uniform result container for every verification task.  Each item records
// what was expected, what was computed, and whether they agreed; the report
// as a whole passes when every item does.  Serializes to a stable JSON shape
// ({task, status, items, ms}) and to a human-readable text block.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace eigenkit {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

struct CheckItem {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string task;
  std::vector<CheckItem> items;
  std::int64_t ms = 0;
  bool explicitly_skipped = false;

  void add(std::string id, std::string expected, std::string computed, bool ok) {
    items.push_back(CheckItem{std::move(id), std::move(expected), std::move(computed), ok});
  }

  // Informational side-channel (discrepancies, caveats); rendered as an item
  // so it survives JSON round-trips, but never fails the report.
  void note(std::string id, std::string expected, std::string computed) {
    items.push_back(CheckItem{"note:" + std::move(id), std::move(expected), std::move(computed), true});
  }

  void merge(const VerificationReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool passed() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  Status status() const {
    if (explicitly_skipped) return Status::skipped;
    return passed() ? Status::pass : Status::fail;
  }

  std::size_t pass_count() const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.pass ? 1 : 0;
    return n;
  }
};

// JSON text with 2-space indentation and fixed key order
// (task, status, items, ms); parse_report inverts it exactly.
std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

// Array form for multi-report invocations; reports_from_json also accepts a
// single object and returns it as a one-element vector.
std::string reports_to_json(const std::vector<VerificationReport>& rs);
std::vector<VerificationReport> reports_from_json(const std::string& text);

std::string report_to_text(const VerificationReport& r);

}  // namespace eigenkit
