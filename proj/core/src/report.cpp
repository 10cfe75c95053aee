#include "tanaka/report.hpp"

#include <algorithm>

namespace tanaka::report {

std::string status_text(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

Status Report::status() const {
  if (!error.empty()) return Status::Error;
  return failures() == 0 ? Status::Pass : Status::Fail;
}

void Report::add(std::string name, std::string expected, std::string actual, bool pass, std::string source) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), pass, std::move(source)});
}

void Report::add_equal(std::string name, std::string expected, std::string actual, std::string source) {
  bool pass = expected == actual;
  add(std::move(name), std::move(expected), std::move(actual), pass, std::move(source));
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (error.empty()) error = other.error;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += c.pass ? "[pass] " : "[FAIL] ";
    out += c.name + ": " + c.actual;
    if (!c.pass) out += " (expected " + c.expected + ")";
    out += "  {" + c.source + "}\n";
  }
  if (!r.error.empty()) out += "error: " + r.error + "\n";
  out += r.command + ": " + status_text(r.status()) + " (" + std::to_string(r.checks.size() - r.failures()) + "/" +
         std::to_string(r.checks.size()) + " checks)\n";
  return out;
}

}  // namespace tanaka::report
