#pragma once

#include <string>
#include <vector>

namespace tanaka::report {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string source;
};

enum class Status { Pass, Fail, Error };
std::string status_text(Status s);

struct Report {
  std::string command;
  std::vector<Check> checks;
  std::string error;  // set when the command could not run

  Status status() const;
  void add(std::string name, std::string expected, std::string actual, bool pass, std::string source);
  // Convenience: pass iff expected == actual.
  void add_equal(std::string name, std::string expected, std::string actual, std::string source);
  void append(const Report& other);
  std::size_t failures() const;
};

// One line per check plus a status line.
std::string render_text(const Report& r);

}  // namespace tanaka::report
