#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "tautcalc/exact.hpp"

namespace tautcalc::cli {

enum class Emit { kTable, kJson, kCsv };

enum class Status {
  kOk,
  kFail,
  /// Reported, never fails the run.
  kInfo,
};

using tautcalc::to_string;
std::string to_string(Status s);

struct Row {
  std::string section;
  std::string name;
  std::string value;
  std::string expected;
  Status status = Status::kInfo;
};

/// Ordered rows of values and checks, rendered as a table, JSON or CSV.
/// Rendering depends only on the rows, so equal rows give equal bytes.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// One line saying what a section verifies.
  void describe(const std::string& section, const std::string& text);
  void info(const std::string& section, const std::string& name, const std::string& value);
  void info(const std::string& section, const std::string& name, const Rational& value);
  bool check(const std::string& section, const std::string& name, const std::string& value,
             const std::string& expected);
  bool check(const std::string& section, const std::string& name, const Rational& value,
             const Rational& expected);
  bool check_true(const std::string& section, const std::string& name, bool ok,
                  const std::string& detail = "true");
  /// A failure raised by an exception inside a section.
  void fail(const std::string& section, const std::string& name, const std::string& message);

  /// Extra top-level JSON fields, written before "checks".
  nlohmann::ordered_json& payload() { return payload_; }

  bool ok() const;
  int failures() const;
  int checks() const;

  void render(std::ostream& out, Emit emit) const;
  /// "- expected / + computed" for every failed check.
  void write_diff(std::ostream& out) const;

 private:
  void render_table(std::ostream& out) const;
  void render_json(std::ostream& out) const;
  void render_csv(std::ostream& out) const;

  std::string command_;
  std::vector<Row> rows_;
  std::vector<std::pair<std::string, std::string>> descriptions_;
  nlohmann::ordered_json payload_ = nlohmann::ordered_json::object();
};

}  // namespace tautcalc::cli
